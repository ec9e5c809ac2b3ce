#pragma once

#include <vector>

#include "fockcalc/symbol.hpp"

namespace fock::detail {

/// One factor coef * z_k^p * conj(z_k)^q of a per-coordinate expansion.
struct Factor {
  int p;
  int q;
  Complex coef;
};

/// Appends coef * prod_k (sum over per_coord[k]) * exp(z.c + conj(z).d),
/// multiplied out into terms.
void expand_tensor(const std::vector<std::vector<Factor>>& per_coord, Complex coef, const CVec& c,
                   const CVec& d, std::vector<SymbolTerm>& out);

/// x^k with 0^0 = 1.
Complex ipow(Complex x, int k);

}  // namespace fock::detail
