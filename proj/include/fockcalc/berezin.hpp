#pragma once

#include <vector>

#include "fockcalc/symbol.hpp"

namespace fock {

/// Ordered composition T_{phi_1} o ... o T_{phi_m}; the last symbol acts first.
class OpChain {
 public:
  OpChain(std::vector<Symbol> symbols);
  OpChain(std::initializer_list<Symbol> symbols) : OpChain(std::vector<Symbol>(symbols)) {}

  int dim() const { return n_; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

 private:
  std::vector<Symbol> symbols_;
  int n_;
};

/// Berezin transform as a symbol in zeta (reported with zeta in the role of z).
Symbol berezin(const Symbol& s);

/// exp(-|zeta|^2) * (chain K_zeta)(zeta) = <chain k_zeta, k_zeta>.
Complex operator_berezin(const OpChain& chain, const CVec& zeta);

}  // namespace fock
