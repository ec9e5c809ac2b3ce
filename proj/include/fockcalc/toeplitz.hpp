#pragma once

// Exact Toeplitz action on the polynomial x exponential class.
//
// For a symbol term coef z^a conj(z)^b exp(z.c + conj(z).d) and holomorphic u,
//   T u (z) = coef * (d^b v)(z + d),   v(w) = w^a exp(w.c) u(w),
// which follows from P h(z) = <h, K_z> and conj(w)^b exp(conj(w).zeta)
// = d_zeta^b exp(conj(w).zeta). The operators are generally unbounded; the
// engine computes the densely defined action on this invariant class only.

#include <vector>

#include "fockcalc/berezin.hpp"
#include "fockcalc/symbol.hpp"

namespace fock {

HoloSymbol toeplitz_apply(const Symbol& phi, const HoloSymbol& u);

/// chain[0] o ... o chain[m-1] applied to u (rightmost first).
HoloSymbol apply_chain(const OpChain& chain, const HoloSymbol& u);

/// z^alpha / sqrt(alpha!)
HoloSymbol normalized_monomial(const MultiIndex& alpha);

struct BasisResidual {
  MultiIndex alpha;
  double residual = 0;
  double norm_a = 0;  // coefficient norm of A e_alpha
};

struct EqualityReport {
  double max_residual = 0;
  MultiIndex worst;
  bool pass = false;
  std::vector<BasisResidual> per_basis;  // graded-lex order
};

inline constexpr int kDefaultBasisDegree = 6;
inline constexpr double kDefaultOperatorTol = 1e-9;

/// Compares two chains on e_alpha for |alpha| <= max_degree. The residual per
/// alpha is |A e - B e| / max(1, |A e|) in coefficient norm.
EqualityReport op_equal_on_basis(const OpChain& a, const OpChain& b,
                                 int max_degree = kDefaultBasisDegree,
                                 double tol = kDefaultOperatorTol);

/// Pluriharmonic data phi = f + conj(g), psi = u + conj(v).
struct PluriharmonicPair {
  HoloSymbol f, g, u, v;

  int dim() const { return f.dim(); }
  Symbol phi() const;
  Symbol psi() const;
};

/// u conj(g) + f u + conj(g) conj(v) + v*(conj(z) - d) f, the symbol h of T_phi T_psi.
Symbol brown_halmos_h(const HoloSymbol& f, const HoloSymbol& g, const HoloSymbol& u,
                      const HoloSymbol& v);

/// (u conj(g) - f conj(v)) - (g*(conj(z)-d) u - v*(conj(z)-d) f). Zero exactly
/// when T_{f+conj(g)} and T_{u+conj(v)} commute; the commutator equals T_defect.
Symbol commutator_defect(const HoloSymbol& f, const HoloSymbol& g, const HoloSymbol& u,
                         const HoloSymbol& v);

}  // namespace fock
