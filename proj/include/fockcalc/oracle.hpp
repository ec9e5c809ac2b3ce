#pragma once

// Independent numerical checks. Nothing in the main computation path calls
// into this module; it exists to validate the closed forms.

#include <vector>

#include "fockcalc/symbol.hpp"

namespace fock {

inline constexpr int kMaxQuadOrder = 64;
inline constexpr int kDefaultQuadOrder1 = 40;
inline constexpr int kDefaultQuadOrder2 = 24;
/// Gaussian-domination margin for quadrature integrands.
inline constexpr double kQuadParamBound = 2.0;

struct GaussHermiteRule {
  std::vector<double> nodes;  // ascending
  std::vector<double> weights;  // for weight function exp(-x^2)
};

/// Nodes and weights by Newton iteration on orthonormal Hermite recurrences.
GaussHermiteRule gauss_hermite(int order);

/// int s dmu by tensor Gauss-Hermite quadrature on R^{2n}; n <= 2.
Complex quad_integral(const Symbol& s, int order);
/// Default order for the symbol's dimension.
Complex quad_integral(const Symbol& s);

/// <s k_zeta, k_zeta> by quadrature.
Complex quad_berezin(const Symbol& s, const CVec& zeta, int order);

inline constexpr double kDefaultFourierHalfWidth = 8.0;
inline constexpr int kDefaultFourierPoints = 256;
inline constexpr int kMinFourierPoints = 64;
inline constexpr double kFourierParamBound = 1.0;

struct FourierCheck {
  double max_residual = 0;
  Complex worst_point;
  size_t points_compared = 0;
};

/// Rebuilds u with B[u] = f conj(g) from the inverse Fourier transform
///   u(zeta) = exp(|zeta|^2) (4 pi)^{-1} int G(x) exp(-i Re(x conj(zeta))) dV(x),
///   G(x) = exp(-|x|^2/4) f(i x/2) g*(i conj(x)/2),
/// on a uniform midpoint grid, and compares with sharp(f, g) at grid points
/// with |zeta| <= half_width/4. n = 1 only.
FourierCheck lemma_l1_check(const HoloSymbol& f, const HoloSymbol& g,
                            double half_width = kDefaultFourierHalfWidth,
                            int grid_points = kDefaultFourierPoints);

}  // namespace fock
