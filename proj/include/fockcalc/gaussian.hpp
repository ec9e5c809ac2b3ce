#pragma once

// Closed-form Gaussian moments against the normalized measure
// dmu(z) = pi^{-n} exp(-|z|^2) dV(z):
//
//   M(a, b, lam, mu) = int z^a conj(z)^b exp(z.lam + conj(z).mu) dmu
//                    = d_lam^a d_mu^b exp(lam.mu)
//
// lam.mu is bilinear. Callers own every conjugation.

#include "fockcalc/symbol.hpp"

namespace fock {

struct MomentQuery {
  MultiIndex a;
  MultiIndex b;
  CVec lambda;
  CVec mu;
};

Complex gaussian_moment(const MomentQuery& q);

/// int s dmu, summed termwise from gaussian_moment.
Complex gaussian_integral(const Symbol& s);

/// <f, g> in F^2.
Complex fock_inner(const HoloSymbol& f, const HoloSymbol& g);

/// sqrt(<f, f>)
double fock_norm(const HoloSymbol& f);

}  // namespace fock
