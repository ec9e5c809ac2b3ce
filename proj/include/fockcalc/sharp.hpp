#pragma once

#include "fockcalc/symbol.hpp"

namespace fock {

/// g*(conj(z) - d) f: the symbol u with B[u] = f conj(g), equivalently the
/// symbol of T_f T_{conj(g)}.
///
/// A g-term gamma w^i exp(w.r) contributes
///   conj(gamma) exp(conj(z).q) sum_{l<=i} C(i,l) conj(z)^l (-d)^{i-l} f(z - q),
/// with q = conj(r). d acts on z only, so it commutes with every conj(z)
/// factor. Linear in f, conjugate-linear in g.
Symbol sharp(const HoloSymbol& f, const HoloSymbol& g);

}  // namespace fock
