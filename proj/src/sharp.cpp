#include "fockcalc/sharp.hpp"

#include <cmath>

namespace fock {

Symbol sharp(const HoloSymbol& f, const HoloSymbol& g) {
  const int n = f.dim();
  if (g.dim() != n) throw DimensionError("sharp: dimension mismatch");
  std::vector<SymbolTerm> raw;
  for (const auto& gt : g.symbol().terms()) {
    const CVec q = gt.c.conj();
    const HoloSymbol shifted = holo_shift(f, q);
    for (const MultiIndex& l : mi_lower_set(gt.a)) {
      const MultiIndex order = gt.a - l;
      const double sign = (order.total() % 2 == 0) ? 1.0 : -1.0;
      const Complex scale =
          std::conj(gt.coef) * sign * static_cast<double>(mi_binomial(gt.a, l));
      const Symbol deriv = sym_dz(shifted.symbol(), order);
      for (const auto& t : deriv.terms()) {
        SymbolTerm u = t;
        u.coef *= scale;
        u.b = u.b + l;
        u.d = u.d + q;
        raw.push_back(u);
      }
    }
  }
  return Symbol::canonical(n, std::move(raw));
}

}  // namespace fock
