#include "fockcalc/random_symbols.hpp"

#include <cmath>

namespace fock {

double SymbolSampler::uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

int SymbolSampler::integer(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng_() % span);
}

Complex SymbolSampler::unit_disc() {
  while (true) {
    const Complex z{2 * uniform() - 1, 2 * uniform() - 1};
    if (std::norm(z) <= 1.0) return z;
  }
}

CVec SymbolSampler::ball(int n, double radius) {
  while (true) {
    CVec v(n);
    for (int k = 0; k < n; ++k) v[k] = unit_disc();
    if (v.norm() <= 1.0) return v * radius;
  }
}

HoloSymbol SymbolSampler::polynomial(int n, int max_degree, int max_terms) {
  while (true) {
    const int count = integer(1, max_terms);
    std::vector<SymbolTerm> raw;
    for (int t = 0; t < count; ++t) {
      MultiIndex a(n);
      const int deg = integer(0, max_degree);
      for (int j = 0; j < deg; ++j) ++a[integer(0, n - 1)];
      raw.push_back(SymbolTerm{unit_disc(), a, MultiIndex(n), CVec(n), CVec(n)});
    }
    HoloSymbol p(Symbol::canonical(n, std::move(raw)));
    if (!p.is_zero()) return p;
  }
}

HoloSymbol SymbolSampler::holo(int n, const RandomHoloSpec& spec) {
  while (true) {
    const int blocks = integer(1, spec.max_blocks);
    std::vector<SymbolTerm> raw;
    for (int b = 0; b < blocks; ++b) {
      const HoloSymbol p = polynomial(n, spec.max_degree, spec.max_terms);
      const CVec c = uniform() < spec.exp_probability ? ball(n, spec.param_bound) : CVec(n);
      for (auto t : p.symbol().terms()) {
        t.c = c;
        raw.push_back(t);
      }
    }
    HoloSymbol h(Symbol::canonical(n, std::move(raw)));
    if (!h.is_zero()) return h;
  }
}

PluriharmonicPair SymbolSampler::pluriharmonic(int n, const RandomHoloSpec& spec) {
  HoloSymbol f = holo(n, spec);
  HoloSymbol g = holo(n, spec);
  HoloSymbol u = holo(n, spec);
  HoloSymbol v = holo(n, spec);
  return {std::move(f), std::move(g), std::move(u), std::move(v)};
}

}  // namespace fock
