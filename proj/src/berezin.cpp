#include "fockcalc/berezin.hpp"

#include <cmath>

#include "expand.hpp"
#include "fockcalc/toeplitz.hpp"

namespace fock {

OpChain::OpChain(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("operator chain must be nonempty");
  n_ = symbols_.front().dim();
  for (const auto& s : symbols_)
    if (s.dim() != n_) throw DimensionError("operator chain has mixed dimensions");
}

Symbol berezin(const Symbol& s) {
  // B[s](zeta) = exp(-|zeta|^2) M(a, b, c + conj(zeta), d + zeta); per coordinate
  //   sum_j C(a,j) C(b,j) j! (d + zeta)^{a-j} (c + conj(zeta))^{b-j}
  // times exp(c.d) exp(zeta.c + conj(zeta).d).
  const int n = s.dim();
  std::vector<SymbolTerm> raw;
  std::vector<std::vector<detail::Factor>> per(n);
  std::vector<Complex> grid;
  for (const auto& t : s.terms()) {
    for (int k = 0; k < n; ++k) {
      const int a = t.a[k];
      const int b = t.b[k];
      const Complex ck = t.c[k];
      const Complex dk = t.d[k];
      // grid[p * (b+1) + q] collects the zeta^p conj(zeta)^q coefficient
      grid.assign(static_cast<size_t>((a + 1) * (b + 1)), Complex{});
      for (int j = 0; j <= std::min(a, b); ++j) {
        const double comb = static_cast<double>(binomial(a, j)) *
                            static_cast<double>(binomial(b, j)) * static_cast<double>(factorial(j));
        for (int p = 0; p <= a - j; ++p) {
          const Complex zp = comb * static_cast<double>(binomial(a - j, p)) * detail::ipow(dk, a - j - p);
          if (zp == Complex{}) continue;
          for (int q = 0; q <= b - j; ++q) {
            grid[p * (b + 1) + q] +=
                zp * static_cast<double>(binomial(b - j, q)) * detail::ipow(ck, b - j - q);
          }
        }
      }
      per[k].clear();
      for (int p = 0; p <= a; ++p)
        for (int q = 0; q <= b; ++q)
          if (grid[p * (b + 1) + q] != Complex{}) per[k].push_back({p, q, grid[p * (b + 1) + q]});
    }
    const Complex e = dot(t.c, t.d);
    detail::expand_tensor(per, e == Complex{} ? t.coef : t.coef * std::exp(e), t.c, t.d, raw);
  }
  return Symbol::canonical(n, std::move(raw));
}

Complex operator_berezin(const OpChain& chain, const CVec& zeta) {
  if (zeta.dim() != chain.dim()) throw DimensionError("operator_berezin: point dimension mismatch");
  const HoloSymbol image = apply_chain(chain, HoloSymbol::kernel(zeta));
  return sym_eval(image, zeta) * std::exp(-norm2(zeta));
}

}  // namespace fock
