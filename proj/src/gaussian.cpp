#include "fockcalc/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include "expand.hpp"

namespace fock {

Complex gaussian_moment(const MomentQuery& q) {
  const int n = q.a.dim();
  if (q.b.dim() != n || q.lambda.dim() != n || q.mu.dim() != n)
    throw DimensionError("gaussian_moment: mismatched query dimensions");
  if (q.a.max_entry() > kMaxExactExponent || q.b.max_entry() > kMaxExactExponent)
    throw std::overflow_error("gaussian_moment: exponent cap of 20 exceeded");

  Complex prod = 1.0;
  for (int k = 0; k < n; ++k) {
    const int a = q.a[k];
    const int b = q.b[k];
    Complex sum{};
    for (int j = 0; j <= std::min(a, b); ++j) {
      const double comb = static_cast<double>(binomial(a, j)) * static_cast<double>(binomial(b, j)) *
                          static_cast<double>(factorial(j));
      sum += comb * detail::ipow(q.mu[k], a - j) * detail::ipow(q.lambda[k], b - j);
    }
    prod *= sum;
  }
  const Complex e = dot(q.lambda, q.mu);
  return e == Complex{} ? prod : prod * std::exp(e);
}

Complex gaussian_integral(const Symbol& s) {
  Complex v{};
  for (const auto& t : s.terms()) v += t.coef * gaussian_moment({t.a, t.b, t.c, t.d});
  return v;
}

Complex fock_inner(const HoloSymbol& f, const HoloSymbol& g) {
  if (f.dim() != g.dim()) throw DimensionError("fock_inner: dimension mismatch");
  Complex v{};
  for (const auto& x : f.symbol().terms())
    for (const auto& y : g.symbol().terms())
      v += x.coef * std::conj(y.coef) * gaussian_moment({x.a, y.a, x.c, y.c.conj()});
  return v;
}

double fock_norm(const HoloSymbol& f) { return std::sqrt(std::max(0.0, fock_inner(f, f).real())); }

}  // namespace fock
