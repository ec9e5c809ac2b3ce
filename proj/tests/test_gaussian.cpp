#include <doctest.h>

#include "fockcalc/gaussian.hpp"
#include "fockcalc/oracle.hpp"
#include "support.hpp"

using namespace fock;

TEST_CASE("moment examples") {
  const MultiIndex z0(1), one{1}, two{2};
  const CVec c0(1);
  CHECK(gaussian_moment({z0, z0, c0, c0}) == Complex{1.0});
  CHECK(std::abs(gaussian_moment({one, one, c0, c0}) - 1.0) < 1e-15);
  CHECK(std::abs(gaussian_moment({two, two, c0, c0}) - 2.0) < 1e-15);
  CHECK(std::abs(gaussian_moment({one, z0, c0, c0})) == 0.0);
  // integral of exp(z l + conj(z) m) is exp(l m)
  const Complex l{0.3, -0.4}, m{-0.2, 0.9};
  CHECK(std::abs(gaussian_moment({z0, z0, CVec{l}, CVec{m}}) - std::exp(l * m)) < 1e-15);
  // z exp(conj(z) m) integrates to m
  CHECK(std::abs(gaussian_moment({one, z0, c0, CVec{m}}) - m) < 1e-15);
  CHECK_THROWS_AS(gaussian_moment({MultiIndex{21}, z0, c0, c0}), std::overflow_error);
  CHECK_THROWS_AS(gaussian_moment({MultiIndex{1, 0}, z0, c0, c0}), DimensionError);
}

TEST_CASE("moments match Gauss-Hermite quadrature in one variable") {
  SymbolSampler rng(21);
  for (int i = 0; i < 60; ++i) {
    const MomentQuery q{MultiIndex{rng.integer(0, 6)}, MultiIndex{rng.integer(0, 6)}, CVec{rng.unit_disc()},
                        CVec{rng.unit_disc()}};
    const Symbol s = Symbol::monomial(1.0, q.a, q.b) * Symbol::exponential(q.lambda, q.mu);
    CHECK(std::abs(gaussian_moment(q) - quad_integral(s, 48)) < 1e-8);
  }
}

TEST_CASE("moments match quadrature in two variables") {
  SymbolSampler rng(22);
  for (int i = 0; i < 8; ++i) {
    const MomentQuery q{MultiIndex{rng.integer(0, 3), rng.integer(0, 3)},
                        MultiIndex{rng.integer(0, 3), rng.integer(0, 3)}, rng.ball(2, 0.7), rng.ball(2, 0.7)};
    const Symbol s = Symbol::monomial(1.0, q.a, q.b) * Symbol::exponential(q.lambda, q.mu);
    CHECK(std::abs(gaussian_moment(q) - quad_integral(s, 32)) < 1e-8);
  }
}

TEST_CASE("moment symmetries") {
  SymbolSampler rng(23);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + i % 3;
    MultiIndex a(n), b(n);
    for (int k = 0; k < n; ++k) {
      a[k] = rng.integer(0, 5);
      b[k] = rng.integer(0, 5);
    }
    const CVec l = rng.ball(n, 1.5), m = rng.ball(n, 1.5);
    const Complex x = gaussian_moment({a, b, l, m});
    const Complex y = gaussian_moment({b, a, m.conj(), l.conj()});
    CHECK(std::abs(std::conj(x) - y) <= 1e-12 * std::max(1.0, std::abs(x)));
  }
}

TEST_CASE("inner products of monomials and kernels") {
  for (const auto& a : mi_enumerate(2, 5))
    for (const auto& b : mi_enumerate(2, 5)) {
      const HoloSymbol za(Symbol::monomial(1.0, a, MultiIndex(2)));
      const HoloSymbol zb(Symbol::monomial(1.0, b, MultiIndex(2)));
      const Complex ip = fock_inner(za, zb);
      CHECK(std::abs(ip - (a == b ? static_cast<double>(mi_factorial(a)) : 0.0)) < 1e-12);
    }
  const CVec w{Complex{0.3, 0.2}, -0.5}, v{Complex{0, 1}, 0.25};
  // <K_w, K_v> = K_w(v) = exp(v . conj(w))
  CHECK(std::abs(fock_inner(HoloSymbol::kernel(w), HoloSymbol::kernel(v)) - std::exp(dot(v, w.conj()))) < 1e-14);
  CHECK(std::abs(fock_norm(HoloSymbol::kernel(w)) - std::exp(0.5 * norm2(w))) < 1e-14);
}

TEST_CASE("integral of a symbol is linear") {
  SymbolSampler rng(24);
  for (int i = 0; i < 20; ++i) {
    const Symbol x = fock::testing::random_mixed(rng, 2), y = fock::testing::random_mixed(rng, 2);
    const Complex c = rng.unit_disc();
    const Complex lhs = gaussian_integral(x + c * y);
    const Complex rhs = gaussian_integral(x) + c * gaussian_integral(y);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}
