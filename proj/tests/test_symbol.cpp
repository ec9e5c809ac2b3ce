#include <doctest.h>

#include <algorithm>

#include "fockcalc/symbol.hpp"
#include "support.hpp"

using namespace fock;
using fock::testing::random_mixed;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("canonical form merges, floors and orders terms") {
  const MultiIndex z0(1);
  const MultiIndex one{1};
  const CVec c0(1);
  std::vector<SymbolTerm> raw = {
      {2.0, one, z0, c0, c0},
      {1.0, z0, z0, c0, c0},
      {-2.0, one, z0, c0, c0},
      {3.0, z0, one, CVec{0.5}, c0},
      {1e-3, z0, one, CVec{0.5 + 1e-11}, c0},
  };
  const Symbol s = Symbol::canonical(1, raw);
  REQUIRE(s.size() == 2);
  CHECK(s.terms()[0].a.is_zero());
  CHECK(s.terms()[0].coef == Complex{1.0});
  CHECK(std::abs(s.terms()[1].coef - 3.001) < 1e-15);

  // the floor is relative to the raw input scale
  const Symbol tiny = Symbol::canonical(1, {{1e-13, z0, z0, c0, c0}});
  CHECK(tiny.is_zero());
  const Symbol kept = Symbol::canonical(1, {{1e-13, z0, z0, c0, c0}}, Floor::skip);
  CHECK(kept.size() == 1);
  const Symbol cancel = Symbol::canonical(1, {{1e6, one, z0, c0, c0}, {-1e6 + 1e-7, one, z0, c0, c0}});
  CHECK(cancel.is_zero());
}

TEST_CASE("canonicalization is idempotent and order independent") {
  SymbolSampler rng(11);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 3;
    const Symbol s = random_mixed(rng, n);
    std::vector<SymbolTerm> raw(s.terms().begin(), s.terms().end());
    CHECK(Symbol::canonical(n, raw).terms().size() == s.size());
    std::reverse(raw.begin(), raw.end());
    const Symbol r = Symbol::canonical(n, raw);
    CHECK(difference_norm(r, s) == 0.0);
    for (size_t k = 1; k < s.size(); ++k) CHECK(term_order(s.terms()[k - 1], s.terms()[k]));
  }
}

TEST_CASE("ring laws hold pointwise and symbolically") {
  SymbolSampler rng(12);
  for (int i = 0; i < 40; ++i) {
    const int n = 1 + i % 3;
    const Symbol x = random_mixed(rng, n), y = random_mixed(rng, n), w = random_mixed(rng, n);
    const CVec p = rng.ball(n, 1.0);
    CHECK(rel(sym_eval(x * y, p), sym_eval(x, p) * sym_eval(y, p)) < 1e-12);
    CHECK(rel(sym_eval(x + y, p), sym_eval(x, p) + sym_eval(y, p)) < 1e-12);
    CHECK(rel(sym_eval(sym_conj(x), p), std::conj(sym_eval(x, p))) < 1e-12);
    CHECK(coefficientwise_residual(x * y, y * x) < 1e-14);
    CHECK(coefficientwise_residual((x * y) * w, x * (y * w)) < 1e-12);
    CHECK(coefficientwise_residual(x * (y + w), x * y + x * w) < 1e-12);
    CHECK(coefficientwise_residual(sym_conj(sym_conj(x)), x) == 0.0);
    CHECK((x - x).is_zero());
  }
}

TEST_CASE("derivatives agree with finite differences and the product rule") {
  SymbolSampler rng(13);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 2;
    const Symbol s = random_mixed(rng, n);
    const Symbol t = random_mixed(rng, n);
    const CVec p = rng.ball(n, 0.8);
    for (int k = 0; k < n; ++k) {
      CHECK(rel(sym_eval(sym_dz(s, k), p), fock::testing::numeric_dz(s, p, k)) < 1e-6);
      CHECK(coefficientwise_residual(sym_dz(s * t, k), sym_dz(s, k) * t + s * sym_dz(t, k)) < 1e-12);
    }
    const MultiIndex m = n == 1 ? MultiIndex{3} : MultiIndex{2, 1};
    Symbol rep = s;
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < m[k]; ++j) rep = sym_dz(rep, k);
    CHECK(coefficientwise_residual(sym_dz(s, m), rep) < 1e-12);
  }
  CHECK(sym_dz(Symbol::conj_coordinate(2, 0), 0).is_zero());
  CHECK_THROWS(sym_dz(Symbol::coordinate(2, 0), 2));
}

TEST_CASE("constructors and accessors") {
  const Symbol z = Symbol::coordinate(2, 1);
  CHECK(z.degree() == 1);
  CHECK(z.is_holomorphic());
  CHECK_FALSE(Symbol::conj_coordinate(2, 0).is_holomorphic());
  CHECK(Symbol(3).degree() == -1);
  CHECK(Symbol::constant(1, 2.5).constant_term() == Complex{2.5});
  const CVec w{Complex{1, 2}};
  CHECK(rel(sym_eval(Symbol::kernel(w), CVec{0.5}), std::exp(0.5 * std::conj(Complex{1, 2}))) < 1e-15);
  CHECK_THROWS_AS(Symbol::coordinate(1, 0) + Symbol::coordinate(2, 0), DimensionError);
  CHECK_THROWS_AS(sym_eval(z, CVec{1.0}), DimensionError);
}

TEST_CASE("holomorphic symbols") {
  CHECK_THROWS_AS(HoloSymbol(Symbol::conj_coordinate(1, 0)), NotHolomorphicError);
  const HoloSymbol f(Symbol::coordinate(2, 0) * Symbol::coordinate(2, 1) + Symbol::kernel(CVec{0.5, 1.0}));
  const CVec eta{Complex{0.2, -0.1}, 0.3};
  const CVec p{0.4, Complex{0, 0.7}};
  CHECK(rel(sym_eval(holo_shift(f, eta), p), sym_eval(f, p - eta)) < 1e-14);
  CHECK(rel(sym_eval(holo_reflect(f), p), std::conj(sym_eval(f, p.conj()))) < 1e-14);
  CHECK(holo_derivative(f, MultiIndex{1, 1}).symbol().constant_term() != Complex{});
}

TEST_CASE("approximate equality") {
  const Symbol a = Symbol::coordinate(1, 0);
  const Symbol b = (1.0 + 1e-12) * a;
  CHECK(approx_equal(a, b));
  CHECK_FALSE(approx_equal(a, 1.01 * a));
  CHECK(coefficientwise_residual(a, Symbol(1)) == doctest::Approx(1.0));
}
