#include <doctest.h>

#include "fockcalc/gaussian.hpp"
#include "fockcalc/oracle.hpp"
#include "fockcalc/toeplitz.hpp"
#include "support.hpp"

using namespace fock;
using fock::testing::random_mixed;

namespace {

// Coefficient of z^beta in T_phi u via <phi u, z^beta> / beta!, the integral
// taken by quadrature (n = 1).
Complex projected_coefficient(const Symbol& phi, const HoloSymbol& u, int beta) {
  const Symbol integrand = phi * u.symbol() * Symbol::monomial(1.0, MultiIndex(1), MultiIndex{beta});
  return quad_integral(integrand, 48) / static_cast<double>(factorial(beta));
}

Complex coefficient_of(const Symbol& s, int beta) {
  for (const auto& t : s.terms())
    if (t.a[0] == beta && t.b.is_zero() && t.c.is_zero() && t.d.is_zero()) return t.coef;
  return 0;
}

}  // namespace

TEST_CASE("polynomial actions match projection by quadrature") {
  SymbolSampler rng(51);
  for (int i = 0; i < 15; ++i) {
    const Symbol phi = random_mixed(rng, 1, {.max_degree = 3, .max_terms = 3, .max_blocks = 1,
                                             .exp_probability = 0.0, .param_bound = 1.0});
    const HoloSymbol u = rng.polynomial(1, 3, 3);
    const Symbol image = toeplitz_apply(phi, u);
    for (int beta = 0; beta <= 7; ++beta) {
      const Complex q = projected_coefficient(phi, u, beta);
      CHECK(std::abs(coefficient_of(image, beta) - q) < 1e-8);
    }
  }
}

TEST_CASE("elementary actions") {
  const HoloSymbol z = HoloSymbol::coordinate(1, 0);
  const Symbol zb = Symbol::conj_coordinate(1, 0);
  // T_zbar z^m = m z^(m-1)
  HoloSymbol zm = HoloSymbol::constant(1, 1.0);
  for (int m = 1; m <= 6; ++m) {
    zm = zm * z;
    const Symbol expect = Symbol::monomial(static_cast<double>(m), MultiIndex{m - 1}, MultiIndex(1));
    CHECK(coefficientwise_residual(toeplitz_apply(zb, zm), expect) < 1e-15);
  }
  CHECK(toeplitz_apply(zb, HoloSymbol::constant(1, 1.0)).is_zero());
  // T_{exp(conj(z).d)} u = u(z + d)
  SymbolSampler rng(52);
  for (int i = 0; i < 10; ++i) {
    const int n = 1 + i % 3;
    const CVec d = rng.ball(n, 1.0);
    const HoloSymbol u = rng.holo(n, {});
    CHECK(coefficientwise_residual(toeplitz_apply(Symbol::exponential(CVec(n), d), u), holo_shift(u, -d)) < 1e-12);
  }
}

TEST_CASE("adjoint law") {
  SymbolSampler rng(53);
  for (int i = 0; i < 25; ++i) {
    const int n = 1 + i % 3;
    const Symbol phi = random_mixed(rng, n);
    const HoloSymbol u = rng.holo(n, {}), w = rng.holo(n, {});
    const Complex lhs = fock_inner(toeplitz_apply(phi, u), w);
    const Complex rhs = fock_inner(u, toeplitz_apply(sym_conj(phi), w));
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("chains apply the last symbol first") {
  const Symbol z = Symbol::coordinate(1, 0), zb = Symbol::conj_coordinate(1, 0);
  const HoloSymbol one = HoloSymbol::constant(1, 1.0);
  CHECK(coefficientwise_residual(apply_chain(OpChain{zb, z}, one), one) == 0.0);
  CHECK(apply_chain(OpChain{z, zb}, one).is_zero());

  const EqualityReport same = op_equal_on_basis(OpChain{z}, OpChain{z});
  CHECK(same.max_residual == 0.0);
  CHECK(same.pass);
  const EqualityReport swapped = op_equal_on_basis(OpChain{zb, z}, OpChain{z, zb}, 4);
  CHECK(swapped.max_residual >= 1.0);
  CHECK(swapped.worst.is_zero());
  CHECK_FALSE(swapped.pass);
  CHECK(swapped.per_basis.size() == 5);
  CHECK_THROWS_AS(toeplitz_apply(z, HoloSymbol::constant(2, 1.0)), DimensionError);
}

TEST_CASE("pluriharmonic product symbol") {
  SymbolSampler rng(54);
  for (int i = 0; i < 10; ++i) {
    const int n = 1 + i % 2;
    const PluriharmonicPair p = rng.pluriharmonic(n, {});
    const Symbol h = brown_halmos_h(p.f, p.g, p.u, p.v);
    CHECK(op_equal_on_basis(OpChain{p.phi(), p.psi()}, OpChain{h}).pass);
    const Symbol defect = commutator_defect(p.f, p.g, p.u, p.v);
    const Symbol h_rev = brown_halmos_h(p.u, p.v, p.f, p.g);
    CHECK(coefficientwise_residual(defect, h - h_rev) < 1e-12);
  }
  const HoloSymbol z = HoloSymbol::coordinate(1, 0), zero(1);
  const Symbol d = commutator_defect(z, zero, zero, z);
  REQUIRE(d.size() == 1);
  CHECK(std::abs(std::abs(d.constant_term()) - 1.0) < 1e-12);
}

TEST_CASE("basis elements are normalized") {
  for (const auto& a : mi_enumerate(3, 4))
    CHECK(std::abs(fock_norm(normalized_monomial(a)) - 1.0) < 1e-14);
}
