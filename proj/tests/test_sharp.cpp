#include <doctest.h>

#include "fockcalc/berezin.hpp"
#include "fockcalc/oracle.hpp"
#include "fockcalc/sharp.hpp"
#include "support.hpp"

using namespace fock;

TEST_CASE("examples") {
  const HoloSymbol z = HoloSymbol::coordinate(1, 0);
  const Symbol zz = z.symbol() * Symbol::conj_coordinate(1, 0);
  CHECK(coefficientwise_residual(sharp(z, z), zz - Symbol::constant(1, 1.0)) == 0.0);
  const HoloSymbol one = HoloSymbol::constant(2, 1.0);
  const HoloSymbol z2 = HoloSymbol::coordinate(2, 1);
  CHECK(coefficientwise_residual(sharp(one, z2), Symbol::conj_coordinate(2, 1)) == 0.0);
  CHECK(coefficientwise_residual(sharp(z2, one), z2) == 0.0);
  // g = z^2: conj(z)^2 f - 2 conj(z) f' + f''
  const HoloSymbol f = z * z * z;
  const Symbol zb = Symbol::conj_coordinate(1, 0);
  const Symbol expect = zb * zb * f.symbol() - 6.0 * zb * (z * z).symbol() + 6.0 * z.symbol();
  CHECK(coefficientwise_residual(sharp(f, z * z), expect) < 1e-15);
}

TEST_CASE("Berezin transform of sharp(f,g) is f conj(g), checked by quadrature") {
  SymbolSampler rng(41);
  const RandomHoloSpec small{.max_degree = 3, .max_terms = 2, .max_blocks = 1, .exp_probability = 0.5,
                             .param_bound = 0.25};
  for (int i = 0; i < 20; ++i) {
    const HoloSymbol f = rng.holo(1, small), g = rng.holo(1, small);
    const Symbol u = sharp(f, g);
    const CVec zeta = rng.ball(1, 0.5);
    const Complex expect = sym_eval(f, zeta) * std::conj(sym_eval(g, zeta));
    CHECK(std::abs(quad_berezin(u, zeta, 56) - expect) <= 1e-7 * std::max(1.0, std::abs(expect)));
  }
}

TEST_CASE("closed-form Berezin inverts sharp on random pairs") {
  SymbolSampler rng(42);
  const RandomHoloSpec spec{.max_degree = 4, .max_terms = 3, .max_blocks = 2, .exp_probability = 0.5,
                            .param_bound = 1.0};
  for (int i = 0; i < 60; ++i) {
    const int n = 1 + i % 3;
    const HoloSymbol f = rng.holo(n, spec), g = rng.holo(n, spec);
    CHECK(coefficientwise_residual(berezin(sharp(f, g)), f.symbol() * sym_conj(g)) < 1e-9);
  }
}

TEST_CASE("sesquilinearity") {
  SymbolSampler rng(43);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + i % 2;
    const HoloSymbol f1 = rng.holo(n, {}), f2 = rng.holo(n, {}), g1 = rng.holo(n, {}), g2 = rng.holo(n, {});
    const Complex a = rng.unit_disc();
    CHECK(coefficientwise_residual(sharp(a * f1 + f2, g1), a * sharp(f1, g1) + sharp(f2, g1)) < 1e-12);
    CHECK(coefficientwise_residual(sharp(f1, a * g1 + g2), std::conj(a) * sharp(f1, g1) + sharp(f1, g2)) < 1e-12);
  }
}

TEST_CASE("exponential f turns conj(g) into a shifted conj(g)") {
  SymbolSampler rng(44);
  for (int i = 0; i < 10; ++i) {
    const int n = 1 + i % 3;
    const CVec eta = rng.ball(n, 1.0);
    const HoloSymbol e(Symbol::exponential(eta.conj(), CVec(n)));
    const HoloSymbol g = rng.polynomial(n, 3, 3);
    CHECK(coefficientwise_residual(sharp(e, g), sym_conj(holo_shift(g, eta)) * e.symbol()) < 1e-12);
  }
}
