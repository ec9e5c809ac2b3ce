#include "fockcalc/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include "fockcalc/berezin.hpp"
#include "fockcalc/gaussian.hpp"
#include "fockcalc/oracle.hpp"
#include "fockcalc/sharp.hpp"

namespace fock {

namespace instances {

CVec ones(int n) { return CVec::filled(n, 1.0); }

CVec last_unit(int n) { return CVec::unit(n, n - 1); }

ExpShiftProduct exp_shift_product(int n) {
  const CVec one = ones(n);
  const HoloSymbol f(Symbol::exponential(one, CVec(n)));
  const HoloSymbol v(std::exp(static_cast<double>(n)) * Symbol::exponential(one, CVec(n)));
  return {f, v, Symbol::exponential(one, one)};
}

PeriodicKernelData periodic_kernel(int n) {
  const Complex two_pi_i{0.0, 2.0 * std::numbers::pi};
  const HoloSymbol p = HoloSymbol::coordinate(n, 0);
  const HoloSymbol f = HoloSymbol::kernel(last_unit(n) * -two_pi_i);
  const HoloSymbol g = HoloSymbol::kernel(last_unit(n));
  const HoloSymbol pf = p * f;
  return {pf, g, pf.symbol() * sym_conj(g)};
}

}  // namespace instances

namespace {

using Cases = std::vector<CaseResult>;
using SuiteFn = void (*)(const SuiteConfig&, SymbolSampler&, Cases&);

constexpr std::array<std::string_view, 11> kSuiteNames = {
    "berezin-fixed-point", "brown-halmos", "zero-product", "sharp-operator-law",
    "shift-identity",      "prop-l3",      "prop-p1",      "commutator",
    "cor-c4",              "moments-oracle", "lemma-l1",
};

std::string dim_tag(int n) { return " (n=" + std::to_string(n) + ")"; }

HoloSymbol zero_holo(int n) { return HoloSymbol(n); }

double max_image_norm(const OpChain& chain, int degree) {
  double m = 0;
  for (const auto& alpha : mi_enumerate(chain.dim(), degree))
    m = std::max(m, apply_chain(chain, normalized_monomial(alpha)).symbol().coefficient_norm());
  return m;
}

// -- sharp product round trip through the Berezin transform -----------------

void suite_berezin_fixed_point(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  RandomHoloSpec spec{.max_degree = 4, .max_terms = 3, .max_blocks = 2, .exp_probability = 0.5,
                      .param_bound = 1.0};
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const HoloSymbol f = rng.holo(n, spec);
    const HoloSymbol g = rng.holo(n, spec);
    worst = std::max(worst, coefficientwise_residual(berezin(sharp(f, g)), f.symbol() * sym_conj(g)));
  }
  out.push_back(make_case("sharp-round-trip/random-pairs(50)" + dim_tag(n), worst, cfg.tol));

  const HoloSymbol z1 = HoloSymbol::coordinate(n, 0);
  const Symbol expect = Symbol::coordinate(n, 0) * Symbol::conj_coordinate(n, 0) - Symbol::constant(n, 1.0);
  out.push_back(make_case("sharp(z1,z1)=z1*conj(z1)-1", coefficientwise_residual(sharp(z1, z1), expect), cfg.tol));

  double fixed = 0, conj_comm = 0, nonzero = 1e300;
  for (int i = 0; i < 20; ++i) {
    const HoloSymbol f = rng.holo(n, spec);
    fixed = std::max(fixed, coefficientwise_residual(berezin(f), f));
  }
  for (int i = 0; i < 100; ++i) {
    const PluriharmonicPair p = rng.pluriharmonic(n, RandomHoloSpec{});
    const Symbol s = p.f.symbol() * sym_conj(p.g) + p.u.symbol();
    if (i < 20) conj_comm = std::max(conj_comm, coefficientwise_residual(berezin(sym_conj(s)), sym_conj(berezin(s))));
    if (!s.is_zero()) nonzero = std::min(nonzero, berezin(s).coefficient_norm());
  }
  out.push_back(make_case("berezin/holomorphic-fixed-point", fixed, cfg.tol));
  out.push_back(make_case("berezin/commutes-with-conjugation", conj_comm, cfg.tol));
  out.push_back(make_case("berezin/nonzero-on-100-nonzero-symbols", nonzero, cfg.tol, Expect::at_least));

  // f = exp(z.1): the solution is conj(g(z - 1)) exp(z.1)
  const CVec one = instances::ones(n);
  const HoloSymbol ef(Symbol::exponential(one, CVec(n)));
  double shift_res = 0, shift_ber = 0;
  for (int i = 0; i < 10; ++i) {
    const HoloSymbol g = rng.polynomial(n, 4, 4);
    const Symbol u = sym_conj(holo_shift(g, one)) * ef.symbol();
    shift_res = std::max(shift_res, coefficientwise_residual(sharp(ef, g), u));
    shift_ber = std::max(shift_ber, coefficientwise_residual(berezin(u), ef.symbol() * sym_conj(g)));
  }
  out.push_back(make_case("exp-solution/sharp(exp(z.1),g)=conj(g(z-1))exp(z.1)", shift_res, cfg.tol));
  out.push_back(make_case("exp-solution/berezin(u)=exp(z.1)conj(g)", shift_ber, cfg.tol));

  // <T_z T_zbar k, k> vs <T_zbar T_z k, k> differ by exactly 1
  const CVec zeta = rng.ball(n, 1.0);
  const Symbol zs = Symbol::coordinate(n, 0), zb = Symbol::conj_coordinate(n, 0);
  const Complex d = operator_berezin(OpChain{zb, zs}, zeta) - operator_berezin(OpChain{zs, zb}, zeta);
  out.push_back(make_case("operator-berezin/[conj(z1),z1]-[z1,conj(z1)]=1", std::abs(d - 1.0), cfg.tol));
}

// -- product of two pluriharmonic Toeplitz operators ------------------------

void suite_brown_halmos(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  double agree = 0, perturbed = 1e300, absolute = 1e300, h_norm = 1e300;
  for (int i = 0; i < 25; ++i) {
    const PluriharmonicPair p = rng.pluriharmonic(n, RandomHoloSpec{});
    const Symbol h = brown_halmos_h(p.f, p.g, p.u, p.v);
    const OpChain lhs{p.phi(), p.psi()};
    agree = std::max(agree, op_equal_on_basis(lhs, OpChain{h}, cfg.degree, cfg.tol).max_residual);
    const Symbol h1 = h + Symbol::constant(n, 1.0);
    perturbed = std::min(perturbed, op_equal_on_basis(lhs, OpChain{h1}, cfg.degree, cfg.tol).max_residual);
    const HoloSymbol one = HoloSymbol::constant(n, 1.0);
    absolute = std::min(absolute, difference_norm(apply_chain(lhs, one), toeplitz_apply(h1, one)));
    h_norm = std::min(h_norm, h.coefficient_norm());
  }
  out.push_back(make_case("product-symbol/basis-agreement(25)" + dim_tag(n), agree, cfg.tol));
  out.push_back(make_case("product-symbol/h+1-breaks-agreement(25)", perturbed, 0.5, Expect::at_least));
  out.push_back(make_case("product-symbol/h+1-absolute-difference-on-1", absolute, 0.5, Expect::at_least));
  out.push_back(make_case("product-symbol/h-nonzero-for-nonzero-pairs", h_norm, cfg.tol, Expect::at_least));

  const auto c = [n](double v) { return HoloSymbol::constant(n, v); };
  const Symbol hc = brown_halmos_h(c(2), c(1), c(3), zero_holo(n));
  out.push_back(make_case("product-symbol/constants-h=9", coefficientwise_residual(hc, Symbol::constant(n, 9.0)), cfg.tol));

  const HoloSymbol f = rng.holo(n, RandomHoloSpec{});
  const HoloSymbol v = rng.holo(n, RandomHoloSpec{});
  out.push_back(make_case("product-symbol/g=u=0-reduces-to-sharp",
                          coefficientwise_residual(brown_halmos_h(f, zero_holo(n), zero_holo(n), v), sharp(f, v)), cfg.tol));
}

// -- zero products ----------------------------------------------------------

void suite_zero_product(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  constexpr int kBasis = 4;
  double weakest = 1e300, phi_zero = 0, psi_zero = 0;
  for (int i = 0; i < 100; ++i) {
    const PluriharmonicPair p = rng.pluriharmonic(n, RandomHoloSpec{});
    weakest = std::min(weakest, max_image_norm(OpChain{p.phi(), p.psi()}, kBasis));
    if (i < 10) {
      phi_zero = std::max(phi_zero, max_image_norm(OpChain{Symbol(n), p.psi()}, kBasis));
      psi_zero = std::max(psi_zero, max_image_norm(OpChain{p.phi(), Symbol(n)}, kBasis));
      const Symbol h0 = brown_halmos_h(zero_holo(n), zero_holo(n), p.u, p.v);
      phi_zero = std::max(phi_zero, h0.coefficient_norm());
    }
  }
  out.push_back(make_case("zero-product/nonzero-pairs-have-nonzero-product(100)" + dim_tag(n), weakest, 1e-8, Expect::at_least));
  out.push_back(make_case("zero-product/phi=0-annihilates-basis", phi_zero, cfg.tol));
  out.push_back(make_case("zero-product/psi=0-annihilates-basis", psi_zero, cfg.tol));
}

// -- T_f T_conj(g) = T_sharp(f,g) ------------------------------------------

void suite_sharp_operator_law(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  double law = 0;
  for (int i = 0; i < 10; ++i) {
    const HoloSymbol f = rng.holo(n, RandomHoloSpec{});
    const HoloSymbol g = rng.holo(n, RandomHoloSpec{});
    law = std::max(law, op_equal_on_basis(OpChain{f.symbol(), sym_conj(g)}, OpChain{sharp(f, g)},
                                          cfg.degree, cfg.tol).max_residual);
  }
  out.push_back(make_case("sharp-operator-law/T_f*T_conj(g)=T_sharp(f,g)(10)" + dim_tag(n), law, cfg.tol));

  // sum over l of T_{f_l} T_{conj(g_l)} against T of the summed symbols
  std::vector<HoloSymbol> fs, gs;
  for (int l = 0; l < 3; ++l) {
    fs.push_back(rng.holo(n, RandomHoloSpec{}));
    gs.push_back(rng.holo(n, RandomHoloSpec{}));
  }
  Symbol total(n);
  for (int l = 0; l < 3; ++l) total = total + sharp(fs[l], gs[l]);
  double sum_res = 0;
  for (const auto& alpha : mi_enumerate(n, cfg.degree)) {
    const HoloSymbol e = normalized_monomial(alpha);
    Symbol lhs(n);
    for (int l = 0; l < 3; ++l)
      lhs = lhs + apply_chain(OpChain{fs[l].symbol(), sym_conj(gs[l])}, e).symbol();
    const Symbol rhs = toeplitz_apply(total, e);
    sum_res = std::max(sum_res, difference_norm(lhs, rhs) / std::max(1.0, lhs.coefficient_norm()));
  }
  out.push_back(make_case("sharp-operator-law/sum-of-three-products", sum_res, cfg.tol));

  const HoloSymbol f1 = rng.holo(n, RandomHoloSpec{}), f2 = rng.holo(n, RandomHoloSpec{});
  const HoloSymbol g = rng.holo(n, RandomHoloSpec{});
  const Complex alpha = rng.unit_disc();
  out.push_back(make_case("sharp/linear-in-f",
                          coefficientwise_residual(sharp(f1 + f2, g), sharp(f1, g) + sharp(f2, g)), cfg.tol));
  out.push_back(make_case("sharp/conjugate-linear-in-g",
                          coefficientwise_residual(sharp(f1, alpha * g), std::conj(alpha) * sharp(f1, g)), cfg.tol));
  out.push_back(make_case("sharp/constant-g-is-identity",
                          coefficientwise_residual(sharp(f1, HoloSymbol::constant(n, 1.0)), f1), cfg.tol));
}

// -- exponential symbols act as argument shifts -----------------------------

void suite_shift_identity(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  double sym_res = 0, op_res = 0, ber_res = 0;
  for (int i = 0; i < 10; ++i) {
    const CVec eta = i == 0 ? instances::ones(n) : rng.ball(n, 1.0);
    const HoloSymbol e(Symbol::exponential(eta.conj(), CVec(n)));
    const HoloSymbol g = rng.polynomial(n, 3, 3);
    const Symbol shifted = sym_conj(holo_shift(g, eta)) * e.symbol();
    sym_res = std::max(sym_res, coefficientwise_residual(sharp(e, g), shifted));
    ber_res = std::max(ber_res, coefficientwise_residual(berezin(shifted), e.symbol() * sym_conj(g)));
    if (i < 4)
      op_res = std::max(op_res, op_equal_on_basis(OpChain{e.symbol(), sym_conj(g)}, OpChain{shifted},
                                                  cfg.degree, cfg.tol).max_residual);
  }
  out.push_back(make_case("exp-shift/sharp(exp(z.conj(eta)),g)=conj(g(z-eta))exp(z.conj(eta))" + dim_tag(n), sym_res, cfg.tol));
  out.push_back(make_case("exp-shift/berezin-returns-exp*conj(g)", ber_res, cfg.tol));
  out.push_back(make_case("exp-shift/operator-law-on-basis", op_res, cfg.tol));

  // conj(g) exp(z.conj(eta)) is a Berezin fixed point iff g has period eta
  const CVec eta = instances::last_unit(n);
  const Symbol e = Symbol::exponential(eta, CVec(n));
  const HoloSymbol periodic = HoloSymbol::kernel(instances::last_unit(n) * Complex{0.0, -2.0 * std::numbers::pi});
  const Symbol fp = e * sym_conj(periodic);
  out.push_back(make_case("exp-shift/periodic-g-gives-fixed-point", coefficientwise_residual(berezin(fp), fp), cfg.tol));
  const Symbol np = e * Symbol::conj_coordinate(n, n - 1);
  out.push_back(make_case("exp-shift/non-periodic-g-not-fixed", difference_norm(berezin(np), np), 0.5, Expect::at_least));
}

// -- T_f T_conj(v) = T_h with h != f conj(v) ------------------------------

void suite_prop_l3(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  const auto d = instances::exp_shift_product(n);
  out.push_back(make_case("exp-product/chain-equals-T_h" + dim_tag(n),
                          op_equal_on_basis(OpChain{d.f.symbol(), sym_conj(d.v)}, OpChain{d.h}, cfg.degree, cfg.tol).max_residual,
                          cfg.tol));
  out.push_back(make_case("exp-product/product-symbol-formula-gives-h",
                          coefficientwise_residual(brown_halmos_h(d.f, zero_holo(n), zero_holo(n), d.v), d.h), cfg.tol));
  const double en = std::exp(static_cast<double>(n));
  const double bound = std::abs(en - 1.0) / en * d.h.coefficient_norm();
  out.push_back(make_case("exp-product/h-differs-from-f*conj(v)",
                          difference_norm(d.h, d.f.symbol() * sym_conj(d.v)), bound, Expect::at_least));
  const CVec zeta = rng.ball(n, 1.0);
  const Complex lhs = operator_berezin(OpChain{d.f.symbol(), sym_conj(d.v)}, zeta);
  out.push_back(make_case("exp-product/operator-berezin-matches", std::abs(lhs - sym_eval(berezin(d.h), zeta)), cfg.tol));
}

// -- T_{conj(h) f} T_{conj(v) g} = T_k -------------------------------------

void suite_prop_p1(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  const CVec one = instances::ones(n);
  const Symbol f = Symbol::exponential(one, CVec(n));
  double worst = 0;
  for (int i = 0; i < 10; ++i) {
    const HoloSymbol h = rng.polynomial(n, 3, 3);
    const HoloSymbol v = rng.polynomial(n, 3, 3);
    const HoloSymbol g = rng.polynomial(n, 3, 3);
    const Symbol hbar = sym_conj(h);
    const Symbol k = hbar * sym_conj(holo_shift(v, one)) * f * g.symbol();
    worst = std::max(worst, op_equal_on_basis(OpChain{hbar * f, sym_conj(v) * g.symbol()}, OpChain{k},
                                              cfg.degree, cfg.tol).max_residual);
  }
  out.push_back(make_case("mixed-exp-product/chain-law(10)" + dim_tag(n), worst, cfg.tol));
}

// -- commuting pluriharmonic Toeplitz operators ------------------------------

struct CommuteProbe {
  double defect_norm;
  double commutation;
  double fixed_point;
};

CommuteProbe probe(const PluriharmonicPair& p, const SuiteConfig& cfg) {
  const Symbol defect = commutator_defect(p.f, p.g, p.u, p.v);
  const Symbol phi = p.phi(), psi = p.psi();
  const double comm = op_equal_on_basis(OpChain{phi, psi}, OpChain{psi, phi}, cfg.degree, cfg.tol).max_residual;
  const Symbol x = p.u.symbol() * sym_conj(p.g) - p.f.symbol() * sym_conj(p.v);
  return {defect.coefficient_norm(), comm, coefficientwise_residual(berezin(x), x)};
}

void suite_commutator(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  const int n = cfg.n;
  const HoloSymbol z = zero_holo(n);
  std::vector<std::pair<std::string, std::vector<PluriharmonicPair>>> commuting;
  {
    std::vector<PluriharmonicPair> self, holo, anti, affine;
    for (int i = 0; i < 3; ++i) {
      const PluriharmonicPair r = rng.pluriharmonic(n, RandomHoloSpec{});
      self.push_back({r.f, r.g, r.f, r.g});
      holo.push_back({r.f, z, r.u, z});
      anti.push_back({z, r.g, z, r.v});
      const Complex a = rng.unit_disc(), b = rng.unit_disc();
      affine.push_back({r.f, r.g, a * r.f + HoloSymbol::constant(n, b), std::conj(a) * r.g});
    }
    commuting.emplace_back("phi=psi", std::move(self));
    commuting.emplace_back("both-holomorphic", std::move(holo));
    commuting.emplace_back("both-antiholomorphic", std::move(anti));
    commuting.emplace_back("psi=a*phi+b", std::move(affine));
    if (n >= 2) {
      const auto c4 = instances::periodic_kernel(n);
      commuting.emplace_back("periodic-kernel", std::vector<PluriharmonicPair>{{c4.pf, z, z, c4.g}});
    }
  }
  for (const auto& [family, pairs] : commuting) {
    double worst = 0;
    for (const auto& p : pairs) {
      const CommuteProbe pr = probe(p, cfg);
      worst = std::max({worst, pr.defect_norm, pr.commutation, pr.fixed_point});
    }
    out.push_back(make_case("commutator/commuting/" + family + dim_tag(n), worst, cfg.tol));
  }

  std::vector<PluriharmonicPair> noncommuting;
  for (int i = 0; i < 5; ++i) noncommuting.push_back(rng.pluriharmonic(n, RandomHoloSpec{}));
  noncommuting.push_back({HoloSymbol::coordinate(n, 0), z, z, HoloSymbol::coordinate(n, 0)});
  double weakest = 1e300;
  for (const auto& p : noncommuting) {
    const CommuteProbe pr = probe(p, cfg);
    weakest = std::min({weakest, pr.defect_norm, pr.commutation, pr.fixed_point});
  }
  out.push_back(make_case("commutator/non-commuting/defect-and-commutator-nonzero", weakest, cfg.tol, Expect::at_least));

  const Symbol zz = commutator_defect(HoloSymbol::coordinate(n, 0), z, z, HoloSymbol::coordinate(n, 0));
  const double const_err = std::abs(std::abs(zz.constant_term()) - 1.0) + difference_norm(zz, Symbol::constant(n, zz.constant_term()));
  out.push_back(make_case("commutator/[T_z1,T_conj(z1)]-defect-is-constant-of-modulus-1", const_err, 1e-12));
}

// -- periodic kernel product and the one-dimensional contrast ---------------

void suite_cor_c4(const SuiteConfig& cfg, SymbolSampler&, Cases& out) {
  const int n = std::max(cfg.n, 2);
  const auto c4 = instances::periodic_kernel(n);
  const HoloSymbol z = zero_holo(n);
  out.push_back(make_case("periodic-kernel/sharp-equals-product" + dim_tag(n),
                          difference_norm(sharp(c4.pf, c4.g), c4.product), 1e-12));
  out.push_back(make_case("periodic-kernel/commutator-defect-zero",
                          commutator_defect(c4.pf, z, z, c4.g).coefficient_norm(), 1e-12));
  out.push_back(make_case("periodic-kernel/operator-equality(D=8)",
                          op_equal_on_basis(OpChain{c4.pf.symbol(), sym_conj(c4.g)}, OpChain{c4.product}, 8, cfg.tol).max_residual,
                          cfg.tol));
  out.push_back(make_case("periodic-kernel/berezin-fixed-point",
                          coefficientwise_residual(berezin(c4.product), c4.product), cfg.tol));

  // n = 2 worked example: T_{p f conj(g)} z^alpha = p f (z + e_2)^alpha
  const auto ex = instances::periodic_kernel(2);
  double act = 0;
  for (const auto& alpha : mi_enumerate(2, cfg.degree)) {
    const HoloSymbol za(Symbol::monomial(1.0, alpha, MultiIndex(2)));
    const HoloSymbol expect = ex.pf * holo_shift(za, -instances::last_unit(2));
    act = std::max(act, coefficientwise_residual(toeplitz_apply(ex.product, za), expect));
  }
  out.push_back(make_case("periodic-kernel/example-action-on-monomials (n=2)", act, cfg.tol));

  const auto one = instances::periodic_kernel(1);
  out.push_back(make_case("periodic-kernel/n=1-analog-fixed-point-fails",
                          difference_norm(berezin(one.product), one.product), 0.9, Expect::at_least));
  const HoloSymbol z1 = zero_holo(1);
  out.push_back(make_case("periodic-kernel/n=1-analog-commutator-defect-nonzero",
                          commutator_defect(one.pf, z1, z1, one.g).coefficient_norm(), 0.9, Expect::at_least));
}

// -- Gaussian moments against quadrature ------------------------------------

void suite_moments_oracle(const SuiteConfig& cfg, SymbolSampler& rng, Cases& out) {
  double quad = 0, orders = 0, symm = 0;
  for (int i = 0; i < 50; ++i) {
    const MomentQuery q{MultiIndex{rng.integer(0, 6)}, MultiIndex{rng.integer(0, 6)},
                        CVec{rng.unit_disc()}, CVec{rng.unit_disc()}};
    const Complex closed = gaussian_moment(q);
    const Symbol s = Symbol::monomial(1.0, q.a, q.b) * Symbol::exponential(q.lambda, q.mu);
    const Complex q40 = quad_integral(s, 40);
    quad = std::max(quad, std::abs(closed - q40));
    orders = std::max(orders, std::abs(q40 - quad_integral(s, 60)));
    const Complex swapped = gaussian_moment({q.b, q.a, q.mu.conj(), q.lambda.conj()});
    symm = std::max(symm, std::abs(std::conj(closed) - swapped) / std::max(1.0, std::abs(closed)));
  }
  out.push_back(make_case("moments/closed-form-vs-quadrature(50, n=1)", quad, 1e-6));
  out.push_back(make_case("moments/quadrature-order-40-vs-60", orders, 1e-8));
  out.push_back(make_case("moments/conjugate-symmetry", symm, cfg.tol));

  double n2 = 0;
  for (int i = 0; i < 5; ++i) {
    const MomentQuery q{MultiIndex{rng.integer(0, 3), rng.integer(0, 3)},
                        MultiIndex{rng.integer(0, 3), rng.integer(0, 3)}, rng.ball(2, 0.5), rng.ball(2, 0.5)};
    const Symbol s = Symbol::monomial(1.0, q.a, q.b) * Symbol::exponential(q.lambda, q.mu);
    n2 = std::max(n2, std::abs(gaussian_moment(q) - quad_integral(s, kDefaultQuadOrder2)));
  }
  out.push_back(make_case("moments/closed-form-vs-quadrature(5, n=2)", n2, 1e-6));

  const int n = cfg.n;
  double ortho = 0;
  const auto basis = mi_enumerate(n, 6);
  for (const auto& a : basis)
    for (const auto& b : basis) {
      const Complex ip = fock_inner(HoloSymbol(Symbol::monomial(1.0, a, MultiIndex(n))),
                                    HoloSymbol(Symbol::monomial(1.0, b, MultiIndex(n))));
      const double expect = a == b ? static_cast<double>(mi_factorial(a)) : 0.0;
      ortho = std::max(ortho, std::abs(ip - expect));
    }
  out.push_back(make_case("fock-inner/monomials-orthogonal-with-norm-alpha!" + dim_tag(n), ortho, cfg.tol));

  double consistency = 0;
  const RandomHoloSpec small{.max_degree = 3, .max_terms = 2, .max_blocks = 1, .exp_probability = 0.5, .param_bound = 0.5};
  for (int i = 0; i < 10; ++i) {
    const PluriharmonicPair p = rng.pluriharmonic(1, small);
    const Symbol s = p.f.symbol() * sym_conj(p.g);
    const CVec zeta = rng.ball(1, 0.5);
    consistency = std::max(consistency, std::abs(sym_eval(berezin(s), zeta) - quad_berezin(s, zeta, 40)));
  }
  out.push_back(make_case("berezin/closed-form-vs-quadrature(10, n=1)", consistency, 1e-5));
}

// -- inverse Fourier reconstruction ----------------------------------------

void suite_lemma_l1(const SuiteConfig&, SymbolSampler&, Cases& out) {
  const HoloSymbol one = HoloSymbol::constant(1, 1.0);
  const HoloSymbol z = HoloSymbol::coordinate(1, 0);
  const HoloSymbol ez(Symbol::exponential(CVec{1.0}, CVec(1)));
  out.push_back(make_case("fourier-inverse/f=g=1", lemma_l1_check(one, one).max_residual, 1e-4));
  out.push_back(make_case("fourier-inverse/f=g=z", lemma_l1_check(z, z).max_residual, 1e-4));
  out.push_back(make_case("fourier-inverse/f=exp(z),g=z", lemma_l1_check(ez, z).max_residual, 1e-3));
}

constexpr std::array<SuiteFn, 11> kSuiteFns = {
    suite_berezin_fixed_point, suite_brown_halmos, suite_zero_product, suite_sharp_operator_law,
    suite_shift_identity,      suite_prop_l3,      suite_prop_p1,      suite_commutator,
    suite_cor_c4,              suite_moments_oracle, suite_lemma_l1,
};

std::uint64_t suite_seed(std::uint64_t seed, size_t index) {
  return seed + 0x9E3779B97F4A7C15ULL * (index + 1);
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuiteNames; }

VerificationReport run_suite(std::string_view name, const SuiteConfig& cfg) {
  if (cfg.n < 1 || cfg.n > 3) throw std::invalid_argument("suite dimension must lie in [1, 3]");
  if (cfg.degree < 0 || cfg.degree > 10) throw std::invalid_argument("basis degree must lie in [0, 10]");
  if (!(cfg.tol > 0)) throw std::invalid_argument("tolerance must be positive");

  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep{std::string(name), cfg.n, cfg.degree, cfg.seed, cfg.tol, {}, false, 0};
  bool matched = false;
  for (size_t i = 0; i < kSuiteNames.size(); ++i) {
    if (name != "all" && name != kSuiteNames[i]) continue;
    matched = true;
    SymbolSampler rng(suite_seed(cfg.seed, i));
    Cases cases;
    kSuiteFns[i](cfg, rng, cases);
    for (auto& c : cases) {
      if (name == "all") c.name = std::string(kSuiteNames[i]) + ":" + c.name;
      rep.cases.push_back(std::move(c));
    }
  }
  if (!matched) throw UnknownSuiteError("unknown suite '" + std::string(name) + "'");
  rep.finalize();
  rep.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace fock
