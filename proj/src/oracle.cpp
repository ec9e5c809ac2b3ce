#include "fockcalc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fockcalc/kernels.hpp"
#include "fockcalc/parallel.hpp"
#include "fockcalc/sharp.hpp"

namespace fock {

GaussHermiteRule gauss_hermite(int order) {
  if (order < 1 || order > kMaxQuadOrder)
    throw std::invalid_argument("quadrature order must lie in [1, 64]");
  const int n = order;
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  GaussHermiteRule rule{std::vector<double>(n), std::vector<double>(n)};
  auto& x = rule.nodes;
  auto& w = rule.weights;
  const int m = (n + 1) / 2;
  double z = 0;
  for (int i = 0; i < m; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4, p2 = 0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    x[i] = z;
    x[n - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[n - 1 - i] = w[i];
  }
  // roots were found from the largest down; weights are symmetric
  std::reverse(x.begin(), x.end());
  return rule;
}

namespace {

void check_quad_input(const Symbol& s) {
  if (s.dim() > 2) throw DimensionError("quadrature oracle supports n <= 2");
  for (const auto& t : s.terms()) {
    if (t.c.norm() > kQuadParamBound + 1e-12 || t.d.norm() > kQuadParamBound + 1e-12)
      throw std::domain_error("quadrature oracle: exponential parameter exceeds bound 2");
  }
}

}  // namespace

Complex quad_integral(const Symbol& s, int order) {
  check_quad_input(s);
  const GaussHermiteRule rule = gauss_hermite(order);
  const size_t q = rule.nodes.size();
  const int n = s.dim();
  // one complex coordinate per (x, y) node pair; weights multiply
  std::vector<Complex> pts(q * q);
  std::vector<double> wts(q * q);
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j) {
      pts[i * q + j] = {rule.nodes[i], rule.nodes[j]};
      wts[i * q + j] = rule.weights[i] * rule.weights[j];
    }
  const size_t plane = q * q;
  if (n == 1) {
    std::vector<Complex> vals(plane);
    for (size_t p = 0; p < plane; ++p) vals[p] = sym_eval(s, CVec{pts[p]});
    return simd::weighted_sum(wts, vals) / std::numbers::pi;
  }
  std::vector<Complex> partial(plane);
  parallel_for(plane, [&](size_t p0) {
    std::vector<Complex> vals(plane);
    for (size_t p1 = 0; p1 < plane; ++p1) vals[p1] = sym_eval(s, CVec{pts[p0], pts[p1]});
    partial[p0] = simd::weighted_sum(wts, vals);
  });
  return simd::weighted_sum(wts, partial) / (std::numbers::pi * std::numbers::pi);
}

Complex quad_integral(const Symbol& s) {
  return quad_integral(s, s.dim() == 1 ? kDefaultQuadOrder1 : kDefaultQuadOrder2);
}

Complex quad_berezin(const Symbol& s, const CVec& zeta, int order) {
  const Symbol weight = Symbol::exponential(zeta.conj(), zeta);
  return quad_integral(s * weight, order) * std::exp(-norm2(zeta));
}

FourierCheck lemma_l1_check(const HoloSymbol& f, const HoloSymbol& g, double half_width,
                            int grid_points) {
  if (f.dim() != 1 || g.dim() != 1) throw DimensionError("lemma_l1_check: n = 1 only");
  if (grid_points < kMinFourierPoints)
    throw std::invalid_argument("lemma_l1_check: grid too coarse (need >= 64 points)");
  if (!(half_width > 0)) throw std::invalid_argument("lemma_l1_check: half width must be positive");
  for (const HoloSymbol* h : {&f, &g})
    for (const auto& t : h->symbol().terms())
      if (std::abs(t.c[0]) > kFourierParamBound + 1e-12)
        throw std::domain_error("lemma_l1_check: exponential parameter exceeds bound 1");

  const HoloSymbol g_star = holo_reflect(g);
  const size_t N = static_cast<size_t>(grid_points);
  const double h = 2.0 * half_width / grid_points;
  std::vector<double> x(N);
  for (size_t j = 0; j < N; ++j) x[j] = -half_width + (static_cast<double>(j) + 0.5) * h;

  const Complex I{0.0, 1.0};
  std::vector<Complex> G(N * N);  // row j1 = Re x, column j2 = Im x
  parallel_for(N, [&](size_t j1) {
    for (size_t j2 = 0; j2 < N; ++j2) {
      const Complex xz{x[j1], x[j2]};
      G[j1 * N + j2] = std::exp(-std::norm(xz) / 4.0) * sym_eval(f, CVec{I * xz / 2.0}) *
                       sym_eval(g_star, CVec{I * std::conj(xz) / 2.0});
    }
  });

  // output samples reuse grid coordinates inside the central window
  std::vector<size_t> out;
  for (size_t j = 0; j < N; ++j)
    if (std::abs(x[j]) <= half_width / 4.0) out.push_back(j);
  const size_t M = out.size();
  std::vector<Complex> E(M * N);  // E[m][j] = exp(-i x_j s_m)
  for (size_t m = 0; m < M; ++m)
    for (size_t j = 0; j < N; ++j) E[m * N + j] = std::exp(-I * x[j] * x[out[m]]);

  // separable transform: first along Im x, then along Re x
  std::vector<Complex> Tt(M * N);  // Tt[m2][j1]
  parallel_for(N, [&](size_t j1) {
    const std::span<const Complex> row(&G[j1 * N], N);
    for (size_t m2 = 0; m2 < M; ++m2) Tt[m2 * N + j1] = simd::cdot(row, {&E[m2 * N], N});
  });

  const Symbol u = sharp(f, g);
  const double scale = h * h / (4.0 * std::numbers::pi);
  FourierCheck res;
  for (size_t m1 = 0; m1 < M; ++m1) {
    for (size_t m2 = 0; m2 < M; ++m2) {
      const Complex zeta{x[out[m1]], x[out[m2]]};
      if (std::abs(zeta) > half_width / 4.0) continue;
      const Complex U = simd::cdot({&E[m1 * N], N}, {&Tt[m2 * N], N});
      const Complex numeric = std::exp(std::norm(zeta)) * scale * U;
      const double r = std::abs(numeric - sym_eval(u, CVec{zeta}));
      ++res.points_compared;
      if (r > res.max_residual) {
        res.max_residual = r;
        res.worst_point = zeta;
      }
    }
  }
  return res;
}

}  // namespace fock
