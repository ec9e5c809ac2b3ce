#include <doctest.h>

#include <random>
#include <vector>

#include "fockcalc/kernels.hpp"
#include "fockcalc/symbol.hpp"

using namespace fock;

namespace {

struct Data {
  std::vector<Complex> a, b;
  std::vector<double> w;
};

Data sample_data(size_t len, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Data d;
  for (size_t i = 0; i < len; ++i) {
    d.a.emplace_back(u(rng), u(rng));
    d.b.emplace_back(u(rng), u(rng));
    d.w.push_back(u(rng));
  }
  return d;
}

bool close(Complex x, Complex y, size_t len) { return std::abs(x - y) <= 1e-14 * (1.0 + static_cast<double>(len)); }

}  // namespace

TEST_CASE("scalar kernels on small inputs") {
  const std::vector<Complex> a = {{1, 2}, {3, -1}}, b = {{0, 1}, {2, 2}};
  CHECK(simd::scalar::cdot(a.data(), b.data(), 2) == Complex{1, 2} * Complex{0, 1} + Complex{3, -1} * Complex{2, 2});
  const std::vector<double> w = {0.5, -1};
  CHECK(simd::scalar::weighted_sum(w.data(), a.data(), 2) == 0.5 * a[0] - a[1]);
  CHECK(simd::scalar::sum_norm(a.data(), 2) == 15.0);
  CHECK(simd::scalar::cdot(a.data(), b.data(), 0) == Complex{});
}

TEST_CASE("vector kernels match the scalar reference") {
  std::mt19937_64 rng(71);
  for (const simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon}) {
    if (!simd::isa_supported(isa)) continue;
    for (size_t len = 0; len <= 67; ++len) {
      const Data d = sample_data(len, rng);
      const Complex ref_dot = simd::scalar::cdot(d.a.data(), d.b.data(), len);
      const Complex ref_ws = simd::scalar::weighted_sum(d.w.data(), d.a.data(), len);
      const double ref_nrm = simd::scalar::sum_norm(d.a.data(), len);
      simd::force_isa(isa);
      CHECK(close(simd::cdot(d.a, d.b), ref_dot, len));
      CHECK(close(simd::weighted_sum(d.w, d.a), ref_ws, len));
      CHECK(std::abs(simd::sum_norm(d.a) - ref_nrm) <= 1e-14 * (1.0 + static_cast<double>(len)));
    }
  }
  simd::force_isa(simd::detected_isa());
}

TEST_CASE("dispatch") {
  CHECK(simd::isa_supported(simd::Isa::scalar));
  CHECK(simd::isa_supported(simd::detected_isa()));
  simd::force_isa(simd::Isa::scalar);
  CHECK(simd::active_isa() == simd::Isa::scalar);
  for (const simd::Isa isa : {simd::Isa::avx2, simd::Isa::neon})
    if (!simd::isa_supported(isa)) CHECK_THROWS_AS(simd::force_isa(isa), std::invalid_argument);
  simd::force_isa(simd::detected_isa());
  CHECK(std::string(simd::isa_name(simd::Isa::avx2)) == "avx2");
}
