#pragma once

// Data-parallel inner loops of the numerical oracles: complex dot products
// for the separable Fourier sums, weighted sums for tensor quadrature, and
// squared norms. Each kernel has a scalar reference and vector variants; the
// best variant the CPU supports is picked at first use.

#include <complex>
#include <span>

namespace fock::simd {

using Complex = std::complex<double>;

enum class Isa { scalar, avx2, neon };

const char* isa_name(Isa isa);
/// Whether this build contains the variant and the running CPU supports it.
bool isa_supported(Isa isa);
/// Best supported variant.
Isa detected_isa();
Isa active_isa();
/// Overrides dispatch; throws std::invalid_argument when unsupported.
void force_isa(Isa isa);

/// sum_i a_i * b_i (no conjugation). Spans must have equal length.
Complex cdot(std::span<const Complex> a, std::span<const Complex> b);
/// sum_i w_i * v_i
Complex weighted_sum(std::span<const double> w, std::span<const Complex> v);
/// sum_i |v_i|^2
double sum_norm(std::span<const Complex> v);

namespace scalar {
Complex cdot(const Complex* a, const Complex* b, size_t n);
Complex weighted_sum(const double* w, const Complex* v, size_t n);
double sum_norm(const Complex* v, size_t n);
}  // namespace scalar

namespace avx2 {
Complex cdot(const Complex* a, const Complex* b, size_t n);
Complex weighted_sum(const double* w, const Complex* v, size_t n);
double sum_norm(const Complex* v, size_t n);
}  // namespace avx2

namespace neon {
Complex cdot(const Complex* a, const Complex* b, size_t n);
Complex weighted_sum(const double* w, const Complex* v, size_t n);
double sum_norm(const Complex* v, size_t n);
}  // namespace neon

}  // namespace fock::simd
