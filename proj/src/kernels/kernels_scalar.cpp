#include "fockcalc/kernels.hpp"

namespace fock::simd::scalar {

Complex cdot(const Complex* a, const Complex* b, size_t n) {
  double re = 0, im = 0;
  for (size_t i = 0; i < n; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

Complex weighted_sum(const double* w, const Complex* v, size_t n) {
  double re = 0, im = 0;
  for (size_t i = 0; i < n; ++i) {
    re += w[i] * v[i].real();
    im += w[i] * v[i].imag();
  }
  return {re, im};
}

double sum_norm(const Complex* v, size_t n) {
  double s = 0;
  for (size_t i = 0; i < n; ++i) s += v[i].real() * v[i].real() + v[i].imag() * v[i].imag();
  return s;
}

}  // namespace fock::simd::scalar
