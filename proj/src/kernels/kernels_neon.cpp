// AArch64 variant; one complex<double> per float64x2_t.

#include <arm_neon.h>

#include "fockcalc/kernels.hpp"

namespace fock::simd::neon {

Complex cdot(const Complex* a, const Complex* b, size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  float64x2_t acc_r = vdupq_n_f64(0.0), acc_i = vdupq_n_f64(0.0);
  for (size_t i = 0; i < n; ++i) {
    const float64x2_t va = vld1q_f64(pa + 2 * i);
    acc_r = vfmaq_n_f64(acc_r, va, pb[2 * i]);
    acc_i = vfmaq_n_f64(acc_i, vextq_f64(va, va, 1), pb[2 * i + 1]);
  }
  return {vgetq_lane_f64(acc_r, 0) - vgetq_lane_f64(acc_i, 0),
          vgetq_lane_f64(acc_r, 1) + vgetq_lane_f64(acc_i, 1)};
}

Complex weighted_sum(const double* w, const Complex* v, size_t n) {
  const double* pv = reinterpret_cast<const double*>(v);
  float64x2_t acc0 = vdupq_n_f64(0.0), acc1 = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc0 = vfmaq_n_f64(acc0, vld1q_f64(pv + 2 * i), w[i]);
    acc1 = vfmaq_n_f64(acc1, vld1q_f64(pv + 2 * i + 2), w[i + 1]);
  }
  const float64x2_t acc = vaddq_f64(acc0, acc1);
  Complex s{vgetq_lane_f64(acc, 0), vgetq_lane_f64(acc, 1)};
  if (i < n) s += scalar::weighted_sum(w + i, v + i, n - i);
  return s;
}

double sum_norm(const Complex* v, size_t n) {
  const double* pv = reinterpret_cast<const double*>(v);
  float64x2_t acc = vdupq_n_f64(0.0);
  for (size_t i = 0; i < n; ++i) {
    const float64x2_t x = vld1q_f64(pv + 2 * i);
    acc = vfmaq_f64(acc, x, x);
  }
  return vaddvq_f64(acc);
}

}  // namespace fock::simd::neon
