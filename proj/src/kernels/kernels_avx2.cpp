// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "fockcalc/kernels.hpp"

namespace fock::simd::avx2 {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// (re, im, re, im) -> complex sum of both halves
inline Complex hsum_complex(__m256d v) {
  __m128d s = _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

}  // namespace

Complex cdot(const Complex* a, const Complex* b, size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  // acc_r gathers (ar*br, ai*br), acc_i gathers (ai*bi, ar*bi)
  __m256d acc_r0 = _mm256_setzero_pd(), acc_i0 = _mm256_setzero_pd();
  __m256d acc_r1 = _mm256_setzero_pd(), acc_i1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va0 = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb0 = _mm256_loadu_pd(pb + 2 * i);
    __m256d va1 = _mm256_loadu_pd(pa + 2 * i + 4);
    __m256d vb1 = _mm256_loadu_pd(pb + 2 * i + 4);
    acc_r0 = _mm256_fmadd_pd(va0, _mm256_movedup_pd(vb0), acc_r0);
    acc_i0 = _mm256_fmadd_pd(_mm256_permute_pd(va0, 0x5), _mm256_permute_pd(vb0, 0xF), acc_i0);
    acc_r1 = _mm256_fmadd_pd(va1, _mm256_movedup_pd(vb1), acc_r1);
    acc_i1 = _mm256_fmadd_pd(_mm256_permute_pd(va1, 0x5), _mm256_permute_pd(vb1, 0xF), acc_i1);
  }
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_r0 = _mm256_fmadd_pd(va, _mm256_movedup_pd(vb), acc_r0);
    acc_i0 = _mm256_fmadd_pd(_mm256_permute_pd(va, 0x5), _mm256_permute_pd(vb, 0xF), acc_i0);
  }
  const __m256d acc = _mm256_addsub_pd(_mm256_add_pd(acc_r0, acc_r1), _mm256_add_pd(acc_i0, acc_i1));
  Complex s = hsum_complex(acc);
  if (i < n) s += scalar::cdot(a + i, b + i, n - i);
  return s;
}

Complex weighted_sum(const double* w, const Complex* v, size_t n) {
  const double* pv = reinterpret_cast<const double*>(v);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d w4 = _mm256_loadu_pd(w + i);
    const __m256d w01 = _mm256_permute4x64_pd(w4, _MM_SHUFFLE(1, 1, 0, 0));
    const __m256d w23 = _mm256_permute4x64_pd(w4, _MM_SHUFFLE(3, 3, 2, 2));
    acc0 = _mm256_fmadd_pd(w01, _mm256_loadu_pd(pv + 2 * i), acc0);
    acc1 = _mm256_fmadd_pd(w23, _mm256_loadu_pd(pv + 2 * i + 4), acc1);
  }
  Complex s = hsum_complex(_mm256_add_pd(acc0, acc1));
  if (i < n) s += scalar::weighted_sum(w + i, v + i, n - i);
  return s;
}

double sum_norm(const Complex* v, size_t n) {
  const double* pv = reinterpret_cast<const double*>(v);
  __m256d acc0 = _mm256_setzero_pd(), acc1 = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(pv + 2 * i);
    const __m256d x1 = _mm256_loadu_pd(pv + 2 * i + 4);
    acc0 = _mm256_fmadd_pd(x0, x0, acc0);
    acc1 = _mm256_fmadd_pd(x1, x1, acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  if (i < n) s += scalar::sum_norm(v + i, n - i);
  return s;
}

}  // namespace fock::simd::avx2
