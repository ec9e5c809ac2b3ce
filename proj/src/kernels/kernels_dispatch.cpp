#include <atomic>
#include <stdexcept>

#include "fockcalc/kernels.hpp"

namespace fock::simd {

namespace {

bool cpu_has_avx2() {
#if defined(FOCKCALC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool cpu_has_neon() {
#if defined(FOCKCALC_HAVE_NEON)
  return true;  // baseline on AArch64
#else
  return false;
#endif
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detected_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2: return cpu_has_avx2();
    case Isa::neon: return cpu_has_neon();
  }
  return false;
}

Isa detected_isa() {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_supported(isa))
    throw std::invalid_argument(std::string("instruction set not available: ") + isa_name(isa));
  selected().store(isa, std::memory_order_relaxed);
}

Complex cdot(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw std::invalid_argument("cdot: length mismatch");
  switch (active_isa()) {
#if defined(FOCKCALC_HAVE_AVX2)
    case Isa::avx2: return avx2::cdot(a.data(), b.data(), a.size());
#endif
#if defined(FOCKCALC_HAVE_NEON)
    case Isa::neon: return neon::cdot(a.data(), b.data(), a.size());
#endif
    default: return scalar::cdot(a.data(), b.data(), a.size());
  }
}

Complex weighted_sum(std::span<const double> w, std::span<const Complex> v) {
  if (w.size() != v.size()) throw std::invalid_argument("weighted_sum: length mismatch");
  switch (active_isa()) {
#if defined(FOCKCALC_HAVE_AVX2)
    case Isa::avx2: return avx2::weighted_sum(w.data(), v.data(), v.size());
#endif
#if defined(FOCKCALC_HAVE_NEON)
    case Isa::neon: return neon::weighted_sum(w.data(), v.data(), v.size());
#endif
    default: return scalar::weighted_sum(w.data(), v.data(), v.size());
  }
}

double sum_norm(std::span<const Complex> v) {
  switch (active_isa()) {
#if defined(FOCKCALC_HAVE_AVX2)
    case Isa::avx2: return avx2::sum_norm(v.data(), v.size());
#endif
#if defined(FOCKCALC_HAVE_NEON)
    case Isa::neon: return neon::sum_norm(v.data(), v.size());
#endif
    default: return scalar::sum_norm(v.data(), v.size());
  }
}

}  // namespace fock::simd
