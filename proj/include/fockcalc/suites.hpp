#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fockcalc/random_symbols.hpp"
#include "fockcalc/report.hpp"
#include "fockcalc/toeplitz.hpp"

namespace fock {

struct SuiteConfig {
  int n = 2;
  int degree = kDefaultBasisDegree;
  std::uint64_t seed = kDefaultSeed;
  double tol = kDefaultOperatorTol;
};

class UnknownSuiteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Suite identifiers in execution order ("all" runs every one of them).
std::span<const std::string_view> suite_names();

/// Throws UnknownSuiteError, or std::invalid_argument when n is outside
/// [1, 3] or degree outside [0, 10]. Reports are deterministic given cfg
/// except for duration_ms.
VerificationReport run_suite(std::string_view name, const SuiteConfig& cfg);

/// Named symbol families used by the suites, tests and CLI.
namespace instances {

/// (1, ..., 1)
CVec ones(int n);
/// (0, ..., 0, 1)
CVec last_unit(int n);

/// f = exp(z.1), v = exp((z + 1).1), h = exp(z.1 + conj(z).1): T_f T_conj(v) = T_h.
struct ExpShiftProduct {
  HoloSymbol f, v;
  Symbol h;
};
ExpShiftProduct exp_shift_product(int n);

/// p = z_1 (or z at n = 1), f = K_{-2 pi i e_n} = exp(2 pi i z_n), g = K_{e_n} = exp(z_n).
struct PeriodicKernelData {
  HoloSymbol pf;  // p * f
  HoloSymbol g;
  Symbol product;  // p f conj(g)
};
PeriodicKernelData periodic_kernel(int n);

}  // namespace instances

}  // namespace fock
