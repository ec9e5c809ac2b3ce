#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fock {

/// How a case's residual is judged against its threshold.
enum class Expect {
  at_most,   // identity holds: residual <= tol
  at_least,  // separation: residual >= tol (the case asserts a failure/nonzero)
};

struct CaseResult {
  std::string name;
  double residual = 0;
  double tol = 0;
  bool pass = false;
};

CaseResult make_case(std::string name, double residual, double tol, Expect expect = Expect::at_most);

struct VerificationReport {
  std::string suite;
  int n = 0;
  int degree = 0;
  std::uint64_t seed = 0;
  double tol = 0;
  std::vector<CaseResult> cases;
  bool pass = false;
  std::int64_t duration_ms = 0;

  /// pass = conjunction of case passes
  void finalize();
};

/// "%.17g", or null for non-finite values.
std::string json_number(double v);
std::string json_quote(std::string_view s);

/// JSON object {suite, n, degree, seed, tol, cases, pass, duration_ms};
/// doubles with 17 significant digits.
std::string to_json(const VerificationReport& r, bool include_duration = true);

/// One line per case plus a summary line.
std::string to_text(const VerificationReport& r);

}  // namespace fock
