#include "fockcalc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace fock {

CaseResult make_case(std::string name, double residual, double tol, Expect expect) {
  const bool ok = std::isfinite(residual) &&
                  (expect == Expect::at_most ? residual <= tol : residual >= tol);
  if (expect == Expect::at_least) name += " [>=tol]";
  return {std::move(name), residual, tol, ok};
}

void VerificationReport::finalize() {
  pass = std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_quote(std::string_view s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string to_json(const VerificationReport& r, bool include_duration) {
  std::string out = "{";
  out += "\"suite\":" + json_quote(r.suite);
  out += ",\"n\":" + std::to_string(r.n);
  out += ",\"degree\":" + std::to_string(r.degree);
  out += ",\"seed\":" + std::to_string(r.seed);
  out += ",\"tol\":" + json_number(r.tol);
  out += ",\"cases\":[";
  for (size_t i = 0; i < r.cases.size(); ++i) {
    const auto& c = r.cases[i];
    if (i) out += ",";
    out += "{\"name\":" + json_quote(c.name) + ",\"residual\":" + json_number(c.residual) +
           ",\"tol\":" + json_number(c.tol) + ",\"pass\":" + (c.pass ? "true" : "false") + "}";
  }
  out += "],\"pass\":";
  out += r.pass ? "true" : "false";
  if (include_duration) out += ",\"duration_ms\":" + std::to_string(r.duration_ms);
  out += "}";
  return out;
}

std::string to_text(const VerificationReport& r) {
  std::string out;
  char buf[512];
  for (const auto& c : r.cases) {
    std::snprintf(buf, sizeof buf, "[%s] %-60s residual=%.3e tol=%.3e\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.residual, c.tol);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "suite %s: %s (%zu cases, %lld ms)\n", r.suite.c_str(),
                r.pass ? "PASS" : "FAIL", r.cases.size(), static_cast<long long>(r.duration_ms));
  return out + buf;
}

}  // namespace fock
