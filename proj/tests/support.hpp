#pragma once

// Helpers shared by the unit tests: random inputs and brute-force oracles
// that do not go through the closed forms under test.

#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "fockcalc/random_symbols.hpp"
#include "fockcalc/symbol.hpp"

namespace fock::testing {

inline Symbol random_mixed(SymbolSampler& rng, int n, const RandomHoloSpec& spec = {}) {
  const PluriharmonicPair p = rng.pluriharmonic(n, spec);
  return p.f.symbol() * sym_conj(p.g) + p.u.symbol() + sym_conj(p.v);
}

/// Wirtinger d/dz_k by central differences: (d/dx - i d/dy) / 2.
inline Complex numeric_dz(const Symbol& s, const CVec& at, int k, double h = 1e-5) {
  auto shifted = [&](Complex step) {
    CVec p = at;
    p[k] += step;
    return sym_eval(s, p);
  };
  const Complex dx = (shifted(h) - shifted(-h)) / (2 * h);
  const Complex dy = (shifted(Complex{0, h}) - shifted(Complex{0, -h})) / (2 * h);
  return 0.5 * (dx - Complex{0, 1} * dy);
}

/// Runs a shell command, returning its exit status and standard output.
struct CommandResult {
  int status;
  std::string out;
};

inline CommandResult run_command(const std::string& cmd) {
  CommandResult r{-1, {}};
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace fock::testing
