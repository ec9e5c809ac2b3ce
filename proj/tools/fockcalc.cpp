// fockcalc: command-line front end for the symbol calculus and verification suites.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fockcalc/berezin.hpp"
#include "fockcalc/gaussian.hpp"
#include "fockcalc/oracle.hpp"
#include "fockcalc/sharp.hpp"
#include "fockcalc/suites.hpp"
#include "fockcalc/symdsl.hpp"
#include "fockcalc/toeplitz.hpp"

namespace {

using namespace fock;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 2;
  std::vector<std::string> symbols;
  std::string at;
  int degree = kDefaultBasisDegree;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  bool json = false;
  std::string suite = "all";
  std::string out;
  // oracle
  bool lemma = false;
  int order = 0;
  int grid_points = kDefaultFourierPoints;
  double half_width = kDefaultFourierHalfWidth;
};

void add_shared(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "dimension of C^n")->check(CLI::Range(1, kMaxDim));
  app->add_option("-s,--symbol", o.symbols, "symbol in the text grammar (repeatable)");
  app->add_option("--at", o.at, "comma-separated complex point");
  app->add_option("--degree", o.degree, "monomial basis bound D")->check(CLI::NonNegativeNumber);
  app->add_option("--seed", o.seed, "random seed");
  app->add_option("--tol", o.tol, "tolerance")->check(CLI::PositiveNumber);
  app->add_flag("--json", o.json, "emit JSON");
}

std::vector<Symbol> parse_all(const Options& o) {
  std::vector<Symbol> out;
  for (const auto& s : o.symbols) {
    try {
      out.push_back(parse_symbol(s, o.n));
    } catch (const ParseError& e) {
      throw UsageError("in '" + s + "': " + e.what());
    }
  }
  return out;
}

void require_symbols(const std::vector<Symbol>& s, size_t lo, size_t hi, const char* what) {
  if (s.size() < lo || s.size() > hi) throw UsageError(std::string(what));
}

HoloSymbol as_holo(const Symbol& s, const char* role) {
  if (!s.is_holomorphic()) throw UsageError(std::string(role) + " must be holomorphic");
  return HoloSymbol(s);
}

std::optional<CVec> parse_point(const Options& o) {
  if (o.at.empty()) return std::nullopt;
  std::vector<Complex> v;
  std::stringstream ss(o.at);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      v.push_back(parse_complex(item));
    } catch (const ParseError& e) {
      throw UsageError("in --at '" + item + "': " + e.what());
    }
  }
  if (static_cast<int>(v.size()) != o.n)
    throw UsageError("--at needs " + std::to_string(o.n) + " values, got " + std::to_string(v.size()));
  return CVec(std::span<const Complex>(v));
}

std::string json_complex(Complex v) {
  return "[" + json_number(v.real()) + "," + json_number(v.imag()) + "]";
}

void emit_symbol(const Options& o, const char* key, const Symbol& s, std::optional<CVec> at) {
  if (o.json) {
    std::string out = "{\"n\":" + std::to_string(o.n) + ",\"" + key + "\":" + json_quote(format_symbol(s));
    if (at) out += ",\"value\":" + json_complex(sym_eval(s, *at));
    std::cout << out << "}\n";
  } else {
    std::cout << format_symbol(s) << "\n";
    if (at) std::cout << "value: " << format_complex(sym_eval(s, *at)) << "\n";
  }
}

int cmd_berezin(const Options& o) {
  const auto s = parse_all(o);
  require_symbols(s, 1, 1, "berezin takes exactly one -s symbol");
  emit_symbol(o, "berezin", berezin(s[0]), parse_point(o));
  return kExitPass;
}

int cmd_sharp(const Options& o) {
  const auto s = parse_all(o);
  require_symbols(s, 2, 2, "sharp takes two holomorphic symbols: -s f -s g");
  emit_symbol(o, "sharp", sharp(as_holo(s[0], "f"), as_holo(s[1], "g")), parse_point(o));
  return kExitPass;
}

int cmd_toeplitz_apply(const Options& o) {
  auto s = parse_all(o);
  if (s.size() < 2) throw UsageError("toeplitz-apply takes symbols -s phi_1 ... -s phi_m -s u");
  const HoloSymbol u = as_holo(s.back(), "the vector u (last -s)");
  s.pop_back();
  emit_symbol(o, "image", apply_chain(OpChain(std::move(s)), u), parse_point(o));
  return kExitPass;
}

int cmd_moment(const Options& o) {
  const auto s = parse_all(o);
  require_symbols(s, 1, 1, "moment takes exactly one -s symbol");
  const Complex v = gaussian_integral(s[0]);
  if (o.json)
    std::cout << "{\"n\":" << o.n << ",\"integral\":" << json_complex(v) << "}\n";
  else
    std::cout << format_complex(v) << "\n";
  return kExitPass;
}

int cmd_oracle(const Options& o) {
  const auto s = parse_all(o);
  if (o.lemma) {
    require_symbols(s, 2, 2, "oracle --lemma takes two holomorphic symbols: -s f -s g");
    const double tol = o.tol.value_or(1e-3);
    const FourierCheck fc = lemma_l1_check(as_holo(s[0], "f"), as_holo(s[1], "g"), o.half_width, o.grid_points);
    const bool pass = fc.max_residual <= tol;
    if (o.json)
      std::cout << "{\"max_residual\":" << json_number(fc.max_residual) << ",\"points\":" << fc.points_compared
                << ",\"tol\":" << json_number(tol) << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
    else
      std::printf("fourier reconstruction residual %.3e over %zu points (tol %.1e): %s\n", fc.max_residual,
                  static_cast<size_t>(fc.points_compared), tol, pass ? "PASS" : "FAIL");
    return pass ? kExitPass : kExitFail;
  }
  require_symbols(s, 1, 1, "oracle takes one -s symbol (or two with --lemma)");
  const double tol = o.tol.value_or(1e-6);
  const Complex closed = gaussian_integral(s[0]);
  const Complex quad = o.order > 0 ? quad_integral(s[0], o.order) : quad_integral(s[0]);
  const double diff = std::abs(closed - quad);
  const bool pass = diff <= tol;
  if (o.json)
    std::cout << "{\"closed_form\":" << json_complex(closed) << ",\"quadrature\":" << json_complex(quad)
              << ",\"difference\":" << json_number(diff) << ",\"tol\":" << json_number(tol)
              << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
  else
    std::cout << "closed form: " << format_complex(closed) << "\nquadrature:  " << format_complex(quad)
              << "\ndifference:  " << diff << (pass ? "  PASS" : "  FAIL") << "\n";
  return pass ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg{o.n, o.degree, o.seed, o.tol.value_or(kDefaultOperatorTol)};
  if (cfg.n > 3) throw UsageError("verify supports n <= 3");
  if (cfg.degree > 10) throw UsageError("verify supports degree <= 10");
  VerificationReport rep;
  try {
    rep = run_suite(o.suite, cfg);
  } catch (const UnknownSuiteError& e) {
    std::string known;
    for (auto name : suite_names()) known += " " + std::string(name);
    throw UsageError(std::string(e.what()) + "; known suites: all" + known);
  }
  const std::string text = o.json ? to_json(rep) + "\n" : to_text(rep);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
    std::cout << "suite " << rep.suite << ": " << (rep.pass ? "PASS" : "FAIL") << "\n";
  }
  return rep.pass ? kExitPass : kExitFail;
}

int cmd_parse(const Options& o) {
  const auto s = parse_all(o);
  require_symbols(s, 1, 1, "parse takes exactly one -s symbol");
  emit_symbol(o, "canonical", s[0], parse_point(o));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz operator calculus on the Fock space"};
  app.require_subcommand(1);
  Options o;

  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const Options&);
  };
  const Sub subs[] = {
      {"berezin", "Berezin transform of a symbol", cmd_berezin},
      {"sharp", "the symbol g*(conj(z) - d) f for holomorphic f, g", cmd_sharp},
      {"toeplitz-apply", "apply T_phi_1 ... T_phi_m to a holomorphic u", cmd_toeplitz_apply},
      {"moment", "closed-form Gaussian integral of a symbol", cmd_moment},
      {"oracle", "compare closed forms with quadrature or Fourier reconstruction", cmd_oracle},
      {"verify", "run verification suites", cmd_verify},
      {"parse", "parse and print the canonical form of a symbol", cmd_parse},
  };
  int (*selected)(const Options&) = nullptr;
  for (const auto& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    add_shared(cmd, o);
    cmd->callback([&selected, run = sub.run] { selected = run; });
    if (std::string_view(sub.name) == "verify") {
      cmd->add_option("--suite", o.suite, "suite name or 'all'");
      cmd->add_option("--out", o.out, "write the report to a file");
    }
    if (std::string_view(sub.name) == "oracle") {
      cmd->add_flag("--lemma", o.lemma, "Fourier reconstruction of exp(|zeta|^2)(f g*)(zeta) from two symbols");
      cmd->add_option("--order", o.order, "Gauss-Hermite order per real axis")->check(CLI::Range(1, kMaxQuadOrder));
      cmd->add_option("--grid-points", o.grid_points, "Fourier grid points per axis")->check(CLI::Range(kMinFourierPoints, 4096));
      cmd->add_option("--half-width", o.half_width, "Fourier window half-width")->check(CLI::PositiveNumber);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    return selected(o);
  } catch (const std::exception& e) {
    // bad symbols, dimension mismatches and out-of-range parameters
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
