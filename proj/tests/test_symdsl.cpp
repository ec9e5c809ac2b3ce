#include <doctest.h>

#include "fockcalc/symdsl.hpp"
#include "support.hpp"

using namespace fock;

namespace {

size_t error_position(std::string_view text, int n) {
  try {
    parse_symbol(text, n);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return 0;
}

}  // namespace

TEST_CASE("parses the building blocks") {
  const Symbol z1 = Symbol::coordinate(2, 0), z2 = Symbol::coordinate(2, 1);
  CHECK(coefficientwise_residual(parse_symbol("z1", 2), z1) == 0.0);
  CHECK(coefficientwise_residual(parse_symbol("conj(z2)", 2), Symbol::conj_coordinate(2, 1)) == 0.0);
  CHECK(coefficientwise_residual(parse_symbol("z1^2*z2 - 3", 2), z1 * z1 * z2 - Symbol::constant(2, 3.0)) == 0.0);
  CHECK(coefficientwise_residual(parse_symbol("(1+2i)*z1", 2), Complex{1, 2} * z1) == 0.0);
  CHECK(coefficientwise_residual(parse_symbol("exp(z1 + 2*conj(z2))", 2),
                                 Symbol::exponential(CVec{1.0, 0.0}, CVec{0.0, 2.0})) == 0.0);
  CHECK(coefficientwise_residual(parse_symbol("K(1, 2i)", 2), Symbol::kernel(CVec{1.0, Complex{0, 2}})) == 0.0);
  // constants inside exp fold into the coefficient
  CHECK(coefficientwise_residual(parse_symbol("exp(1 + z1)", 2), std::exp(1.0) * Symbol::exponential(CVec{1.0, 0.0}, CVec(2))) < 1e-15);
  CHECK(coefficientwise_residual(parse_symbol("conj(exp(z1))", 2), Symbol::exponential(CVec(2), CVec{1.0, 0.0})) == 0.0);
  CHECK(coefficientwise_residual(parse_symbol("-z1 + z1", 2), Symbol(2)) == 0.0);
  CHECK(coefficientwise_residual(parse_symbol("  2 * 0.5i ", 1), Symbol::constant(1, Complex{0, 1})) == 0.0);
  CHECK(parse_complex("0.3-2i") == Complex{0.3, -2});
  CHECK_THROWS_AS(parse_complex("z1"), ParseError);
}

TEST_CASE("formatting") {
  CHECK(format_symbol(Symbol(1)) == "0");
  CHECK(format_symbol(parse_symbol("z1*conj(z1) - 1", 1)) == "-1 + z1*conj(z1)");
  CHECK(format_symbol(parse_symbol("z1^2*conj(z2)^3", 2)) == "z1^2*conj(z2)^3");
  CHECK(format_complex(Complex{1.5, -2}) == "(1.5-2i)");
}

TEST_CASE("format then parse reproduces random symbols") {
  SymbolSampler rng(61);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 3;
    const Symbol s = fock::testing::random_mixed(rng, n);
    const std::string text = format_symbol(s);
    const Symbol back = parse_symbol(text, n);
    CHECK_MESSAGE(coefficientwise_residual(back, s) <= 1e-12, text);
    CHECK(format_symbol(back) == text);
  }
}

TEST_CASE("errors carry positions") {
  CHECK(error_position("z1 +", 2) == 4);
  CHECK(error_position("exp(z1*z1)", 2) == 4);
  CHECK(error_position("K(1)", 2) == 0);
  CHECK(error_position("z0", 2) == 0);
  CHECK(error_position("z3", 2) == 0);
  CHECK(error_position("conj(", 2) == 5);
  CHECK(error_position("3 $", 2) == 2);
  CHECK(error_position("z1^", 2) == 3);
  CHECK(error_position("(z1", 2) == 3);
  CHECK(error_position("1.5.2", 2) == 3);
  CHECK(error_position("z1 z2", 2) == 3);
  CHECK(error_position("", 2) == 0);
  CHECK(error_position("K(z1, 1)", 2) == 2);
  CHECK(error_position("z1^99", 1) == 3);
  try {
    parse_symbol("z1 + ?", 1);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column 6") != std::string::npos);
  }
}
