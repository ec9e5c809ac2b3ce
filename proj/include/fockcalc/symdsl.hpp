#pragma once

// Text form of symbols.
//
//   expr   := ["+"|"-"] term { ("+"|"-") term }
//   term   := factor { "*" factor }
//   factor := base [ "^" nat ]
//   base   := number | "z" nat | "conj" "(" expr ")" | "exp" "(" expr ")"
//           | "K" "(" expr { "," expr } ")" | "(" expr ")"
//   number := float | float "i"
//
// A parenthesized complex literal such as (1.5-2i) is an ordinary
// parenthesized sum. exp arguments must be affine in z_k and conj(z_k);
// K arguments must be constants. Coordinates are 1-based in text.

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fockcalc/symbol.hpp"

namespace fock {

class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, std::string message);
  /// 0-based byte offset into the input.
  size_t position() const { return position_; }
  const std::string& message() const { return message_; }

 private:
  size_t position_;
  std::string message_;
};

struct SymbolExpr {
  enum class Kind { literal, coordinate, conj, exp, kernel, sum, product, power, negation };

  Kind kind;
  size_t position = 0;
  Complex value{};   // literal
  int index = 0;     // coordinate, 1-based
  int exponent = 0;  // power
  std::vector<SymbolExpr> children;
};

inline constexpr int kMaxParsedPower = 64;

/// Parses text into an AST without lowering.
SymbolExpr parse_expr(std::string_view text);

/// Lowers an AST to a canonical symbol in dimension n.
Symbol lower_expr(const SymbolExpr& expr, int n);

/// parse_expr followed by lower_expr.
Symbol parse_symbol(std::string_view text, int n);

/// Parses a constant expression (no coordinates), e.g. "1.5" or "0.3-2i".
Complex parse_complex(std::string_view text);

/// Deterministic rendering in the parse grammar. Numbers are printed in the
/// shortest form that reads back to the same double.
std::string format_symbol(const Symbol& s);
std::string format_complex(Complex v);

}  // namespace fock
