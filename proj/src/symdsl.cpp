#include "fockcalc/symdsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fock {

ParseError::ParseError(size_t position, std::string message)
    : std::runtime_error("column " + std::to_string(position + 1) + ": " + message),
      position_(position),
      message_(std::move(message)) {}

namespace {

SymbolExpr node(SymbolExpr::Kind kind, size_t position) {
  SymbolExpr e;
  e.kind = kind;
  e.position = position;
  return e;
}

using Kind = SymbolExpr::Kind;

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  SymbolExpr parse() {
    skip_ws();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    SymbolExpr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) throw ParseError(pos_, std::string("expected '") + c + "' before end of input");
      throw ParseError(pos_, std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
  }

  SymbolExpr expr() {
    skip_ws();
    SymbolExpr sum = node(Kind::sum, pos_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    while (true) {
      skip_ws();
      const size_t at = pos_;
      SymbolExpr t = term();
      if (negate) {
        SymbolExpr neg = node(Kind::negation, at);
        neg.children.push_back(std::move(t));
        t = std::move(neg);
      }
      sum.children.push_back(std::move(t));
      if (accept('+'))
        negate = false;
      else if (accept('-'))
        negate = true;
      else
        break;
    }
    if (sum.children.size() == 1) return std::move(sum.children.front());
    return sum;
  }

  SymbolExpr term() {
    SymbolExpr prod = node(Kind::product, pos_);
    prod.children.push_back(factor());
    while (accept('*')) prod.children.push_back(factor());
    if (prod.children.size() == 1) return std::move(prod.children.front());
    return prod;
  }

  SymbolExpr factor() {
    SymbolExpr b = base();
    if (accept('^')) {
      skip_ws();
      const size_t at = pos_;
      const int e = natural();
      if (e > kMaxParsedPower)
        throw ParseError(at, "exponent " + std::to_string(e) + " exceeds limit " +
                                 std::to_string(kMaxParsedPower));
      SymbolExpr p = node(Kind::power, b.position);
      p.exponent = e;
      p.children.push_back(std::move(b));
      return p;
    }
    return b;
  }

  int natural() {
    const size_t start = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a non-negative integer");
    return static_cast<int>(v);
  }

  SymbolExpr base() {
    skip_ws();
    const size_t at = pos_;
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      SymbolExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t end = pos_;
      while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
      const std::string_view word = s_.substr(pos_, end - pos_);
      if (word == "z") {
        pos_ = end;
        SymbolExpr z = node(Kind::coordinate, at);
        z.index = natural();
        return z;
      }
      if (word == "conj" || word == "exp") {
        pos_ = end;
        SymbolExpr e = node(word == "conj" ? Kind::conj : Kind::exp, at);
        expect('(');
        e.children.push_back(expr());
        expect(')');
        return e;
      }
      if (word == "K") {
        pos_ = end;
        SymbolExpr k = node(Kind::kernel, at);
        expect('(');
        do {
          k.children.push_back(expr());
        } while (accept(','));
        expect(')');
        return k;
      }
      throw ParseError(at, "unknown identifier '" + std::string(word) + "'");
    }
    throw ParseError(at, std::string("unexpected '") + c + "'");
  }

  SymbolExpr number() {
    const size_t start = pos_;
    auto digits = [&] {
      size_t n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_, ++n;
      return n;
    };
    size_t nd = digits();
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      nd += digits();
    }
    if (nd == 0) throw ParseError(start, "malformed number");
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      size_t look = pos_ + 1;
      if (look < s_.size() && (s_[look] == '+' || s_[look] == '-')) ++look;
      if (look < s_.size() && std::isdigit(static_cast<unsigned char>(s_[look]))) {
        pos_ = look;
        digits();
      }
    }
    const std::string lexeme(s_.substr(start, pos_ - start));
    const double v = std::strtod(lexeme.c_str(), nullptr);
    if (!std::isfinite(v)) throw ParseError(start, "number out of range");
    SymbolExpr lit = node(Kind::literal, start);
    if (pos_ < s_.size() && s_[pos_] == 'i' &&
        (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      lit.value = {0.0, v};
    } else {
      lit.value = {v, 0.0};
    }
    return lit;
  }
};

Symbol lower(const SymbolExpr& e, int n);

Complex lower_constant(const SymbolExpr& e, int n) {
  const Symbol s = lower(e, n);
  if (s.is_zero()) return {};
  if (s.size() != 1 || !s.terms()[0].a.is_zero() || !s.terms()[0].b.is_zero() ||
      !s.terms()[0].c.is_zero() || !s.terms()[0].d.is_zero())
    throw ParseError(e.position, "expected a constant");
  return s.terms()[0].coef;
}

Symbol lower(const SymbolExpr& e, int n) {
  switch (e.kind) {
    case Kind::literal:
      return Symbol::constant(n, e.value);
    case Kind::coordinate:
      if (e.index < 1 || e.index > n)
        throw ParseError(e.position, "coordinate z" + std::to_string(e.index) +
                                         " out of range for n = " + std::to_string(n));
      return Symbol::coordinate(n, e.index - 1);
    case Kind::conj:
      return sym_conj(lower(e.children.front(), n));
    case Kind::negation:
      return -lower(e.children.front(), n);
    case Kind::sum: {
      std::vector<SymbolTerm> raw;
      for (const auto& c : e.children) {
        const Symbol s = lower(c, n);
        raw.insert(raw.end(), s.terms().begin(), s.terms().end());
      }
      return Symbol::canonical(n, std::move(raw));
    }
    case Kind::product: {
      Symbol acc = lower(e.children.front(), n);
      for (size_t i = 1; i < e.children.size(); ++i) acc = acc * lower(e.children[i], n);
      return acc;
    }
    case Kind::power: {
      const Symbol b = lower(e.children.front(), n);
      Symbol acc = Symbol::constant(n, 1.0);
      for (int k = 0; k < e.exponent; ++k) acc = acc * b;
      return acc;
    }
    case Kind::exp: {
      const Symbol arg = lower(e.children.front(), n);
      Complex constant{};
      CVec c(n), d(n);
      for (const auto& t : arg.terms()) {
        const int deg = t.a.total() + t.b.total();
        if (!t.c.is_zero() || !t.d.is_zero() || deg > 1)
          throw ParseError(e.children.front().position,
                           "nonlinear exponent: exp argument must be affine in z and conj(z)");
        if (deg == 0) {
          constant += t.coef;
        } else {
          for (int k = 0; k < n; ++k) {
            if (t.a[k] == 1) c[k] += t.coef;
            if (t.b[k] == 1) d[k] += t.coef;
          }
        }
      }
      return std::exp(constant) * Symbol::exponential(c, d);
    }
    case Kind::kernel: {
      if (static_cast<int>(e.children.size()) != n)
        throw ParseError(e.position, "K(...) needs " + std::to_string(n) + " entries, got " +
                                         std::to_string(e.children.size()));
      CVec w(n);
      for (int k = 0; k < n; ++k) w[k] = lower_constant(e.children[k], n);
      return Symbol::kernel(w);
    }
  }
  throw ParseError(e.position, "unsupported expression");
}

// Shortest text that parses back to the same double.
std::string fmt_real(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// Factor text for a coefficient; `negate` receives whether a leading minus
// was pulled out of a purely real value.
std::string coef_text(Complex v, bool& negate) {
  negate = false;
  if (v.imag() == 0.0) {
    negate = v.real() < 0 || std::signbit(v.real());
    return fmt_real(std::abs(v.real()));
  }
  return format_complex(v);
}

struct Piece {
  bool negative;
  std::string body;
};

std::string join(const std::vector<Piece>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      out += pieces[i].negative ? "-" : "";
    else
      out += pieces[i].negative ? " - " : " + ";
    out += pieces[i].body;
  }
  return out;
}

Piece scaled(Complex coef, const std::vector<std::string>& factors) {
  bool neg = false;
  const std::string ct = coef_text(coef, neg);
  std::string body;
  const bool unit = coef.imag() == 0.0 && std::abs(coef.real()) == 1.0;
  if (!unit || factors.empty()) body = ct;
  for (const auto& f : factors) {
    if (!body.empty()) body += "*";
    body += f;
  }
  return {neg, body};
}

std::string power(std::string base, int e) {
  return e == 1 ? base : base + "^" + std::to_string(e);
}

}  // namespace

SymbolExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

Symbol lower_expr(const SymbolExpr& expr, int n) {
  if (n < 1 || n > kMaxDim) throw ParseError(0, "dimension " + std::to_string(n) + " out of range");
  return lower(expr, n);
}

Symbol parse_symbol(std::string_view text, int n) { return lower_expr(parse_expr(text), n); }

Complex parse_complex(std::string_view text) {
  const SymbolExpr e = parse_expr(text);
  return lower_constant(e, 1);
}

std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return fmt_real(v.real());
  const double im = v.imag();
  return "(" + fmt_real(v.real()) + (im < 0 ? "-" : "+") + fmt_real(std::abs(im)) + "i)";
}

std::string format_symbol(const Symbol& s) {
  const int n = s.dim();
  std::vector<Piece> pieces;
  for (const auto& t : s.terms()) {
    std::vector<std::string> factors;
    for (int k = 0; k < n; ++k)
      if (t.a[k]) factors.push_back(power("z" + std::to_string(k + 1), t.a[k]));
    for (int k = 0; k < n; ++k)
      if (t.b[k]) factors.push_back(power("conj(z" + std::to_string(k + 1) + ")", t.b[k]));
    if (!t.c.is_zero() || !t.d.is_zero()) {
      std::vector<Piece> lin;
      for (int k = 0; k < n; ++k)
        if (t.c[k] != Complex{}) lin.push_back(scaled(t.c[k], {"z" + std::to_string(k + 1)}));
      for (int k = 0; k < n; ++k)
        if (t.d[k] != Complex{}) lin.push_back(scaled(t.d[k], {"conj(z" + std::to_string(k + 1) + ")"}));
      factors.push_back("exp(" + join(lin) + ")");
    }
    pieces.push_back(scaled(t.coef, factors));
  }
  return join(pieces);
}

}  // namespace fock
