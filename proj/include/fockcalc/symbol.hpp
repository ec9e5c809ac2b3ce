#pragma once

// Polynomial x exponential symbols on C^n.
//
// A term coef * z^a * conj(z)^b * exp(z.c + conj(z).d) uses the bilinear
// pairing z.c = sum_k z_k c_k. A Symbol is a finite canonical sum of terms:
// identical keys merged, exponential parameters grouped on a 1e-9 grid,
// coefficients below 1e-12 * max(1, largest input modulus) dropped.
//
// This class is closed under every operation the engine needs (products,
// conjugation, Wirtinger derivatives, argument shifts, Berezin transform,
// Toeplitz action). General entire functions given by power series are not
// representable.

#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "fockcalc/multi_index.hpp"

namespace fock {

using Complex = std::complex<double>;

/// Absolute grouping tolerance for exponential parameters.
inline constexpr double kExpGroupTol = 1e-9;
/// Relative coefficient floor applied by canonicalization.
inline constexpr double kCoefFloor = 1e-12;
/// Relative tolerance used when comparing canonical symbols.
inline constexpr double kCompareRelTol = 1e-9;

/// Complex n-vector with inline storage.
class CVec {
 public:
  CVec() = default;
  explicit CVec(int n);
  CVec(std::initializer_list<Complex> v);
  explicit CVec(std::span<const Complex> v);

  static CVec zero(int n) { return CVec(n); }
  static CVec filled(int n, Complex v);
  static CVec unit(int n, int k);

  int dim() const { return n_; }
  Complex operator[](int k) const { return v_[k]; }
  Complex& operator[](int k) { return v_[k]; }

  bool is_zero() const;
  double norm() const;
  CVec conj() const;

  CVec operator+(const CVec& o) const;
  CVec operator-(const CVec& o) const;
  CVec operator-() const;
  CVec operator*(Complex s) const;

  friend bool operator==(const CVec& x, const CVec& y) { return x.n_ == y.n_ && x.v_ == y.v_; }

  std::span<const Complex> entries() const { return {v_.data(), static_cast<size_t>(n_)}; }

 private:
  std::array<Complex, kMaxDim> v_{};
  int n_ = 0;
};

/// Bilinear pairing x.y = sum_k x_k y_k (no conjugation).
Complex dot(const CVec& x, const CVec& y);

/// |x|^2 = x.conj(x)
double norm2(const CVec& x);

/// True when every real and imaginary part differs by at most tol.
bool within(const CVec& x, const CVec& y, double tol);

struct SymbolTerm {
  Complex coef;
  MultiIndex a;  // holomorphic exponents
  MultiIndex b;  // anti-holomorphic exponents
  CVec c;        // holomorphic exponential parameter
  CVec d;        // anti-holomorphic exponential parameter

  int dim() const { return a.dim(); }
  bool is_holomorphic() const { return b.is_zero() && d.is_zero(); }
  /// Value at zeta.
  Complex eval(const CVec& zeta) const;
};

/// Same (a, b) and exponential parameters grouped within kExpGroupTol.
bool same_key(const SymbolTerm& x, const SymbolTerm& y);

/// Canonical term order: graded-lex on (a, b), then lexicographic on (c, d).
bool term_order(const SymbolTerm& x, const SymbolTerm& y);

SymbolTerm make_term(Complex coef, const MultiIndex& a, const MultiIndex& b, const CVec& c,
                     const CVec& d);

enum class Floor { apply, skip };

class Symbol {
 public:
  Symbol() = default;
  /// Zero symbol in dimension n.
  explicit Symbol(int n);

  /// Canonicalizes `raw`; every term must have dimension n.
  static Symbol canonical(int n, std::vector<SymbolTerm> raw, Floor floor = Floor::apply);

  static Symbol constant(int n, Complex v);
  /// z_k, 0-based coordinate
  static Symbol coordinate(int n, int k);
  /// conj(z_k), 0-based coordinate
  static Symbol conj_coordinate(int n, int k);
  static Symbol monomial(Complex coef, const MultiIndex& a, const MultiIndex& b);
  /// exp(z.c + conj(z).d)
  static Symbol exponential(const CVec& c, const CVec& d);
  /// Reproducing kernel K_w(z) = exp(z.conj(w)).
  static Symbol kernel(const CVec& w);

  int dim() const { return n_; }
  std::span<const SymbolTerm> terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_holomorphic() const;

  /// Largest |a|+|b| over terms; -1 for the zero symbol.
  int degree() const;
  /// Euclidean norm of the coefficient list.
  double coefficient_norm() const;
  double max_coefficient() const;
  /// Coefficient of the exponent-free constant term.
  Complex constant_term() const;

  Symbol operator-() const;
  friend Symbol operator+(const Symbol& x, const Symbol& y);
  friend Symbol operator-(const Symbol& x, const Symbol& y);
  friend Symbol operator*(const Symbol& x, const Symbol& y);
  friend Symbol operator*(Complex s, const Symbol& x);

 private:
  int n_ = 0;
  std::vector<SymbolTerm> terms_;
};

Symbol sym_canon(int n, std::vector<SymbolTerm> raw);
Symbol sym_mul(const Symbol& s, const Symbol& t);
Symbol sym_conj(const Symbol& s);
/// Wirtinger d/dz_k with conj(z) held constant; k is 0-based.
Symbol sym_dz(const Symbol& s, int k);
/// d^m / dz^m, closed form per term.
Symbol sym_dz(const Symbol& s, const MultiIndex& m);
Complex sym_eval(const Symbol& s, const CVec& zeta);

/// Exact residual of x - y: the merged difference is formed without the
/// coefficient floor, so rounding noise stays visible.
Symbol raw_difference(const Symbol& x, const Symbol& y);
/// Coefficient norm of raw_difference(x, y).
double difference_norm(const Symbol& x, const Symbol& y);
/// max_k |(x - y)_k| / max(1, largest coefficient of x or y).
double coefficientwise_residual(const Symbol& x, const Symbol& y);
bool approx_equal(const Symbol& x, const Symbol& y, double rel_tol = kCompareRelTol);

class NotHolomorphicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A Symbol with every b = 0 and d = 0; an element of the invariant
/// subspace of F^2 that Toeplitz operators act on.
class HoloSymbol {
 public:
  HoloSymbol() = default;
  explicit HoloSymbol(int n) : s_(n) {}
  /// Throws NotHolomorphicError if any term carries conj(z).
  explicit HoloSymbol(Symbol s);

  static HoloSymbol constant(int n, Complex v) { return HoloSymbol(Symbol::constant(n, v)); }
  static HoloSymbol coordinate(int n, int k) { return HoloSymbol(Symbol::coordinate(n, k)); }
  static HoloSymbol kernel(const CVec& w) { return HoloSymbol(Symbol::kernel(w)); }

  const Symbol& symbol() const { return s_; }
  operator const Symbol&() const { return s_; }
  int dim() const { return s_.dim(); }
  bool is_zero() const { return s_.is_zero(); }

  friend HoloSymbol operator+(const HoloSymbol& x, const HoloSymbol& y);
  friend HoloSymbol operator-(const HoloSymbol& x, const HoloSymbol& y);
  friend HoloSymbol operator*(const HoloSymbol& x, const HoloSymbol& y);
  friend HoloSymbol operator*(Complex s, const HoloSymbol& x);

 private:
  Symbol s_;
};

/// f*(z) = conj(f(conj(z))): conjugates coefficients and exponential parameters.
HoloSymbol holo_reflect(const HoloSymbol& f);
/// z -> f(z - eta)
HoloSymbol holo_shift(const HoloSymbol& f, const CVec& eta);
/// d^m f
HoloSymbol holo_derivative(const HoloSymbol& f, const MultiIndex& m);

}  // namespace fock
