#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fock {

/// Largest ambient dimension a computation may use.
inline constexpr int kMaxDim = 6;

/// Largest single exponent for which factorials stay exact in a double.
inline constexpr int kMaxExactExponent = 20;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n-tuple of non-negative exponents with inline storage.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(int n);
  MultiIndex(std::initializer_list<int> exps);
  explicit MultiIndex(std::span<const int> exps);

  static MultiIndex zero(int n) { return MultiIndex(n); }
  static MultiIndex unit(int n, int k);

  int dim() const { return n_; }
  int operator[](int k) const { return e_[k]; }
  int& operator[](int k) { return e_[k]; }

  /// |i| = sum of entries
  int total() const;
  int max_entry() const;
  bool is_zero() const { return total() == 0; }

  /// Componentwise i <= other.
  bool le(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& o) const;
  /// Componentwise difference; requires o <= *this.
  MultiIndex operator-(const MultiIndex& o) const;

  friend bool operator==(const MultiIndex& x, const MultiIndex& y) {
    return x.n_ == y.n_ && x.e_ == y.e_;
  }

  std::span<const int> entries() const { return {e_.data(), static_cast<size_t>(n_)}; }
  std::string to_string() const;

 private:
  std::array<int, kMaxDim> e_{};
  int n_ = 0;
};

/// Graded-lex comparison: total degree first, then larger leading exponent first.
std::strong_ordering graded_lex_compare(const MultiIndex& x, const MultiIndex& y);

/// Scalar binomial C(n, k), exact.
std::int64_t binomial(int n, int k);
/// Scalar factorial, exact for k <= 20.
std::int64_t factorial(int k);

/// prod_k C(i_k, l_k). Throws on dimension mismatch or when l is not <= i.
std::int64_t mi_binomial(const MultiIndex& i, const MultiIndex& l);

/// prod_k i_k!. Throws std::overflow_error when an entry exceeds 20.
std::int64_t mi_factorial(const MultiIndex& i);

/// All alpha with |alpha| <= max_degree in graded-lex order.
std::vector<MultiIndex> mi_enumerate(int n, int max_degree);

/// Every l with l <= i, in graded-lex order.
std::vector<MultiIndex> mi_lower_set(const MultiIndex& i);

}  // namespace fock
