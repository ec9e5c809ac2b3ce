#include "fockcalc/multi_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fock {

namespace {

void check_dim(int n) {
  if (n < 0 || n > kMaxDim) {
    throw DimensionError("dimension " + std::to_string(n) + " outside [0, " +
                         std::to_string(kMaxDim) + "]");
  }
}

}  // namespace

MultiIndex::MultiIndex(int n) : n_(n) { check_dim(n); }

MultiIndex::MultiIndex(std::initializer_list<int> exps)
    : MultiIndex(std::span<const int>(exps.begin(), exps.size())) {}

MultiIndex::MultiIndex(std::span<const int> exps) : n_(static_cast<int>(exps.size())) {
  check_dim(n_);
  for (int k = 0; k < n_; ++k) {
    if (exps[k] < 0) throw std::invalid_argument("negative multi-index entry");
    e_[k] = exps[k];
  }
}

MultiIndex MultiIndex::unit(int n, int k) {
  MultiIndex m(n);
  if (k < 0 || k >= n) throw std::out_of_range("coordinate index out of range");
  m.e_[k] = 1;
  return m;
}

int MultiIndex::total() const { return std::accumulate(e_.begin(), e_.begin() + n_, 0); }

int MultiIndex::max_entry() const {
  return n_ == 0 ? 0 : *std::max_element(e_.begin(), e_.begin() + n_);
}

bool MultiIndex::le(const MultiIndex& other) const {
  if (n_ != other.n_) throw DimensionError("multi-index dimension mismatch");
  for (int k = 0; k < n_; ++k)
    if (e_[k] > other.e_[k]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (n_ != o.n_) throw DimensionError("multi-index dimension mismatch");
  MultiIndex r(*this);
  for (int k = 0; k < n_; ++k) r.e_[k] += o.e_[k];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (!o.le(*this)) throw std::invalid_argument("multi-index subtraction would go negative");
  MultiIndex r(*this);
  for (int k = 0; k < n_; ++k) r.e_[k] -= o.e_[k];
  return r;
}

std::string MultiIndex::to_string() const {
  std::string s = "(";
  for (int k = 0; k < n_; ++k) {
    if (k) s += ",";
    s += std::to_string(e_[k]);
  }
  return s + ")";
}

std::strong_ordering graded_lex_compare(const MultiIndex& x, const MultiIndex& y) {
  if (auto c = x.total() <=> y.total(); c != 0) return c;
  const int n = std::min(x.dim(), y.dim());
  for (int k = 0; k < n; ++k) {
    // larger leading exponent sorts first within a degree
    if (auto c = y[k] <=> x[k]; c != 0) return c;
  }
  return x.dim() <=> y.dim();
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

std::int64_t factorial(int k) {
  if (k < 0) throw std::invalid_argument("negative factorial");
  if (k > kMaxExactExponent) throw std::overflow_error("factorial argument exceeds 20");
  std::int64_t r = 1;
  for (int j = 2; j <= k; ++j) r *= j;
  return r;
}

std::int64_t mi_binomial(const MultiIndex& i, const MultiIndex& l) {
  if (i.dim() != l.dim()) throw DimensionError("mi_binomial: dimension mismatch");
  if (!l.le(i)) throw std::invalid_argument("mi_binomial: lower index not <= upper index");
  std::int64_t r = 1;
  for (int k = 0; k < i.dim(); ++k) r *= binomial(i[k], l[k]);
  return r;
}

std::int64_t mi_factorial(const MultiIndex& i) {
  std::int64_t r = 1;
  for (int k = 0; k < i.dim(); ++k) {
    if (i[k] > kMaxExactExponent)
      throw std::overflow_error("mi_factorial: exponent " + std::to_string(i[k]) + " exceeds 20");
    r *= factorial(i[k]);
  }
  return r;
}

namespace {

// Fill entries k.. with exactly `remaining` total, leading entries largest first.
void enumerate_exact(MultiIndex& cur, int k, int remaining, std::vector<MultiIndex>& out) {
  const int n = cur.dim();
  if (k == n - 1) {
    cur[k] = remaining;
    out.push_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[k] = v;
    enumerate_exact(cur, k + 1, remaining - v, out);
  }
  cur[k] = 0;
}

}  // namespace

std::vector<MultiIndex> mi_enumerate(int n, int max_degree) {
  if (n < 1) throw DimensionError("mi_enumerate: n must be >= 1");
  std::vector<MultiIndex> out;
  MultiIndex cur(n);
  for (int d = 0; d <= max_degree; ++d) enumerate_exact(cur, 0, d, out);
  return out;
}

std::vector<MultiIndex> mi_lower_set(const MultiIndex& i) {
  std::vector<MultiIndex> out;
  MultiIndex cur(i.dim());
  // odometer over the box [0, i]
  while (true) {
    out.push_back(cur);
    int k = 0;
    while (k < i.dim() && cur[k] == i[k]) cur[k++] = 0;
    if (k == i.dim()) break;
    ++cur[k];
  }
  std::sort(out.begin(), out.end(),
            [](const MultiIndex& x, const MultiIndex& y) { return graded_lex_compare(x, y) < 0; });
  return out;
}

}  // namespace fock
