#include "fockcalc/symbol.hpp"

#include <algorithm>
#include <cmath>

#include "expand.hpp"

namespace fock {

// ---- CVec -----------------------------------------------------------------

CVec::CVec(int n) : n_(n) {
  if (n < 0 || n > kMaxDim) throw DimensionError("vector dimension out of range");
}

CVec::CVec(std::initializer_list<Complex> v)
    : CVec(std::span<const Complex>(v.begin(), v.size())) {}

CVec::CVec(std::span<const Complex> v) : CVec(static_cast<int>(v.size())) {
  std::copy(v.begin(), v.end(), v_.begin());
}

CVec CVec::filled(int n, Complex v) {
  CVec r(n);
  for (int k = 0; k < n; ++k) r.v_[k] = v;
  return r;
}

CVec CVec::unit(int n, int k) {
  CVec r(n);
  if (k < 0 || k >= n) throw std::out_of_range("coordinate index out of range");
  r.v_[k] = 1.0;
  return r;
}

bool CVec::is_zero() const {
  for (int k = 0; k < n_; ++k)
    if (v_[k] != Complex{}) return false;
  return true;
}

double CVec::norm() const { return std::sqrt(norm2(*this)); }

CVec CVec::conj() const {
  CVec r(*this);
  for (int k = 0; k < n_; ++k) r.v_[k] = std::conj(v_[k]);
  return r;
}

CVec CVec::operator+(const CVec& o) const {
  if (n_ != o.n_) throw DimensionError("vector dimension mismatch");
  CVec r(*this);
  for (int k = 0; k < n_; ++k) r.v_[k] += o.v_[k];
  return r;
}

CVec CVec::operator-(const CVec& o) const { return *this + (-o); }

CVec CVec::operator-() const {
  CVec r(*this);
  for (int k = 0; k < n_; ++k) r.v_[k] = -v_[k];
  return r;
}

CVec CVec::operator*(Complex s) const {
  CVec r(*this);
  for (int k = 0; k < n_; ++k) r.v_[k] *= s;
  return r;
}

Complex dot(const CVec& x, const CVec& y) {
  if (x.dim() != y.dim()) throw DimensionError("vector dimension mismatch");
  Complex s{};
  for (int k = 0; k < x.dim(); ++k) s += x[k] * y[k];
  return s;
}

double norm2(const CVec& x) {
  double s = 0;
  for (int k = 0; k < x.dim(); ++k) s += std::norm(x[k]);
  return s;
}

bool within(const CVec& x, const CVec& y, double tol) {
  if (x.dim() != y.dim()) return false;
  for (int k = 0; k < x.dim(); ++k) {
    if (std::abs(x[k].real() - y[k].real()) > tol) return false;
    if (std::abs(x[k].imag() - y[k].imag()) > tol) return false;
  }
  return true;
}

// ---- terms ----------------------------------------------------------------

namespace detail {

Complex ipow(Complex x, int k) {
  Complex r = 1.0;
  while (k > 0) {
    if (k & 1) r *= x;
    x *= x;
    k >>= 1;
  }
  return r;
}

void expand_tensor(const std::vector<std::vector<Factor>>& per_coord, Complex coef, const CVec& c,
                   const CVec& d, std::vector<SymbolTerm>& out) {
  const int n = static_cast<int>(per_coord.size());
  for (const auto& f : per_coord)
    if (f.empty()) return;
  std::array<size_t, kMaxDim> idx{};
  while (true) {
    SymbolTerm t{coef, MultiIndex(n), MultiIndex(n), c, d};
    for (int k = 0; k < n; ++k) {
      const Factor& f = per_coord[k][idx[k]];
      t.coef *= f.coef;
      t.a[k] = f.p;
      t.b[k] = f.q;
    }
    if (t.coef != Complex{}) out.push_back(t);
    int k = 0;
    while (k < n && ++idx[k] == per_coord[k].size()) idx[k++] = 0;
    if (k == n) break;
  }
}

}  // namespace detail

Complex SymbolTerm::eval(const CVec& zeta) const {
  Complex v = coef;
  Complex e{};
  for (int k = 0; k < dim(); ++k) {
    v *= detail::ipow(zeta[k], a[k]) * detail::ipow(std::conj(zeta[k]), b[k]);
    e += zeta[k] * c[k] + std::conj(zeta[k]) * d[k];
  }
  return e == Complex{} ? v : v * std::exp(e);
}

SymbolTerm make_term(Complex coef, const MultiIndex& a, const MultiIndex& b, const CVec& c,
                     const CVec& d) {
  const int n = a.dim();
  if (b.dim() != n || c.dim() != n || d.dim() != n)
    throw DimensionError("term components have mismatched dimensions");
  return SymbolTerm{coef, a, b, c, d};
}

bool same_key(const SymbolTerm& x, const SymbolTerm& y) {
  return x.a == y.a && x.b == y.b && within(x.c, y.c, kExpGroupTol) &&
         within(x.d, y.d, kExpGroupTol);
}

namespace {

std::strong_ordering monomial_compare(const SymbolTerm& x, const SymbolTerm& y) {
  const int tx = x.a.total() + x.b.total();
  const int ty = y.a.total() + y.b.total();
  if (auto c = tx <=> ty; c != 0) return c;
  if (auto c = graded_lex_compare(x.a, y.a); c != 0) return c;
  return graded_lex_compare(x.b, y.b);
}

std::weak_ordering vec_compare(const CVec& x, const CVec& y) {
  for (int k = 0; k < x.dim(); ++k) {
    if (auto c = x[k].real() <=> y[k].real(); c != 0) return c == std::partial_ordering::less ? std::weak_ordering::less : std::weak_ordering::greater;
    if (auto c = x[k].imag() <=> y[k].imag(); c != 0) return c == std::partial_ordering::less ? std::weak_ordering::less : std::weak_ordering::greater;
  }
  return std::weak_ordering::equivalent;
}

}  // namespace

bool term_order(const SymbolTerm& x, const SymbolTerm& y) {
  if (auto c = monomial_compare(x, y); c != 0) return c < 0;
  if (auto c = vec_compare(x.c, y.c); c != 0) return c < 0;
  return vec_compare(x.d, y.d) < 0;
}

// ---- Symbol ---------------------------------------------------------------

Symbol::Symbol(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) throw DimensionError("symbol dimension out of range");
}

Symbol Symbol::canonical(int n, std::vector<SymbolTerm> raw, Floor floor) {
  Symbol s(n);
  double scale = 1.0;
  for (const auto& t : raw) {
    if (t.a.dim() != n || t.b.dim() != n || t.c.dim() != n || t.d.dim() != n)
      throw DimensionError("term dimension does not match symbol dimension " + std::to_string(n));
    scale = std::max(scale, std::abs(t.coef));
  }
  std::sort(raw.begin(), raw.end(), term_order);

  std::vector<SymbolTerm> merged;
  merged.reserve(raw.size());
  size_t group_begin = 0;
  for (const auto& t : raw) {
    if (t.coef == Complex{}) continue;
    // groups share (a, b); search the current group for a close exponential key
    if (!merged.empty() && group_begin < merged.size() &&
        monomial_compare(merged[group_begin], t) != 0)
      group_begin = merged.size();
    bool found = false;
    for (size_t j = group_begin; j < merged.size(); ++j) {
      if (within(merged[j].c, t.c, kExpGroupTol) && within(merged[j].d, t.d, kExpGroupTol)) {
        merged[j].coef += t.coef;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(t);
  }

  const double cutoff = floor == Floor::apply ? kCoefFloor * scale : 0.0;
  std::erase_if(merged, [&](const SymbolTerm& t) {
    return t.coef == Complex{} || std::abs(t.coef) < cutoff;
  });
  std::sort(merged.begin(), merged.end(), term_order);
  s.terms_ = std::move(merged);
  return s;
}

Symbol Symbol::constant(int n, Complex v) {
  return canonical(n, {SymbolTerm{v, MultiIndex(n), MultiIndex(n), CVec(n), CVec(n)}});
}

Symbol Symbol::coordinate(int n, int k) {
  return canonical(n, {SymbolTerm{1.0, MultiIndex::unit(n, k), MultiIndex(n), CVec(n), CVec(n)}});
}

Symbol Symbol::conj_coordinate(int n, int k) {
  return canonical(n, {SymbolTerm{1.0, MultiIndex(n), MultiIndex::unit(n, k), CVec(n), CVec(n)}});
}

Symbol Symbol::monomial(Complex coef, const MultiIndex& a, const MultiIndex& b) {
  const int n = a.dim();
  return canonical(n, {make_term(coef, a, b, CVec(n), CVec(n))});
}

Symbol Symbol::exponential(const CVec& c, const CVec& d) {
  const int n = c.dim();
  return canonical(n, {make_term(1.0, MultiIndex(n), MultiIndex(n), c, d)});
}

Symbol Symbol::kernel(const CVec& w) { return exponential(w.conj(), CVec(w.dim())); }

bool Symbol::is_holomorphic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const SymbolTerm& t) { return t.is_holomorphic(); });
}

int Symbol::degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, t.a.total() + t.b.total());
  return deg;
}

double Symbol::coefficient_norm() const {
  double s = 0;
  for (const auto& t : terms_) s += std::norm(t.coef);
  return std::sqrt(s);
}

double Symbol::max_coefficient() const {
  double m = 0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coef));
  return m;
}

Complex Symbol::constant_term() const {
  for (const auto& t : terms_)
    if (t.a.is_zero() && t.b.is_zero() && t.c.is_zero() && t.d.is_zero()) return t.coef;
  return {};
}

Symbol Symbol::operator-() const {
  Symbol r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

void require_same_dim(const Symbol& x, const Symbol& y) {
  if (x.dim() != y.dim())
    throw DimensionError("symbol dimension mismatch: " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
}

std::vector<SymbolTerm> concat(const Symbol& x, const Symbol& y, Complex y_scale) {
  std::vector<SymbolTerm> raw(x.terms().begin(), x.terms().end());
  raw.reserve(x.size() + y.size());
  for (auto t : y.terms()) {
    t.coef *= y_scale;
    raw.push_back(t);
  }
  return raw;
}

}  // namespace

Symbol operator+(const Symbol& x, const Symbol& y) {
  require_same_dim(x, y);
  return Symbol::canonical(x.dim(), concat(x, y, 1.0));
}

Symbol operator-(const Symbol& x, const Symbol& y) {
  require_same_dim(x, y);
  return Symbol::canonical(x.dim(), concat(x, y, -1.0));
}

Symbol operator*(Complex s, const Symbol& x) {
  std::vector<SymbolTerm> raw(x.terms().begin(), x.terms().end());
  for (auto& t : raw) t.coef *= s;
  return Symbol::canonical(x.dim(), std::move(raw));
}

Symbol operator*(const Symbol& x, const Symbol& y) { return sym_mul(x, y); }

Symbol sym_canon(int n, std::vector<SymbolTerm> raw) { return Symbol::canonical(n, std::move(raw)); }

Symbol sym_mul(const Symbol& s, const Symbol& t) {
  require_same_dim(s, t);
  std::vector<SymbolTerm> raw;
  raw.reserve(s.size() * t.size());
  for (const auto& x : s.terms())
    for (const auto& y : t.terms())
      raw.push_back(SymbolTerm{x.coef * y.coef, x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d});
  return Symbol::canonical(s.dim(), std::move(raw));
}

Symbol sym_conj(const Symbol& s) {
  std::vector<SymbolTerm> raw;
  raw.reserve(s.size());
  for (const auto& t : s.terms())
    raw.push_back(SymbolTerm{std::conj(t.coef), t.b, t.a, t.d.conj(), t.c.conj()});
  return Symbol::canonical(s.dim(), std::move(raw));
}

Symbol sym_dz(const Symbol& s, int k) {
  if (k < 0 || k >= s.dim()) throw std::out_of_range("sym_dz: coordinate index out of range");
  std::vector<SymbolTerm> raw;
  raw.reserve(2 * s.size());
  for (const auto& t : s.terms()) {
    if (t.a[k] > 0) {
      SymbolTerm u = t;
      u.coef *= static_cast<double>(t.a[k]);
      u.a[k] -= 1;
      raw.push_back(u);
    }
    if (t.c[k] != Complex{}) {
      SymbolTerm u = t;
      u.coef *= t.c[k];
      raw.push_back(u);
    }
  }
  return Symbol::canonical(s.dim(), std::move(raw));
}

Symbol sym_dz(const Symbol& s, const MultiIndex& m) {
  if (m.dim() != s.dim()) throw DimensionError("sym_dz: derivative order dimension mismatch");
  if (m.is_zero()) return s;
  const int n = s.dim();
  std::vector<SymbolTerm> raw;
  std::vector<std::vector<detail::Factor>> per(n);
  for (const auto& t : s.terms()) {
    // d^m (z^a e^{zc}) = prod_k sum_j C(m_k, j) a_k!/(a_k-j)! c_k^{m_k-j} z_k^{a_k-j}
    for (int k = 0; k < n; ++k) {
      per[k].clear();
      double falling = 1.0;
      for (int j = 0; j <= std::min(m[k], t.a[k]); ++j) {
        if (j > 0) falling *= static_cast<double>(t.a[k] - j + 1);
        const Complex cf = static_cast<double>(binomial(m[k], j)) * falling *
                           detail::ipow(t.c[k], m[k] - j);
        if (cf != Complex{}) per[k].push_back({t.a[k] - j, t.b[k], cf});
      }
    }
    detail::expand_tensor(per, t.coef, t.c, t.d, raw);
  }
  return Symbol::canonical(n, std::move(raw));
}

Complex sym_eval(const Symbol& s, const CVec& zeta) {
  if (zeta.dim() != s.dim()) throw DimensionError("sym_eval: point dimension mismatch");
  Complex v{};
  for (const auto& t : s.terms()) v += t.eval(zeta);
  return v;
}

Symbol raw_difference(const Symbol& x, const Symbol& y) {
  require_same_dim(x, y);
  return Symbol::canonical(x.dim(), concat(x, y, -1.0), Floor::skip);
}

double difference_norm(const Symbol& x, const Symbol& y) {
  return raw_difference(x, y).coefficient_norm();
}

double coefficientwise_residual(const Symbol& x, const Symbol& y) {
  const double scale = std::max({1.0, x.max_coefficient(), y.max_coefficient()});
  return raw_difference(x, y).max_coefficient() / scale;
}

bool approx_equal(const Symbol& x, const Symbol& y, double rel_tol) {
  return coefficientwise_residual(x, y) <= rel_tol;
}

// ---- HoloSymbol -----------------------------------------------------------

HoloSymbol::HoloSymbol(Symbol s) : s_(std::move(s)) {
  if (!s_.is_holomorphic()) throw NotHolomorphicError("symbol depends on conj(z)");
}

HoloSymbol operator+(const HoloSymbol& x, const HoloSymbol& y) { return HoloSymbol(x.s_ + y.s_); }
HoloSymbol operator-(const HoloSymbol& x, const HoloSymbol& y) { return HoloSymbol(x.s_ - y.s_); }
HoloSymbol operator*(const HoloSymbol& x, const HoloSymbol& y) { return HoloSymbol(x.s_ * y.s_); }
HoloSymbol operator*(Complex s, const HoloSymbol& x) { return HoloSymbol(s * x.s_); }

HoloSymbol holo_reflect(const HoloSymbol& f) {
  std::vector<SymbolTerm> raw;
  raw.reserve(f.symbol().size());
  for (const auto& t : f.symbol().terms())
    raw.push_back(SymbolTerm{std::conj(t.coef), t.a, t.b, t.c.conj(), t.d});
  return HoloSymbol(Symbol::canonical(f.dim(), std::move(raw)));
}

HoloSymbol holo_shift(const HoloSymbol& f, const CVec& eta) {
  const int n = f.dim();
  if (eta.dim() != n) throw DimensionError("holo_shift: shift dimension mismatch");
  std::vector<SymbolTerm> raw;
  std::vector<std::vector<detail::Factor>> per(n);
  for (const auto& t : f.symbol().terms()) {
    // (z_k - eta_k)^{a_k} = sum_j C(a_k, j) z_k^j (-eta_k)^{a_k - j}
    for (int k = 0; k < n; ++k) {
      per[k].clear();
      for (int j = 0; j <= t.a[k]; ++j) {
        const Complex cf = static_cast<double>(binomial(t.a[k], j)) * detail::ipow(-eta[k], t.a[k] - j);
        if (cf != Complex{}) per[k].push_back({j, 0, cf});
      }
    }
    const Complex e = dot(eta, t.c);
    detail::expand_tensor(per, e == Complex{} ? t.coef : t.coef * std::exp(-e), t.c, t.d, raw);
  }
  return HoloSymbol(Symbol::canonical(n, std::move(raw)));
}

HoloSymbol holo_derivative(const HoloSymbol& f, const MultiIndex& m) {
  return HoloSymbol(sym_dz(f.symbol(), m));
}

}  // namespace fock
