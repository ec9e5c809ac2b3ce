#include "fockcalc/toeplitz.hpp"

#include <cmath>

#include "fockcalc/parallel.hpp"
#include "fockcalc/sharp.hpp"

namespace fock {

HoloSymbol toeplitz_apply(const Symbol& phi, const HoloSymbol& u) {
  const int n = phi.dim();
  if (u.dim() != n) throw DimensionError("toeplitz_apply: dimension mismatch");
  std::vector<SymbolTerm> raw;
  for (const auto& t : phi.terms()) {
    std::vector<SymbolTerm> prod;
    prod.reserve(u.symbol().size());
    for (const auto& x : u.symbol().terms())
      prod.push_back(SymbolTerm{t.coef * x.coef, x.a + t.a, x.b, x.c + t.c, x.d});
    HoloSymbol v(Symbol::canonical(n, std::move(prod)));
    v = holo_derivative(v, t.b);
    if (!t.d.is_zero()) v = holo_shift(v, -t.d);
    const auto terms = v.symbol().terms();
    raw.insert(raw.end(), terms.begin(), terms.end());
  }
  return HoloSymbol(Symbol::canonical(n, std::move(raw)));
}

HoloSymbol apply_chain(const OpChain& chain, const HoloSymbol& u) {
  HoloSymbol cur = u;
  const auto& syms = chain.symbols();
  for (auto it = syms.rbegin(); it != syms.rend(); ++it) cur = toeplitz_apply(*it, cur);
  return cur;
}

HoloSymbol normalized_monomial(const MultiIndex& alpha) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(mi_factorial(alpha)));
  return HoloSymbol(Symbol::monomial(scale, alpha, MultiIndex(alpha.dim())));
}

EqualityReport op_equal_on_basis(const OpChain& a, const OpChain& b, int max_degree, double tol) {
  if (a.dim() != b.dim()) throw DimensionError("op_equal_on_basis: dimension mismatch");
  const auto basis = mi_enumerate(a.dim(), max_degree);
  EqualityReport rep;
  rep.per_basis.resize(basis.size());
  parallel_for(basis.size(), [&](size_t i) {
    const HoloSymbol e = normalized_monomial(basis[i]);
    const HoloSymbol ra = apply_chain(a, e);
    const HoloSymbol rb = apply_chain(b, e);
    const double na = ra.symbol().coefficient_norm();
    rep.per_basis[i] = {basis[i], difference_norm(ra, rb) / std::max(1.0, na), na};
  });
  rep.worst = basis.front();
  for (const auto& r : rep.per_basis) {
    if (r.residual > rep.max_residual) {
      rep.max_residual = r.residual;
      rep.worst = r.alpha;
    }
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

Symbol PluriharmonicPair::phi() const { return f.symbol() + sym_conj(g); }
Symbol PluriharmonicPair::psi() const { return u.symbol() + sym_conj(v); }

namespace {

void require_dims(const HoloSymbol& f, const HoloSymbol& g, const HoloSymbol& u,
                  const HoloSymbol& v) {
  if (g.dim() != f.dim() || u.dim() != f.dim() || v.dim() != f.dim())
    throw DimensionError("pluriharmonic data has mixed dimensions");
}

}  // namespace

Symbol brown_halmos_h(const HoloSymbol& f, const HoloSymbol& g, const HoloSymbol& u,
                      const HoloSymbol& v) {
  require_dims(f, g, u, v);
  const Symbol gbar = sym_conj(g);
  const Symbol vbar = sym_conj(v);
  std::vector<SymbolTerm> raw;
  for (const Symbol& part : {u.symbol() * gbar, f.symbol() * u.symbol(), gbar * vbar, sharp(f, v)})
    raw.insert(raw.end(), part.terms().begin(), part.terms().end());
  return Symbol::canonical(f.dim(), std::move(raw));
}

Symbol commutator_defect(const HoloSymbol& f, const HoloSymbol& g, const HoloSymbol& u,
                         const HoloSymbol& v) {
  require_dims(f, g, u, v);
  std::vector<SymbolTerm> raw;
  auto add = [&raw](const Symbol& s, double sign) {
    for (auto t : s.terms()) {
      t.coef *= sign;
      raw.push_back(t);
    }
  };
  add(u.symbol() * sym_conj(g), 1.0);
  add(f.symbol() * sym_conj(v), -1.0);
  add(sharp(u, g), -1.0);
  add(sharp(f, v), 1.0);
  return Symbol::canonical(f.dim(), std::move(raw));
}

}  // namespace fock
