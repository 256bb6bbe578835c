#include "rhomax/modp.hpp"

#include <algorithm>

namespace rhomax::sym {

using exact::mul_mod;
using exact::pow_mod;

namespace {

std::uint64_t eval_flat(const TowerPtr& tower, const std::vector<BigRational>& coeffs,
                        const std::vector<std::uint64_t>& roots, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    auto e = tower->exponents_of(i);
    std::uint64_t term = exact::mod(coeffs[i], p);
    for (std::size_t k = 0; k < e.size() && k < roots.size(); ++k) term = mul_mod(term, pow_mod(roots[k], e[k], p), p);
    acc = (acc + term) % p;
  }
  return acc;
}

// Value of relation k's polynomial at c = x given roots for lower levels.
std::uint64_t relation_value(const TowerPtr& tower, std::size_t k, const std::vector<std::uint64_t>& lower,
                             std::uint64_t x, std::uint64_t p) {
  const auto& sym = tower->symbols()[k];
  std::uint64_t v = pow_mod(x, sym.degree, p);
  for (unsigned j = 0; j < sym.degree; ++j) {
    std::uint64_t a = eval_flat(tower, sym.relation[j], lower, p);
    v = (v + mul_mod(a, pow_mod(x, j, p), p)) % p;
  }
  return v;
}

}  // namespace

std::optional<TowerSpecialization> TowerSpecialization::resolve(const TowerPtr& tower, std::uint64_t p) {
  exact::require_odd_prime(p);
  std::vector<std::uint64_t> roots;
  for (std::size_t k = 0; k < tower->symbols().size(); ++k) {
    std::optional<std::uint64_t> found;
    for (std::uint64_t x = 0; x < p && !found; ++x)
      if (relation_value(tower, k, roots, x, p) == 0) found = x;
    if (!found) return std::nullopt;
    roots.push_back(*found);
  }
  return TowerSpecialization(tower, p, std::move(roots));
}

TowerSpecialization TowerSpecialization::with_roots(const TowerPtr& tower, std::uint64_t p,
                                                    std::vector<std::uint64_t> roots) {
  exact::require_odd_prime(p);
  if (roots.size() != tower->symbols().size()) throw DomainError("wrong number of tower roots");
  for (std::size_t k = 0; k < roots.size(); ++k) {
    std::vector<std::uint64_t> lower(roots.begin(), roots.begin() + static_cast<std::ptrdiff_t>(k));
    if (relation_value(tower, k, lower, roots[k] % p, p) != 0)
      throw DomainError("not a root of the relation for " + tower->symbols()[k].name);
  }
  return TowerSpecialization(tower, p, std::move(roots));
}

std::vector<TowerSpecialization> TowerSpecialization::all(const TowerPtr& tower, std::uint64_t p) {
  exact::require_odd_prime(p);
  std::vector<std::vector<std::uint64_t>> partial{{}};
  for (std::size_t k = 0; k < tower->symbols().size(); ++k) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& lower : partial)
      for (std::uint64_t x = 0; x < p; ++x)
        if (relation_value(tower, k, lower, x, p) == 0) {
          auto r = lower;
          r.push_back(x);
          next.push_back(std::move(r));
        }
    partial = std::move(next);
  }
  std::vector<TowerSpecialization> out;
  for (auto& r : partial) out.push_back(TowerSpecialization(tower, p, std::move(r)));
  return out;
}

std::uint64_t TowerSpecialization::eval(const TowerElement& a) const {
  require_same_tower(a.tower(), tower_);
  return eval_flat(tower_, a.coeffs(), roots_, p_);
}

ModPoly::ModPoly(const MPoly& f, const std::vector<VarId>& vars, const TowerSpecialization& spec)
    : p_(spec.prime()), nvars_(vars.size()), max_deg_(vars.size(), 0) {
  std::map<std::vector<unsigned>, std::uint64_t> acc;
  for (const auto& [m, c] : f.terms()) {
    std::vector<unsigned> e(nvars_, 0);
    for (const auto& [id, k] : m.powers()) {
      auto it = std::find(vars.begin(), vars.end(), id);
      if (it == vars.end()) throw DomainError("variable " + var_name(id) + " not assigned for reduction mod p");
      e[static_cast<std::size_t>(it - vars.begin())] = k;
    }
    auto& slot = acc[e];
    slot = (slot + spec.eval(c)) % p_;
  }
  for (auto& [e, c] : acc) {
    if (c == 0) continue;
    for (std::size_t i = 0; i < nvars_; ++i) max_deg_[i] = std::max(max_deg_[i], e[i]);
    terms_.emplace_back(e, c);
  }
}

std::uint64_t ModPoly::eval(std::span<const std::uint64_t> values) const {
  std::vector<std::vector<std::uint64_t>> pw(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    pw[i].resize(max_deg_[i] + 1);
    pw[i][0] = 1;
    for (unsigned k = 1; k <= max_deg_[i]; ++k) pw[i][k] = mul_mod(pw[i][k - 1], values[i] % p_, p_);
  }
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] != 0) t = mul_mod(t, pw[i][e[i]], p_);
    acc += t;
    if (acc >= p_) acc -= p_;
  }
  return acc;
}

std::vector<std::uint64_t> ModPoly::univariate(std::span<const std::uint64_t> values, std::size_t free_index) const {
  std::vector<std::vector<std::uint64_t>> pw(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (i == free_index) continue;
    pw[i].resize(max_deg_[i] + 1);
    pw[i][0] = 1;
    for (unsigned k = 1; k <= max_deg_[i]; ++k) pw[i][k] = mul_mod(pw[i][k - 1], values[i] % p_, p_);
  }
  std::vector<std::uint64_t> out(max_deg_[free_index] + 1, 0);
  for (const auto& [e, c] : terms_) {
    std::uint64_t t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (i != free_index && e[i] != 0) t = mul_mod(t, pw[i][e[i]], p_);
    auto& slot = out[e[free_index]];
    slot = (slot + t) % p_;
  }
  upoly::trim(out);
  return out;
}

std::vector<std::uint64_t> univariate_mod_p(const MPoly& f, VarId var, const TowerSpecialization& spec) {
  ModPoly mp(f, {var}, spec);
  std::vector<std::uint64_t> dummy{0};
  return mp.univariate(dummy, 0);
}

std::uint64_t eval_mod_p(const MPoly& f, const std::map<VarId, std::uint64_t>& values, const TowerSpecialization& spec) {
  std::vector<VarId> vars;
  std::vector<std::uint64_t> vals;
  for (const auto& [v, x] : values) {
    vars.push_back(v);
    vals.push_back(x);
  }
  return ModPoly(f, vars, spec).eval(vals);
}

namespace upoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = (exact::mul_mod(v, x, p) + *it) % p;
  return v;
}

Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  if (m.empty()) throw DomainError("polynomial division by zero");
  const std::size_t dm = m.size() - 1;
  std::uint64_t inv = pow_mod(m.back(), p - 2, p);
  while (a.size() > dm) {
    std::uint64_t f = exact::mul_mod(a.back(), inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - exact::mul_mod(f, m[i], p)) % p;
    trim(a);
  }
  return a;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + exact::mul_mod(a[i], b[j], p)) % p;
  return rem(std::move(prod), m, p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = pow_mod(a.back(), p - 2, p);
    for (auto& c : a) c = exact::mul_mod(c, inv, p);
  }
  return a;
}

std::uint64_t count_distinct_roots(const Poly& a0, std::uint64_t p) {
  Poly a = a0;
  trim(a);
  if (a.empty()) throw DomainError("count_distinct_roots of the zero polynomial");
  if (a.size() == 1) return 0;
  // gcd(a, x^p - x)
  Poly x{0, 1};
  Poly result{1};
  Poly base = rem(x, a, p);
  std::uint64_t e = p;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, a, p);
    base = mul_mod(base, base, a, p);
    e >>= 1U;
  }
  // result = x^p mod a; subtract x
  result.resize(std::max<std::size_t>(result.size(), 2), 0);
  result[1] = (result[1] + p - 1) % p;
  trim(result);
  Poly g = gcd(a, result, p);
  return g.empty() ? 0 : g.size() - 1;
}

}  // namespace upoly

}  // namespace rhomax::sym
