#include "rhomax/curves.hpp"

#include <algorithm>
#include <set>

#include "rhomax/linalg.hpp"

namespace rhomax::curves {

using exact::ExtField;
using sym::ModPoly;
using sym::TowerSpecialization;
namespace upoly = sym::upoly;

namespace {

void require_only(const MPoly& f, const std::vector<VarId>& allowed, const std::string& what) {
  for (VarId v : f.variables())
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
      throw DomainError(what + " involves unexpected variable " + sym::var_name(v));
}

// Enumerates representatives of P^{n-1}(F_p): first nonzero coordinate is 1.
template <class F>
void for_each_projective(std::size_t n, std::uint64_t p, F&& fn) {
  std::vector<std::uint64_t> v(n, 0);
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::fill(v.begin(), v.end(), 0);
    v[lead] = 1;
    const std::size_t free = n - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = lead + 1; i < n; ++i) {
        v[i] = r % p;
        r /= p;
      }
      fn(v);
    }
  }
}

std::vector<std::int8_t> character_table(std::uint64_t p) {
  std::vector<std::int8_t> chi(p, -1);
  chi[0] = 0;
  for (std::uint64_t x = 1; x <= p / 2; ++x) chi[exact::mul_mod(x, x, p)] = 1;
  return chi;
}

std::vector<std::uint32_t> root_count_table(std::uint64_t m, std::uint64_t p) {
  std::vector<std::uint32_t> cnt(p, 0);
  for (std::uint64_t x = 0; x < p; ++x) ++cnt[exact::pow_mod(x, m, p)];
  return cnt;
}

upoly::Poly derivative(const upoly::Poly& a, std::uint64_t p) {
  upoly::Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(exact::mul_mod(a[i], i % p, p));
  upoly::trim(d);
  return d;
}

// Reduces a univariate model polynomial, rejecting primes where the degree
// drops or a repeated root appears.
upoly::Poly reduce_squarefree(const MPoly& f, VarId x, const TowerSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  auto fp = sym::univariate_mod_p(f, x, spec);
  if (fp.size() != f.degree(x) + 1) throw BadReduction("leading coefficient vanishes mod " + std::to_string(p));
  auto g = upoly::gcd(fp, derivative(fp, p), p);
  if (g.size() > 1) throw BadReduction("repeated root mod " + std::to_string(p));
  return fp;
}

std::uint64_t superelliptic_infinity(unsigned m, const upoly::Poly& fp, std::uint64_t p) {
  const std::size_t deg = fp.size() - 1;
  if (deg % m != 0) return 1;
  return exact::nth_root_count(fp.back(), m, p);
}

std::uint64_t count_hyper(const HyperellipticModel& h, const TowerSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  auto fp = reduce_squarefree(h.f, h.x, spec);
  auto chi = character_table(p);
  std::int64_t n = 0;
  for (std::uint64_t u = 0; u < p; ++u) n += 1 + chi[upoly::eval(fp, u, p)];
  const std::size_t deg = fp.size() - 1;
  n += deg % 2 == 1 ? 1 : 1 + chi[fp.back()];
  return static_cast<std::uint64_t>(n);
}

std::uint64_t count_super(const SuperellipticModel& s, const TowerSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  if (p == s.m) throw BadReduction("exponent equals the characteristic");
  auto fp = reduce_squarefree(s.f, s.u, spec);
  auto cnt = root_count_table(s.m, p);
  std::uint64_t n = 0;
  for (std::uint64_t u = 0; u < p; ++u) n += cnt[upoly::eval(fp, u, p)];
  return n + superelliptic_infinity(s.m, fp, p);
}

struct SquareFibre {
  VarId square;
  MPoly g;
};

std::vector<SquareFibre> square_fibres(const SpaceCurve& c) {
  std::vector<SquareFibre> out;
  std::set<VarId> used;
  for (const auto& rel : c.relations) {
    std::optional<VarId> s;
    for (VarId v : rel.variables())
      if (std::find(c.square_root_base.begin(), c.square_root_base.end(), v) == c.square_root_base.end()) {
        if (s) throw DomainError("fibration relation " + rel.to_string() + " has two fibre variables");
        s = v;
      }
    if (!s) throw DomainError("fibration relation " + rel.to_string() + " has no fibre variable");
    MPoly sq = MPoly::variable(rel.tower(), *s).pow(2);
    MPoly g = sq - rel;
    if (g.involves(*s)) throw DomainError("fibration relation " + rel.to_string() + " is not of the form s^2 - g");
    if (!used.insert(*s).second) throw DomainError("fibre variable repeated");
    out.push_back({*s, g});
  }
  if (used.size() + c.square_root_base.size() != c.coords.size())
    throw DomainError("fibration does not cover every coordinate");
  return out;
}

std::uint64_t count_space_square_fibration(const SpaceCurve& c, const TowerSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  auto fibres = square_fibres(c);
  std::vector<ModPoly> gs;
  for (const auto& f : fibres) gs.emplace_back(f.g, c.square_root_base, spec);
  auto chi = character_table(p);
  std::uint64_t n = 0;
  for_each_projective(c.square_root_base.size(), p, [&](const std::vector<std::uint64_t>& b) {
    std::uint64_t prod = 1;
    for (const auto& g : gs) {
      prod *= static_cast<std::uint64_t>(1 + chi[g.eval(b)]);
      if (prod == 0) break;
    }
    n += prod;
  });
  return n;
}

// Projects from (0:...:0:1) and counts roots in the last coordinate.
std::uint64_t count_space_projection(const SpaceCurve& c, const TowerSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  const std::size_t n = c.coords.size();
  std::vector<ModPoly> rels;
  for (const auto& r : c.relations) rels.emplace_back(r, c.coords, spec);
  std::uint64_t total = 0;
  std::vector<std::uint64_t> full(n, 0);
  for_each_projective(n - 1, p, [&](const std::vector<std::uint64_t>& base) {
    std::copy(base.begin(), base.end(), full.begin());
    upoly::Poly g;
    for (const auto& r : rels) {
      auto u = r.univariate(full, n - 1);
      if (u.empty()) continue;
      g = g.empty() ? u : upoly::gcd(g, u, p);
      if (g.size() == 1) return;
    }
    total += g.empty() ? p : upoly::count_distinct_roots(g, p);
  });
  std::fill(full.begin(), full.end(), 0);
  full[n - 1] = 1;
  bool vertex = std::all_of(rels.begin(), rels.end(), [&](const ModPoly& r) { return r.eval(full) == 0; });
  return total + (vertex ? 1 : 0);
}

std::uint64_t count_space(const SpaceCurve& c, const TowerSpecialization& spec) {
  if (!c.square_root_base.empty()) return count_space_square_fibration(c, spec);
  return count_space_projection(c, spec);
}

// ---- extension fields ----

ExtField::Elem ext_eval(const ModPoly& f, const ExtField& K, const std::vector<ExtField::Elem>& x) {
  ExtField::Elem acc = K.zero();
  for (const auto& [e, c] : f.terms()) {
    ExtField::Elem t = K.from_prime(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t = K.mul(t, K.pow(x[i], e[i]));
    acc = K.add(acc, t);
  }
  return acc;
}

std::uint64_t ext_count_univariate(const ModPoly& f, unsigned m, const upoly::Poly& fp, const ExtField& K) {
  std::uint64_t n = 0;
  std::vector<ExtField::Elem> x(1);
  for (std::uint64_t i = 0; i < K.order(); ++i) {
    x[0] = K.element(i);
    n += K.nth_root_count(ext_eval(f, K, x), m);
  }
  const std::size_t deg = fp.size() - 1;
  if (deg % m != 0) return n + 1;
  return n + K.nth_root_count(K.from_prime(fp.back()), m);
}

std::uint64_t ext_count_plane(const PlaneCurve& c, const TowerSpecialization& spec, const ExtField& K) {
  ModPoly F(c.F, {c.X, c.Y, c.Z}, spec);
  std::uint64_t n = 0;
  std::vector<ExtField::Elem> pt(3);
  const auto q = K.order();
  pt[2] = K.one();
  for (std::uint64_t i = 0; i < q; ++i) {
    pt[0] = K.element(i);
    for (std::uint64_t j = 0; j < q; ++j) {
      pt[1] = K.element(j);
      if (K.is_zero(ext_eval(F, K, pt))) ++n;
    }
  }
  pt[2] = K.zero();
  pt[1] = K.one();
  for (std::uint64_t i = 0; i < q; ++i) {
    pt[0] = K.element(i);
    if (K.is_zero(ext_eval(F, K, pt))) ++n;
  }
  pt = {K.one(), K.zero(), K.zero()};
  if (K.is_zero(ext_eval(F, K, pt))) ++n;
  return n;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TowerSpecialization resolve_or_skip(const sym::TowerPtr& tower, std::uint64_t p) {
  auto spec = TowerSpecialization::resolve(tower, p);
  if (!spec) throw UnresolvedConstants("constant symbols have no roots mod " + std::to_string(p));
  return *spec;
}

std::optional<MPoly> over_q(const MPoly& f) {
  MPoly out(sym::Tower::rational());
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_rational()) return std::nullopt;
    out += MPoly::monomial(sym::TowerElement(sym::Tower::rational(), c.rational()), m);
  }
  return out;
}

// The model rewritten over Q when its coefficients do not use the tower.
std::optional<CurveModel> over_rationals(const CurveModel& model) {
  if (model_tower(model)->symbols().empty()) return std::nullopt;
  return std::visit(
      [](const auto& m) -> std::optional<CurveModel> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PlaneCurve>) {
          auto F = over_q(m.F);
          if (!F) return std::nullopt;
          return PlaneCurve(*F, m.X, m.Y, m.Z);
        } else if constexpr (std::is_same_v<T, HyperellipticModel>) {
          auto f = over_q(m.f);
          if (!f) return std::nullopt;
          return HyperellipticModel(*f, m.x, m.y);
        } else if constexpr (std::is_same_v<T, SuperellipticModel>) {
          auto f = over_q(m.f);
          if (!f) return std::nullopt;
          return SuperellipticModel(m.m, *f, m.u, m.v);
        } else {
          std::vector<MPoly> rels;
          for (const auto& r : m.relations) {
            auto q = over_q(r);
            if (!q) return std::nullopt;
            rels.push_back(*q);
          }
          return SpaceCurve(m.coords, rels, m.declared_genus, m.square_root_base);
        }
      },
      model);
}

}  // namespace

PlaneCurve::PlaneCurve(MPoly F_, VarId X_, VarId Y_, VarId Z_) : F(std::move(F_)), X(X_), Y(Y_), Z(Z_), degree(0) {
  require_only(F, {X, Y, Z}, "plane curve");
  if (!F.is_homogeneous({X, Y, Z}, &degree) || F.is_zero()) throw DomainError("plane curve is not homogeneous");
  if (degree < 1) throw DomainError("plane curve has degree 0");
}

HyperellipticModel::HyperellipticModel(MPoly f_, VarId x_, VarId y_) : f(std::move(f_)), x(x_), y(y_) {
  require_only(f, {x}, "hyperelliptic polynomial");
  if (f.degree(x) < 1) throw DomainError("hyperelliptic polynomial is constant");
}

SuperellipticModel::SuperellipticModel(unsigned m_, MPoly f_, VarId u_, VarId v_) : m(m_), f(std::move(f_)), u(u_), v(v_) {
  if (m != 2 && m != 3) throw DomainError("superelliptic exponent must be 2 or 3");
  require_only(f, {u}, "superelliptic polynomial");
  if (f.degree(u) < 1) throw DomainError("superelliptic polynomial is constant");
}

SpaceCurve::SpaceCurve(std::vector<VarId> coords_, std::vector<MPoly> relations_, unsigned genus_,
                       std::vector<VarId> base)
    : coords(std::move(coords_)), relations(std::move(relations_)), declared_genus(genus_),
      square_root_base(std::move(base)) {
  if (relations.empty()) throw DomainError("space curve has no relations");
  if (coords.size() < 3) throw DomainError("space curve needs at least three coordinates");
  for (const auto& r : relations) {
    require_only(r, coords, "space curve relation");
    if (r.is_zero() || !r.is_homogeneous(coords)) throw DomainError("space curve relation is not homogeneous");
  }
  for (VarId b : square_root_base)
    if (std::find(coords.begin(), coords.end(), b) == coords.end()) throw DomainError("fibration base is not a coordinate");
}

unsigned genus(const CurveModel& model) {
  return std::visit(
      [](const auto& m) -> unsigned {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PlaneCurve>) {
          return (m.degree - 1) * (m.degree - 2) / 2;
        } else if constexpr (std::is_same_v<T, HyperellipticModel>) {
          return (m.f.degree(m.x) - 1) / 2;
        } else if constexpr (std::is_same_v<T, SuperellipticModel>) {
          const unsigned d = m.f.degree(m.u);
          const unsigned branch = d + (d % m.m == 0 ? 0 : 1);
          return (m.m - 1) * (branch - 2) / 2;
        } else {
          return m.declared_genus;
        }
      },
      model);
}

const sym::TowerPtr& model_tower(const CurveModel& model) {
  return std::visit(
      [](const auto& m) -> const sym::TowerPtr& {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PlaneCurve>) return m.F.tower();
        else if constexpr (std::is_same_v<T, SpaceCurve>) return m.relations.front().tower();
        else return m.f.tower();
      },
      model);
}

std::string describe(const CurveModel& model) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PlaneCurve>) {
          return m.F.to_string() + " = 0";
        } else if constexpr (std::is_same_v<T, HyperellipticModel>) {
          return sym::var_name(m.y) + "^2 = " + m.f.to_string();
        } else if constexpr (std::is_same_v<T, SuperellipticModel>) {
          return sym::var_name(m.v) + "^" + std::to_string(m.m) + " = " + m.f.to_string();
        } else {
          std::string s;
          for (const auto& r : m.relations) s += (s.empty() ? "" : ", ") + r.to_string() + " = 0";
          return s;
        }
      },
      model);
}

PlaneChartCount count_plane_charts(const PlaneCurve& c, const TowerSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  ModPoly F(c.F, {c.X, c.Y, c.Z}, spec);
  if (F.is_zero()) throw BadReduction("plane curve vanishes identically mod " + std::to_string(p));
  PlaneChartCount out{0, 0};
  std::vector<std::uint64_t> pt{0, 0, 1};
  for (std::uint64_t x = 0; x < p; ++x) {
    pt[0] = x;
    auto u = F.univariate(pt, 1);
    out.affine += u.empty() ? p : upoly::count_distinct_roots(u, p);
  }
  pt = {0, 1, 0};
  for (std::uint64_t x = 0; x < p; ++x) {
    pt[0] = x;
    if (F.eval(pt) == 0) ++out.infinity;
  }
  pt = {1, 0, 0};
  if (F.eval(pt) == 0) ++out.infinity;
  return out;
}

std::uint64_t count_space_brute(const SpaceCurve& c, const TowerSpecialization& spec) {
  const std::uint64_t p = spec.prime();
  std::vector<ModPoly> rels;
  for (const auto& r : c.relations) rels.emplace_back(r, c.coords, spec);
  std::uint64_t n = 0;
  for_each_projective(c.coords.size(), p, [&](const std::vector<std::uint64_t>& v) {
    for (const auto& r : rels)
      if (r.eval(v) != 0) return;
    ++n;
  });
  return n;
}

CountRecord count_points(const CurveModel& model, const TowerSpecialization& spec, const CountOptions& opt) {
  const std::uint64_t p = spec.prime();
  std::uint64_t n = std::visit(
      [&](const auto& m) -> std::uint64_t {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PlaneCurve>) {
          if (p > opt.plane_cap)
            throw WorkCapExceeded("plane enumeration capped at p <= " + std::to_string(opt.plane_cap));
          auto c = count_plane_charts(m, spec);
          return c.affine + c.infinity;
        } else if constexpr (std::is_same_v<T, HyperellipticModel>) {
          return count_hyper(m, spec);
        } else if constexpr (std::is_same_v<T, SuperellipticModel>) {
          return count_super(m, spec);
        } else {
          return count_space(m, spec);
        }
      },
      model);
  CountRecord rec{p, 1, n, 0};
  rec.a = frobenius_trace(rec);
  return rec;
}

CountRecord count_points(const CurveModel& model, std::uint64_t p, const CountOptions& opt) {
  exact::require_odd_prime(p);
  if (auto q = over_rationals(model)) return count_points(*q, p, opt);
  return count_points(model, resolve_or_skip(model_tower(model), p), opt);
}

CountRecord count_points_ext(const CurveModel& model, std::uint64_t p, unsigned k, const CountOptions& opt) {
  exact::require_odd_prime(p);
  if (k < 1 || k > 3) throw DomainError("extension degree must be 1, 2 or 3");
  if (genus(model) > 3) throw DomainError("extension counts are limited to genus <= 3");
  if (auto q = over_rationals(model)) return count_points_ext(*q, p, k, opt);
  const std::uint64_t q = ipow(p, k);
  const bool plane = std::holds_alternative<PlaneCurve>(model);
  const std::uint64_t work = plane ? q * q : q;
  if (work > opt.ext_work_cap)
    throw WorkCapExceeded("extension count needs about " + std::to_string(work) + " evaluations (cap " +
                          std::to_string(opt.ext_work_cap) + ")");
  auto spec = resolve_or_skip(model_tower(model), p);
  ExtField K = ExtField::standard(p, k);
  std::uint64_t n = std::visit(
      [&](const auto& m) -> std::uint64_t {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, PlaneCurve>) {
          return ext_count_plane(m, spec, K);
        } else if constexpr (std::is_same_v<T, HyperellipticModel>) {
          auto fp = reduce_squarefree(m.f, m.x, spec);
          return ext_count_univariate(ModPoly(m.f, {m.x}, spec), 2, fp, K);
        } else if constexpr (std::is_same_v<T, SuperellipticModel>) {
          if (p == m.m) throw BadReduction("exponent equals the characteristic");
          auto fp = reduce_squarefree(m.f, m.u, spec);
          return ext_count_univariate(ModPoly(m.f, {m.u}, spec), m.m, fp, K);
        } else {
          throw DomainError("extension counts are not available for space curves");
        }
      },
      model);
  CountRecord rec{p, k, n, 0};
  rec.a = frobenius_trace(rec);
  return rec;
}

std::int64_t frobenius_trace(const CountRecord& rec) {
  return static_cast<std::int64_t>(ipow(rec.p, rec.k) + 1) - static_cast<std::int64_t>(rec.N);
}

bool weil_bound_holds(const CountRecord& rec, unsigned g) {
  BigInt a = static_cast<long>(rec.a);
  BigInt q;
  mpz_ui_pow_ui(q.get_mpz_t(), rec.p, rec.k);
  BigInt bound = 4 * BigInt(g) * BigInt(g) * q;
  return a * a <= bound;
}

unsigned quadric_rank(const MPoly& q, const std::vector<VarId>& vars) {
  require_only(q, vars, "quadric");
  unsigned d = 0;
  if (q.is_zero()) return 0;
  if (!q.is_homogeneous(vars, &d) || d != 2) throw DomainError("quadric_rank needs a homogeneous quadratic form");
  const std::size_t n = vars.size();
  sym::RationalMatrix m(n, std::vector<BigRational>(n, 0));
  for (const auto& [mono, c] : q.terms()) {
    if (!c.is_rational()) throw DomainError("quadric_rank needs rational coefficients");
    std::vector<std::size_t> idx;
    for (const auto& [v, e] : mono.powers()) {
      auto i = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
      for (unsigned k = 0; k < e; ++k) idx.push_back(i);
    }
    if (idx[0] == idx[1]) {
      m[idx[0]][idx[0]] += c.rational();
    } else {
      BigRational h = c.rational() / 2;
      m[idx[0]][idx[1]] += h;
      m[idx[1]][idx[0]] += h;
    }
  }
  return static_cast<unsigned>(sym::rank_rational(m));
}

}  // namespace rhomax::curves
