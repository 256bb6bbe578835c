#include "rhomax/morphisms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rhomax::morph {

namespace {

std::string truncate(const std::string& s, std::size_t n = 400) {
  return s.size() <= n ? s : s.substr(0, n) + " ...";
}

// Coordinates of several polynomials on the union of their monomials.
std::vector<std::vector<TowerElement>> coordinates(const std::vector<MPoly>& polys) {
  std::set<sym::Monomial> monos;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) monos.insert(m);
  std::vector<std::vector<TowerElement>> out;
  for (const auto& p : polys) {
    std::vector<TowerElement> v;
    v.reserve(monos.size());
    for (const auto& m : monos) v.push_back(p.coefficient(m));
    out.push_back(std::move(v));
  }
  return out;
}

void require_defined(const sym::RelationSet& rels, const RationalFunction& r, const char* what) {
  if (rels.reduce(r.denominator()).is_zero())
    throw sym::DegenerateInput(std::string(what) + " has a denominator vanishing on the source curve");
}

}  // namespace

AffineCurve::AffineCurve(MPoly F, VarId x, VarId y)
    : F_(std::move(F)), x_(x), y_(y), rels_({sym::CurveRelation(F_, y)}),
      dydx_(sym::implicit_differential(rels_.relations().front(), x)), denominator_(F_.tower()) {}

AffineCurve AffineCurve::bare(const MPoly& F, VarId x, VarId y) { return AffineCurve(F, x, y); }

AffineCurve AffineCurve::plane(const MPoly& F, VarId x, VarId y) {
  AffineCurve c(F, x, y);
  unsigned d = 0;
  for (const auto& [m, k] : F.terms()) d = std::max(d, m.degree_in({x, y}));
  if (d < 3) throw DomainError("plane curve of degree < 3 has no holomorphic forms");
  c.denominator_ = F.derivative(y).scaled(BigRational(1, static_cast<long>(d)));
  const auto& t = F.tower();
  for (unsigned a = 0; a + 3 <= d; ++a)
    for (unsigned b = 0; a + b + 3 <= d; ++b) {
      c.numerators_.push_back(MPoly::variable(t, x).pow(a) * MPoly::variable(t, y).pow(b));
      c.labels_.push_back("X^" + std::to_string(a) + "*Y^" + std::to_string(b) + "*Z^" +
                          std::to_string(d - 3 - a - b));
    }
  return c;
}

AffineCurve AffineCurve::hyperelliptic(const MPoly& f, VarId x, VarId y) {
  const auto& t = f.tower();
  AffineCurve c(MPoly::variable(t, y).pow(2) - f, x, y);
  const unsigned g = (f.degree(x) - 1) / 2;
  c.denominator_ = MPoly::variable(t, y);
  for (unsigned k = 0; k < g; ++k) {
    c.numerators_.push_back(MPoly::variable(t, x).pow(k));
    c.labels_.push_back("x^" + std::to_string(k) + " dx/y");
  }
  return c;
}

RationalFunction AffineCurve::basis_form(std::size_t k) const { return {numerators_.at(k), denominator_}; }

RationalFunction AffineCurve::form_from_numerator(const MPoly& P) const {
  if (!has_basis()) throw DomainError("curve has no holomorphic basis attached");
  return {P, denominator_};
}

RationalFunction AffineCurve::normalize(const RationalFunction& r) const {
  MPoly den = rels_.reduce(r.denominator());
  if (den.is_zero()) throw sym::DegenerateInput("denominator vanishes on the curve");
  return {rels_.reduce(r.numerator()), den};
}

MPoly map_residual(const AffineCurve& source, const AffineCurve& target, const CurveMap& m) {
  require_defined(source.relations(), m.u, "first map component");
  require_defined(source.relations(), m.v, "second map component");
  auto composed = sym::compose(target.relation(), {{target.x(), m.u}, {target.y(), m.v}});
  return source.relations().reduce(composed.numerator());
}

CheckResult verify_map(const AffineCurve& source, const AffineCurve& target, const CurveMap& m) {
  MPoly r = map_residual(source, target, m);
  if (r.is_zero()) return make_check("map", true, "relation of the target pulls back to 0 on the source");
  return make_check("map", false, "nonzero residual " + truncate(r.to_string()));
}

RationalFunction pullback(const AffineCurve& source, const AffineCurve& target, const CurveMap& m,
                          const RationalFunction& eta) {
  MPoly r = map_residual(source, target, m);
  if (!r.is_zero()) throw DomainError("pullback through a map that is not well defined (residual " +
                                      truncate(r.to_string(), 120) + ")");
  RationalFunction at = eta.compose({{target.x(), m.u}, {target.y(), m.v}});
  RationalFunction du = m.u.derivative(source.x()) + m.u.derivative(source.y()) * source.dydx();
  return source.normalize(at * du);
}

CurveMap compose(const CurveMap& first, const AffineCurve& middle, const CurveMap& second) {
  std::map<VarId, RationalFunction> images{{middle.x(), first.u}, {middle.y(), first.v}};
  return {second.u.compose(images), second.v.compose(images)};
}

std::optional<std::vector<TowerElement>> try_classify(const AffineCurve& c, const RationalFunction& omega) {
  if (!c.has_basis()) throw DomainError("curve has no holomorphic basis attached");
  const auto& rels = c.relations();
  const MPoly& N = omega.numerator();
  const MPoly& D = omega.denominator();
  std::vector<MPoly> polys;
  for (const auto& P : c.basis_numerators()) polys.push_back(rels.reduce(D * P));
  polys.push_back(rels.reduce(N * c.basis_denominator()));
  auto coords = coordinates(polys);
  auto rhs = coords.back();
  coords.pop_back();
  return sym::solve_in_span(c.tower(), coords, rhs);
}

std::vector<TowerElement> classify(const AffineCurve& c, const RationalFunction& omega) {
  auto v = try_classify(c, omega);
  if (!v) {
    throw NotHolomorphic("form " + truncate(omega.to_string(), 160) + " is outside the holomorphic span (numerator degree " +
                         std::to_string(omega.numerator().total_degree()) + ", denominator degree " +
                         std::to_string(omega.denominator().total_degree()) + ")");
  }
  return *v;
}

sym::KMatrix action_matrix(const AffineCurve& c, const CurveMap& g) {
  const std::size_t n = c.dimension();
  sym::KMatrix m(c.tower(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    auto col = classify(c, pullback(c, c, g, c.basis_form(j)));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return m;
}

CheckResult verify_image_relations(const sym::RelationSet& source, const std::vector<VarId>& source_vars,
                                   const std::vector<MPoly>& components, const std::vector<VarId>& target_vars,
                                   const std::vector<MPoly>& relations) {
  if (components.size() != target_vars.size()) throw DomainError("component count differs from target dimension");
  unsigned common = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    unsigned d = 0;
    if (components[i].is_zero() || !components[i].is_homogeneous(source_vars, &d))
      throw DomainError("map component " + components[i].to_string() + " is not homogeneous");
    if (i == 0) common = d;
    if (d != common) throw DomainError("map components have different degrees");
  }
  std::map<VarId, MPoly> images;
  for (std::size_t i = 0; i < target_vars.size(); ++i) images.emplace(target_vars[i], components[i]);
  std::string evidence;
  bool ok = true;
  for (const auto& rel : relations) {
    MPoly r = source.reduce(rel.substitute(images));
    if (!r.is_zero()) {
      ok = false;
      evidence += (evidence.empty() ? "" : "; ") + rel.to_string() + " -> " + truncate(r.to_string());
    }
  }
  if (ok) evidence = std::to_string(relations.size()) + " relation(s) vanish on the image";
  return make_check("image_relations", ok, evidence);
}

CheckResult verify_shioda_trick(const sym::RelationSet& factors, const std::vector<VarId>& first_vars,
                                const std::vector<VarId>& second_vars, const std::vector<MPoly>& components,
                                const std::vector<VarId>& target_vars, const MPoly& G) {
  if (components.size() != target_vars.size()) throw DomainError("component count differs from target dimension");
  std::optional<unsigned> d1, d2;
  for (const auto& c : components) {
    for (const auto& [m, k] : c.terms()) {
      unsigned a = m.degree_in(first_vars), b = m.degree_in(second_vars);
      if (a + b != m.total_degree()) throw DomainError("component involves foreign variables");
      if (!d1) d1 = a, d2 = b;
      if (a != *d1 || b != *d2) throw DomainError("map components are not bihomogeneous of a common bidegree");
    }
  }
  std::map<VarId, MPoly> images;
  for (std::size_t i = 0; i < target_vars.size(); ++i) images.emplace(target_vars[i], components[i]);
  MPoly composed = G.substitute(images);
  MPoly r = factors.reduce(composed);
  if (r.is_zero())
    return make_check("shioda", true, "G(pi) = " + truncate(composed.to_string(), 200) + " vanishes modulo both factors");
  return make_check("shioda", false, "residual " + truncate(r.to_string()));
}

}  // namespace rhomax::morph
