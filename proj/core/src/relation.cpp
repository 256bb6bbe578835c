#include "rhomax/relation.hpp"

namespace rhomax::sym {

CurveRelation::CurveRelation(MPoly polynomial, VarId distinguished)
    : poly_(std::move(polynomial)), var_(distinguished), degree_(poly_.degree(distinguished)) {
  if (degree_ == 0) throw DomainError("relation does not involve its distinguished variable " + var_name(var_));
  auto coeffs = poly_.coefficients_in(var_);
  if (!coeffs[degree_].is_constant())
    throw DomainError("relation " + poly_.to_string() + " is not monic in " + var_name(var_));
  TowerElement inv = coeffs[degree_].constant_value().inverse();
  for (unsigned j = 0; j < degree_; ++j) tail_.push_back(coeffs[j].scaled(inv));
}

CurveRelation::CurveRelation(MPoly polynomial, const std::string& distinguished)
    : CurveRelation(std::move(polynomial), var_id(distinguished)) {}

MPoly CurveRelation::reduce(const MPoly& f) const {
  require_same_tower(f.tower(), poly_.tower());
  if (f.degree(var_) < degree_) return f;
  auto c = f.coefficients_in(var_);
  for (std::size_t k = c.size() - 1; k >= degree_; --k) {
    if (c[k].is_zero()) continue;
    MPoly top = c[k];
    c[k] = MPoly(f.tower());
    for (unsigned j = 0; j < degree_; ++j) {
      if (tail_[j].is_zero()) continue;
      c[k - degree_ + j] -= top * tail_[j];
    }
  }
  c.erase(c.begin() + degree_, c.end());
  return MPoly::from_coefficients(c, var_, f.tower());
}

RelationSet::RelationSet(std::vector<CurveRelation> relations) : rels_(std::move(relations)) {
  for (std::size_t i = 0; i < rels_.size(); ++i)
    for (std::size_t j = i + 1; j < rels_.size(); ++j)
      if (rels_[i].distinguished() == rels_[j].distinguished())
        throw DomainError("two relations share the distinguished variable " + var_name(rels_[i].distinguished()));
}

MPoly RelationSet::reduce(const MPoly& f) const {
  MPoly cur = f;
  // Tails may reintroduce other distinguished variables; iterate to a fixed point.
  for (int round = 0; round < 64; ++round) {
    bool changed = false;
    for (const auto& r : rels_) {
      if (cur.degree(r.distinguished()) >= r.degree()) {
        cur = r.reduce(cur);
        changed = true;
      }
    }
    if (!changed) return cur;
  }
  throw DomainError("relation set reduction did not terminate");
}

MPoly reduce_mod_relation(const MPoly& f, const CurveRelation& r) { return r.reduce(f); }

bool is_zero_on_curve(const RationalFunction& f, const RelationSet& rels) {
  if (rels.reduce(f.denominator()).is_zero())
    throw DegenerateInput("denominator " + f.denominator().to_string() + " vanishes on the curve");
  return rels.reduce(f.numerator()).is_zero();
}

bool is_zero_on_curve(const RationalFunction& f, const CurveRelation& r) {
  return is_zero_on_curve(f, RelationSet({r}));
}

RationalFunction implicit_differential(const CurveRelation& r, VarId wrt) {
  VarId y = r.distinguished();
  MPoly fy = r.polynomial().derivative(y);
  if (r.reduce(fy).is_zero())
    throw DegenerateInput("partial derivative in " + var_name(y) + " vanishes on the whole curve");
  return {-r.polynomial().derivative(wrt), fy};
}

MPoly residual(const RationalFunction& a, const RationalFunction& b, const RelationSet& rels) {
  return rels.reduce(a.numerator() * b.denominator() - b.numerator() * a.denominator());
}

}  // namespace rhomax::sym
