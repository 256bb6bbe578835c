#pragma once

#include <string>
#include <vector>

#include "rhomax/rational_function.hpp"

namespace rhomax::sym {

/// Raised when an input is degenerate on the curve (a denominator that
/// vanishes identically, a singular model, ...).
class DegenerateInput : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A hypersurface relation F = 0 that is monic (after scaling by a unit of K)
/// in its distinguished variable.
class CurveRelation {
 public:
  CurveRelation(MPoly polynomial, VarId distinguished);
  CurveRelation(MPoly polynomial, const std::string& distinguished);

  const MPoly& polynomial() const { return poly_; }
  VarId distinguished() const { return var_; }
  unsigned degree() const { return degree_; }
  const TowerPtr& tower() const { return poly_.tower(); }

  /// Remainder of f under division by the relation in the distinguished
  /// variable; degree in it ends below degree().
  MPoly reduce(const MPoly& f) const;

 private:
  MPoly poly_;
  VarId var_;
  unsigned degree_;
  std::vector<MPoly> tail_;  // monic relation: var^d = -(sum tail_[j] var^j)
};

/// Several relations with pairwise distinct distinguished variables, none of
/// which appears in another relation's leading data; reduced jointly.
class RelationSet {
 public:
  RelationSet() = default;
  explicit RelationSet(std::vector<CurveRelation> relations);

  const std::vector<CurveRelation>& relations() const { return rels_; }
  bool empty() const { return rels_.empty(); }
  MPoly reduce(const MPoly& f) const;

 private:
  std::vector<CurveRelation> rels_;
};

MPoly reduce_mod_relation(const MPoly& f, const CurveRelation& r);

/// True iff the numerator reduces to zero; DegenerateInput when the
/// denominator does.
bool is_zero_on_curve(const RationalFunction& f, const RelationSet& rels);
bool is_zero_on_curve(const RationalFunction& f, const CurveRelation& r);

/// dy/dx = -F_x/F_y on F = 0, y the distinguished variable.
RationalFunction implicit_differential(const CurveRelation& r, VarId wrt);

/// Reduced numerator of a - b (zero iff a = b on the curve).
MPoly residual(const RationalFunction& a, const RationalFunction& b, const RelationSet& rels);

}  // namespace rhomax::sym
