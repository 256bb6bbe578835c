#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rhomax/check.hpp"
#include "rhomax/linalg.hpp"
#include "rhomax/relation.hpp"

namespace rhomax::morph {

using sym::MPoly;
using sym::RationalFunction;
using sym::TowerElement;
using sym::TowerPtr;
using sym::VarId;

/// An affine curve F(x, y) = 0 (plus optional extra relations), with
/// differentials written R(x, y) dx. When a holomorphic basis is attached it
/// reads { P_k / Q dx }.
class AffineCurve {
 public:
  /// Plane curve of degree d in the chart z = 1; basis x^a y^b Omega with
  /// a + b <= d - 3 and Omega = d dx / F_y.
  static AffineCurve plane(const MPoly& F, VarId x, VarId y);
  /// y^2 = f(x); basis x^k dx / y for k < genus.
  static AffineCurve hyperelliptic(const MPoly& f, VarId x, VarId y);
  /// Relation only (targets of maps), F monic in y after unit scaling.
  static AffineCurve bare(const MPoly& F, VarId x, VarId y);

  const TowerPtr& tower() const { return F_.tower(); }
  const MPoly& relation() const { return F_; }
  const sym::RelationSet& relations() const { return rels_; }
  VarId x() const { return x_; }
  VarId y() const { return y_; }
  RationalFunction dydx() const { return dydx_; }

  bool has_basis() const { return !numerators_.empty(); }
  std::size_t dimension() const { return numerators_.size(); }
  const std::vector<MPoly>& basis_numerators() const { return numerators_; }
  const MPoly& basis_denominator() const { return denominator_; }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  /// k-th basis form as a coefficient of dx.
  RationalFunction basis_form(std::size_t k) const;
  /// Form P * Omega for a basis-numerator combination P.
  RationalFunction form_from_numerator(const MPoly& P) const;

  /// Numerator and denominator reduced modulo the relations.
  RationalFunction normalize(const RationalFunction& r) const;

 private:
  AffineCurve(MPoly F, VarId x, VarId y);
  MPoly F_;
  VarId x_, y_;
  sym::RelationSet rels_;
  RationalFunction dydx_;
  std::vector<MPoly> numerators_;
  MPoly denominator_;
  std::vector<std::string> labels_;
};

/// Map source -> target given by target coordinates (u, v) as functions of
/// the source coordinates (x, y).
struct CurveMap {
  RationalFunction u;
  RationalFunction v;
};

/// Raised for a form outside the holomorphic span.
class NotHolomorphic : public DomainError {
 public:
  using DomainError::DomainError;
};

/// PASS iff target.relation(u, v) vanishes on the source; evidence is the
/// reduced residual. DegenerateInput if a component's denominator vanishes
/// on the source.
CheckResult verify_map(const AffineCurve& source, const AffineCurve& target, const CurveMap& m);
/// Reduced residual of target.relation(u, v) (zero iff the map is well defined).
MPoly map_residual(const AffineCurve& source, const AffineCurve& target, const CurveMap& m);

/// m^*(eta du), as a coefficient of dx on the source. Throws DomainError if
/// verify_map fails.
RationalFunction pullback(const AffineCurve& source, const AffineCurve& target, const CurveMap& m,
                          const RationalFunction& eta);

/// Composite source -> middle -> target.
CurveMap compose(const CurveMap& first, const AffineCurve& middle, const CurveMap& second);

/// Coordinates of the form `omega dx` in the holomorphic basis.
std::vector<TowerElement> classify(const AffineCurve& c, const RationalFunction& omega);
/// nullopt instead of NotHolomorphic.
std::optional<std::vector<TowerElement>> try_classify(const AffineCurve& c, const RationalFunction& omega);

/// Matrix (columns = images of basis forms) of g^* for an automorphism g.
sym::KMatrix action_matrix(const AffineCurve& c, const CurveMap& g);

/// PASS iff each relation composed with the homogeneous components reduces
/// to 0 modulo `source`.
CheckResult verify_image_relations(const sym::RelationSet& source, const std::vector<VarId>& source_vars,
                                   const std::vector<MPoly>& components, const std::vector<VarId>& target_vars,
                                   const std::vector<MPoly>& relations);

/// Shioda-type map C x C' -> P^3: PASS iff G(components) reduces to 0 modulo
/// both factor relations. Components must be bihomogeneous.
CheckResult verify_shioda_trick(const sym::RelationSet& factors, const std::vector<VarId>& first_vars,
                                const std::vector<VarId>& second_vars, const std::vector<MPoly>& components,
                                const std::vector<VarId>& target_vars, const MPoly& G);

}  // namespace rhomax::morph
