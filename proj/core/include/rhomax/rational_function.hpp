#pragma once

#include <map>
#include <string>

#include "rhomax/mpoly.hpp"

namespace rhomax::sym {

/// numerator/denominator with the denominator nonzero. Normal form: common
/// monomial content cancelled, constant denominators folded into the
/// numerator, otherwise the denominator's leading coefficient is 1. No
/// polynomial gcd is taken, so equality is decided by cross-multiplication.
class RationalFunction {
 public:
  explicit RationalFunction(TowerPtr tower);
  RationalFunction(MPoly numerator);  // NOLINT(google-explicit-constructor)
  RationalFunction(MPoly numerator, MPoly denominator);

  const MPoly& numerator() const { return num_; }
  const MPoly& denominator() const { return den_; }
  const TowerPtr& tower() const { return num_.tower(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Numerator when the denominator is constant; throws otherwise.
  MPoly as_polynomial() const;

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  /// Integer power; negative exponents invert.
  RationalFunction pow(int e) const;
  RationalFunction inverse() const;

  RationalFunction derivative(VarId v) const;
  /// Substitutes rational functions for the mapped variables.
  RationalFunction compose(const std::map<VarId, RationalFunction>& images) const;

  /// Identical as elements of K(vars): num*o.den == o.num*den.
  bool equals(const RationalFunction& o) const;

  std::string to_string() const;

 private:
  void normalize();
  MPoly num_;
  MPoly den_;
};

/// P(images) for a polynomial P, computed with a single common denominator.
RationalFunction compose(const MPoly& p, const std::map<VarId, RationalFunction>& images);

}  // namespace rhomax::sym
