#pragma once

// Sparse multivariate polynomials over a tower field K. Curve variables and
// free parameters are both polynomial variables; constant symbols live in
// the coefficients, so every stored polynomial is already tower-reduced.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rhomax/tower.hpp"

namespace rhomax::sym {

using VarId = std::uint32_t;

/// Process-wide interned variable id for `name` (thread-safe).
VarId var_id(const std::string& name);
const std::string& var_name(VarId id);

class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, unsigned e = 1);

  unsigned degree(VarId v) const;
  unsigned total_degree() const;
  /// Total degree restricted to the given variables.
  unsigned degree_in(const std::vector<VarId>& vars) const;
  bool is_one() const { return powers_.empty(); }
  const std::vector<std::pair<VarId, unsigned>>& powers() const { return powers_; }

  Monomial operator*(const Monomial& o) const;
  Monomial without(VarId v) const;
  /// gcd (componentwise min).
  Monomial gcd(const Monomial& o) const;
  /// this / o, requires divisibility.
  Monomial divided(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<VarId, unsigned>> powers_;  // sorted by VarId, exponents > 0
};

class MPoly {
 public:
  using Terms = std::map<Monomial, TowerElement>;

  explicit MPoly(TowerPtr tower);
  MPoly(TowerPtr tower, const BigRational& c);
  MPoly(const TowerElement& c);
  static MPoly variable(TowerPtr tower, const std::string& name);
  static MPoly variable(TowerPtr tower, VarId v);
  static MPoly monomial(const TowerElement& c, const Monomial& m);

  const TowerPtr& tower() const { return tower_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value; throws unless is_constant().
  TowerElement constant_value() const;
  TowerElement coefficient(const Monomial& m) const;

  unsigned degree(VarId v) const;
  unsigned total_degree() const;
  std::vector<VarId> variables() const;
  bool involves(VarId v) const;
  /// True when every term has the same total degree in `vars` (other
  /// variables ignored); `degree_out` receives it.
  bool is_homogeneous(const std::vector<VarId>& vars, unsigned* degree_out = nullptr) const;

  /// coefficients_in(v)[k] is the coefficient of v^k (free of v).
  std::vector<MPoly> coefficients_in(VarId v) const;
  static MPoly from_coefficients(const std::vector<MPoly>& coeffs, VarId v, TowerPtr tower);

  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly scaled(const TowerElement& c) const;
  MPoly scaled(const BigRational& c) const;
  MPoly times_monomial(const Monomial& m) const;
  MPoly pow(unsigned e) const;
  bool operator==(const MPoly& o) const;

  MPoly derivative(VarId v) const;
  /// Polynomial substitution v -> image for the mapped variables.
  MPoly substitute(const std::map<VarId, MPoly>& images) const;
  MPoly substitute(VarId v, const MPoly& image) const;
  /// Applies f to every coefficient.
  MPoly map_coefficients(const std::function<TowerElement(const TowerElement&)>& f) const;

  /// gcd of all monomials (largest monomial dividing every term).
  Monomial monomial_content() const;
  /// Exact division by a monomial that divides every term.
  MPoly divided_by(const Monomial& m) const;
  /// Leading term under the stored (lexicographic on interned ids) order.
  std::pair<Monomial, TowerElement> leading_term() const;

  /// Deterministic rendering; terms ordered by descending degree then by
  /// variable names.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const TowerElement& c);
  TowerPtr tower_;
  Terms terms_;
};

}  // namespace rhomax::sym
