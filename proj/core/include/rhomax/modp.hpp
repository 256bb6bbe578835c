#pragma once

// Reduction of exact objects modulo a prime: tower symbols are sent to roots
// of their relations in F_p (when they exist) and polynomials are compiled to
// a dense form for fast repeated evaluation.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rhomax/mpoly.hpp"
#include "rhomax/prime_field.hpp"

namespace rhomax::sym {

class TowerSpecialization {
 public:
  /// Smallest root of each relation in turn; nullopt when some relation has
  /// no root mod p. Throws DomainError if p divides a relation denominator.
  static std::optional<TowerSpecialization> resolve(const TowerPtr& tower, std::uint64_t p);
  /// Explicit root choice (validated).
  static TowerSpecialization with_roots(const TowerPtr& tower, std::uint64_t p, std::vector<std::uint64_t> roots);
  /// All admissible root assignments.
  static std::vector<TowerSpecialization> all(const TowerPtr& tower, std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  const std::vector<std::uint64_t>& roots() const { return roots_; }
  std::uint64_t eval(const TowerElement& a) const;

 private:
  TowerSpecialization(TowerPtr tower, std::uint64_t p, std::vector<std::uint64_t> roots)
      : tower_(std::move(tower)), p_(p), roots_(std::move(roots)) {}
  TowerPtr tower_;
  std::uint64_t p_;
  std::vector<std::uint64_t> roots_;
};

/// Dense polynomial over F_p in a fixed variable order.
class ModPoly {
 public:
  ModPoly(const MPoly& f, const std::vector<VarId>& vars, const TowerSpecialization& spec);

  std::uint64_t prime() const { return p_; }
  std::size_t arity() const { return nvars_; }
  unsigned degree(std::size_t var_index) const { return max_deg_[var_index]; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>& terms() const { return terms_; }
  std::uint64_t eval(std::span<const std::uint64_t> values) const;
  /// Coefficients (low to high) of the univariate polynomial obtained by
  /// fixing every variable except `free_index`.
  std::vector<std::uint64_t> univariate(std::span<const std::uint64_t> values, std::size_t free_index) const;

 private:
  std::uint64_t p_;
  std::size_t nvars_;
  std::vector<unsigned> max_deg_;
  std::vector<std::pair<std::vector<unsigned>, std::uint64_t>> terms_;
};

/// Univariate coefficient vector of f in `var` (f must involve only `var`).
std::vector<std::uint64_t> univariate_mod_p(const MPoly& f, VarId var, const TowerSpecialization& spec);

/// Evaluates f at the given variable values (every variable of f assigned).
std::uint64_t eval_mod_p(const MPoly& f, const std::map<VarId, std::uint64_t>& values,
                         const TowerSpecialization& spec);

// Univariate helpers over F_p, coefficients low to high.
namespace upoly {
using Poly = std::vector<std::uint64_t>;
void trim(Poly& a);
std::uint64_t eval(const Poly& a, std::uint64_t x, std::uint64_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p);
Poly rem(Poly a, const Poly& m, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// Number of distinct roots in F_p (a nonzero).
std::uint64_t count_distinct_roots(const Poly& a, std::uint64_t p);
}  // namespace upoly

}  // namespace rhomax::sym
