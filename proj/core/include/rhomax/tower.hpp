#pragma once

// The exact coefficient field K = Q(c_1, ..., c_m) built as a triangular tower
// of simple algebraic extensions. Each c_k has a monic defining polynomial
// whose lower coefficients lie in Q(c_1, ..., c_{k-1}).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rhomax/exactmath.hpp"

namespace rhomax::sym {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Raised when a tower operation exposes a zero divisor, i.e. some declared
/// relation is reducible over the field below it.
class ReducibleTower : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Element of K stored on the power basis c_1^{e_1}...c_m^{e_m}, e_k < deg_k,
/// with e_1 varying fastest.
class TowerElement {
 public:
  explicit TowerElement(TowerPtr tower);
  TowerElement(TowerPtr tower, const BigRational& q);
  TowerElement(TowerPtr tower, std::vector<BigRational> coeffs);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value when is_rational(); throws otherwise.
  BigRational rational() const;

  TowerElement operator+(const TowerElement& o) const;
  TowerElement operator-(const TowerElement& o) const;
  TowerElement operator*(const TowerElement& o) const;
  TowerElement operator-() const;
  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(const TowerElement& o);
  TowerElement scaled(const BigRational& q) const;
  TowerElement pow(unsigned e) const;
  /// Multiplicative inverse; DivisionByZero for 0, ReducibleTower for a
  /// nonzero non-unit.
  TowerElement inverse() const;
  /// Image under the tower involution that sends every symbol to its declared
  /// conjugate.
  TowerElement conjugate() const;

  bool operator==(const TowerElement& o) const;
  bool operator<(const TowerElement& o) const;

  std::string to_string() const;

 private:
  TowerPtr tower_;
  std::vector<BigRational> coeffs_;
};

struct ConstantSymbol {
  std::string name;
  unsigned degree = 1;
  /// Lower coefficients a_0..a_{deg-1} of the monic relation
  /// c^deg + sum a_j c^j, each an element of the level below (flat, dim of that level).
  std::vector<std::vector<BigRational>> relation;
  std::string relation_text;
  /// Image of the symbol under complex conjugation, flat over levels <= own.
  std::optional<std::vector<BigRational>> conjugate;
};

class Tower : public std::enable_shared_from_this<Tower> {
 public:
  /// Q itself.
  static TowerPtr rational();

  /// Returns this tower extended by `name` with the given defining relation
  /// (a polynomial in `name` over this tower, monic after unit scaling) and
  /// optional conjugate expression over the extended tower.
  TowerPtr extended(const std::string& name, const std::string& relation,
                    const std::optional<std::string>& conjugate = std::nullopt) const;

  const std::vector<ConstantSymbol>& symbols() const { return symbols_; }
  std::size_t dimension() const { return dims_.back(); }
  /// dim of Q(c_1..c_level); level 0 is Q.
  std::size_t dimension_at(std::size_t level) const { return dims_[level]; }
  std::optional<std::size_t> symbol_index(const std::string& name) const;
  bool has_symbol(const std::string& name) const { return symbol_index(name).has_value(); }

  TowerElement zero() const;
  TowerElement one() const;
  TowerElement from_rational(const BigRational& q) const;
  TowerElement symbol(const std::string& name) const;

  /// Structural equality (same symbols, same relations).
  bool same_as(const Tower& o) const;

  // Flat-vector kernels used by TowerElement.
  std::vector<BigRational> multiply(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                    std::size_t level) const;
  std::vector<BigRational> apply_conjugation(const std::vector<BigRational>& a) const;

  /// Exponent vector (one entry per symbol) of the basis element with flat index i.
  std::vector<unsigned> exponents_of(std::size_t index) const;

 private:
  Tower();
  std::vector<ConstantSymbol> symbols_;
  std::vector<std::size_t> dims_;
};

/// Throws unless both elements live in structurally identical towers.
void require_same_tower(const TowerPtr& a, const TowerPtr& b);

}  // namespace rhomax::sym
