#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rhomax/exactmath.hpp"

namespace rhomax::exact {

/// Residue modulo an odd prime. Arithmetic between elements of different
/// moduli is a DomainError.
class PrimeFieldElement {
 public:
  PrimeFieldElement(std::uint64_t residue, std::uint64_t p);
  static PrimeFieldElement from_integer(const BigInt& n, std::uint64_t p);

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return residue_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const;
  PrimeFieldElement pow(std::uint64_t e) const;
  PrimeFieldElement inverse() const;
  bool operator==(const PrimeFieldElement&) const = default;

 private:
  void same_field(const PrimeFieldElement& o) const;
  std::uint64_t residue_;
  std::uint64_t p_;
};

/// F_{p^k} = F_p[z]/(m(z)) for k <= 3. Elements are coefficient arrays
/// (constant term first); entries past k are always zero.
class ExtField {
 public:
  using Elem = std::array<std::uint64_t, 3>;

  /// `modulus` is monic of degree k, given low-to-high with k+1 entries.
  ExtField(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// Picks the lexicographically first monic irreducible of degree k.
  static ExtField standard(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem zero() const { return {0, 0, 0}; }
  Elem one() const { return {1, 0, 0}; }
  Elem from_prime(std::uint64_t a) const { return {a % p_, 0, 0}; }
  /// Bijection [0, q) -> F_q via base-p digits.
  Elem element(std::uint64_t index) const;

  bool is_zero(const Elem& a) const { return a[0] == 0 && a[1] == 0 && a[2] == 0; }
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inverse(const Elem& a) const;

  /// Quadratic character: 0, +1 or -1.
  int quadratic_character(const Elem& a) const;
  /// #{x in F_q : x^n = a}.
  std::uint64_t nth_root_count(const Elem& a, std::uint64_t n) const;

 private:
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
};

}  // namespace rhomax::exact
