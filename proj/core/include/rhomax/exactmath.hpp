#pragma once

// Exact integers/rationals and the small number-theoretic helpers every other
// module leans on. Integers are GMP-backed; prime moduli fit in 64 bits.

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rhomax {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Precondition violations on exact inputs (zero where nonzero is required,
/// composite where a prime is required, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rhomax

namespace rhomax::exact {

/// Builds a canonical rational from numerator/denominator.
BigRational make_rational(const BigInt& num, const BigInt& den = 1);
BigRational parse_rational(const std::string& text);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& n);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);
void require_odd_prime(std::uint64_t p);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Reduces a (possibly negative) big integer into [0, m).
std::uint64_t mod(const BigInt& a, std::uint64_t m);
/// Reduces a rational mod p; throws DomainError if p divides the denominator.
std::uint64_t mod(const BigRational& q, std::uint64_t p);

/// Kronecker symbol (D/p) for an odd prime p.
int kronecker_symbol(const BigInt& d, std::uint64_t p);

/// Squarefree s with n = s*m^2 and sign(s) = sign(n).
BigInt squarefree_part(const BigInt& n);

bool is_perfect_square(const BigInt& n);

/// #{x in F_p : x^n = a}.
std::uint64_t nth_root_count(std::uint64_t a, std::uint64_t n, std::uint64_t p);

/// Least m >= 1 with m*v integral, i.e. the order of v in (Q/Z)^k.
BigInt torsion_order(std::span<const BigRational> v);

/// Ascending primes p <= pmax with (p mod modulus) in residues.
std::vector<std::uint64_t> primes_in_class(std::uint64_t pmax, std::uint64_t modulus,
                                           const std::set<std::uint64_t>& residues);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// Prime divisors of |n| (n != 0), ascending. Trial division; inputs are small.
std::vector<BigInt> prime_divisors(const BigInt& n);

}  // namespace rhomax::exact
