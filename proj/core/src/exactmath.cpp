#include "rhomax/exactmath.hpp"

#include <numeric>

namespace rhomax::exact {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

BigRational parse_rational(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw DomainError("not a rational literal: " + text);
  if (q.get_den() == 0) throw DomainError("rational with zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }
std::string to_string(const BigInt& n) { return n.get_str(); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1U;
  }
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) throw DomainError("expected an odd prime, got " + std::to_string(p));
}

std::uint64_t mod(const BigInt& a, std::uint64_t m) {
  BigInt r = a % BigInt(static_cast<unsigned long>(m));
  if (r < 0) r += static_cast<unsigned long>(m);
  return r.get_ui();
}

std::uint64_t mod(const BigRational& q, std::uint64_t p) {
  std::uint64_t den = mod(q.get_den(), p);
  if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p));
  return mul_mod(mod(q.get_num(), p), pow_mod(den, p - 2, p), p);
}

int kronecker_symbol(const BigInt& d, std::uint64_t p) {
  require_odd_prime(p);
  std::uint64_t r = mod(d, p);
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

BigInt squarefree_part(const BigInt& n) {
  if (n == 0) throw DomainError("squarefree_part of 0");
  BigInt rest = abs(n);
  BigInt s = 1;
  for (BigInt q = 2; q * q <= rest; ++q) {
    int e = 0;
    while (rest % q == 0) {
      rest /= q;
      ++e;
    }
    if (e % 2 == 1) s *= q;
  }
  s *= rest;
  return n < 0 ? BigInt(-s) : s;
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::uint64_t nth_root_count(std::uint64_t a, std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("nth_root_count with n = 0");
  a %= p;
  if (a == 0) return 1;
  std::uint64_t g = std::gcd(n, p - 1);
  return pow_mod(a, (p - 1) / g, p) == 1 ? g : 0;
}

BigInt torsion_order(std::span<const BigRational> v) {
  BigInt m = 1;
  for (const auto& q : v) {
    BigInt den = q.get_den();
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
  }
  return m;
}

std::vector<std::uint64_t> primes_in_class(std::uint64_t pmax, std::uint64_t modulus,
                                           const std::set<std::uint64_t>& residues) {
  if (residues.empty()) throw DomainError("primes_in_class: empty residue set");
  if (modulus == 0) throw DomainError("primes_in_class: modulus 0");
  std::vector<std::uint64_t> out;
  if (pmax < 2) return out;
  std::vector<bool> composite(pmax + 1, false);
  for (std::uint64_t i = 2; i <= pmax; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= pmax; j += i) composite[j] = true;
    if (residues.contains(i % modulus)) out.push_back(i);
  }
  return out;
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<BigInt> prime_divisors(const BigInt& n) {
  if (n == 0) throw DomainError("prime_divisors of 0");
  BigInt rest = abs(n);
  std::vector<BigInt> out;
  for (BigInt q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      out.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

}  // namespace rhomax::exact
