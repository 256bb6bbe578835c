#include "rhomax/prime_field.hpp"

#include <numeric>

namespace rhomax::exact {

PrimeFieldElement::PrimeFieldElement(std::uint64_t residue, std::uint64_t p) : residue_(residue % p), p_(p) {
  require_odd_prime(p);
}

PrimeFieldElement PrimeFieldElement::from_integer(const BigInt& n, std::uint64_t p) {
  return PrimeFieldElement(mod(n, p), p);
}

void PrimeFieldElement::same_field(const PrimeFieldElement& o) const {
  if (o.p_ != p_) throw DomainError("mixing residues of different primes");
}

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  same_field(o);
  std::uint64_t r = residue_ + o.residue_;
  return {r >= p_ ? r - p_ : r, p_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  same_field(o);
  return {residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + p_ - o.residue_, p_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  same_field(o);
  return {mul_mod(residue_, o.residue_, p_), p_};
}

PrimeFieldElement PrimeFieldElement::operator-() const { return {residue_ == 0 ? 0 : p_ - residue_, p_}; }

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t e) const { return {pow_mod(residue_, e, p_), p_}; }

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (residue_ == 0) throw DomainError("inverse of zero in F_p");
  return pow(p_ - 2);
}

namespace {

bool has_root(std::uint64_t p, const std::vector<std::uint64_t>& m) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) v = (mul_mod(v, x, p) + *it) % p;
    if (v == 0) return true;
  }
  return false;
}

}  // namespace

ExtField::ExtField(std::uint64_t p, std::vector<std::uint64_t> modulus) : p_(p), modulus_(std::move(modulus)) {
  require_odd_prime(p);
  if (modulus_.size() < 2 || modulus_.size() > 4) throw DomainError("extension degree must be 1..3");
  k_ = static_cast<unsigned>(modulus_.size() - 1);
  for (auto& c : modulus_) c %= p;
  if (modulus_.back() != 1) throw DomainError("extension modulus must be monic");
  // degree <= 3: irreducible iff no root in F_p
  if (k_ > 1 && has_root(p, modulus_)) throw DomainError("extension modulus is reducible");
  q_ = 1;
  for (unsigned i = 0; i < k_; ++i) q_ *= p;
}

ExtField ExtField::standard(std::uint64_t p, unsigned k) {
  require_odd_prime(p);
  if (k == 1) return ExtField(p, {0, 1});
  if (k == 0 || k > 3) throw DomainError("extension degree must be 1..3");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint64_t> m(k + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < k; ++i) {
      m[i] = rest % p;
      rest /= p;
    }
    m[k] = 1;
    if (!has_root(p, m)) return ExtField(p, m);
  }
  throw DomainError("no irreducible polynomial found");
}

ExtField::Elem ExtField::element(std::uint64_t index) const {
  Elem e{0, 0, 0};
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = index % p_;
    index /= p_;
  }
  return e;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r{};
  for (unsigned i = 0; i < k_; ++i) {
    r[i] = a[i] + b[i];
    if (r[i] >= p_) r[i] -= p_;
  }
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r{};
  for (unsigned i = 0; i < k_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  if (k_ == 1) return {mul_mod(a[0], b[0], p_), 0, 0};
  std::array<std::uint64_t, 5> prod{};
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p_)) % p_;
  }
  for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      std::uint64_t sub = mul_mod(c, modulus_[j], p_);
      prod[d - k_ + j] = (prod[d - k_ + j] + p_ - sub) % p_;
    }
  }
  return {prod[0], prod[1], prod[2]};
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  Elem r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

ExtField::Elem ExtField::inverse(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in F_q");
  return pow(a, q_ - 2);
}

int ExtField::quadratic_character(const Elem& a) const {
  if (is_zero(a)) return 0;
  return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

std::uint64_t ExtField::nth_root_count(const Elem& a, std::uint64_t n) const {
  if (n == 0) throw DomainError("nth_root_count with n = 0");
  if (is_zero(a)) return 1;
  std::uint64_t g = std::gcd(n, q_ - 1);
  return pow(a, (q_ - 1) / g) == one() ? g : 0;
}

}  // namespace rhomax::exact
