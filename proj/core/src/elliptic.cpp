#include "rhomax/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rhomax/relation.hpp"

namespace rhomax::elliptic {

using sym::MPoly;

namespace {

RationalFunction k(const sym::TowerPtr& t, long n) { return RationalFunction(MPoly(t, BigRational(n))); }

bool vanishes(const RationalFunction& r) { return r.is_zero(); }

}  // namespace

WeierstrassCurve WeierstrassCurve::short_form(const RationalFunction& a2, const RationalFunction& a4,
                                              const RationalFunction& a6) {
  const auto& t = a2.tower();
  return {k(t, 0), a2, k(t, 0), a4, a6};
}

RationalFunction WeierstrassCurve::c4() const {
  const auto& t = a1.tower();
  auto b2 = a1 * a1 + k(t, 4) * a2;
  auto b4 = k(t, 2) * a4 + a1 * a3;
  return b2 * b2 - k(t, 24) * b4;
}

RationalFunction WeierstrassCurve::discriminant() const {
  const auto& t = a1.tower();
  auto b2 = a1 * a1 + k(t, 4) * a2;
  auto b4 = k(t, 2) * a4 + a1 * a3;
  auto b6 = a3 * a3 + k(t, 4) * a6;
  auto b8 = a1 * a1 * a6 + k(t, 4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return -(b2 * b2 * b8) - k(t, 8) * b4 * b4 * b4 - k(t, 27) * b6 * b6 + k(t, 9) * b2 * b4 * b6;
}

RationalFunction j_invariant(const WeierstrassCurve& E) {
  auto disc = E.discriminant();
  if (vanishes(disc)) throw sym::DegenerateInput("Weierstrass discriminant is zero");
  auto c = E.c4();
  return c * c * c / disc;
}

RationalFunction j_from_legendre(const RationalFunction& lambda) {
  const auto& t = lambda.tower();
  auto one = k(t, 1);
  auto den = lambda * lambda * (lambda - one) * (lambda - one);
  if (vanishes(den)) throw sym::DegenerateInput("Legendre parameter is 0 or 1");
  auto q = lambda * lambda - lambda + one;
  return k(t, 256) * q * q * q / den;
}

BinaryQuartic BinaryQuartic::from_polynomial(const MPoly& f, sym::VarId u) {
  const unsigned d = f.degree(u);
  if (d < 3 || d > 4) throw DomainError("binary quartic needs degree 3 or 4 in " + sym::var_name(u));
  auto c = f.coefficients_in(u);
  c.resize(5, MPoly(f.tower()));
  return {c[4], c[3], c[2], c[1], c[0]};
}

RationalFunction BinaryQuartic::invariant_I() const {
  const auto& t = a.tower();
  return k(t, 12) * a * e - k(t, 3) * b * d + c * c;
}

RationalFunction BinaryQuartic::invariant_J() const {
  const auto& t = a.tower();
  return k(t, 72) * a * c * e + k(t, 9) * b * c * d - k(t, 27) * a * d * d - k(t, 27) * e * b * b -
         k(t, 2) * c * c * c;
}

RationalFunction j_from_binary_quartic(const BinaryQuartic& q) {
  const auto& t = q.a.tower();
  auto I = q.invariant_I();
  auto J = q.invariant_J();
  auto I3 = I * I * I;
  auto den = k(t, 4) * I3 - J * J;
  if (vanishes(den)) throw sym::DegenerateInput("binary quartic has a repeated root");
  return k(t, 6912) * I3 / den;
}

curves::HyperellipticModel to_model(const WeierstrassCurve& E, sym::VarId x, sym::VarId y) {
  const auto& t = E.a1.tower();
  auto quarter = RationalFunction(MPoly(t, BigRational(1, 4)));
  auto half = RationalFunction(MPoly(t, BigRational(1, 2)));
  std::vector<RationalFunction> coeffs{E.a6 + quarter * E.a3 * E.a3, E.a4 + half * E.a1 * E.a3,
                                       E.a2 + quarter * E.a1 * E.a1, k(t, 1)};
  MPoly f(t);
  MPoly X = MPoly::variable(t, x);
  for (unsigned i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_polynomial() || !coeffs[i].as_polynomial().is_constant())
      throw DomainError("Weierstrass coefficients must be constants to count points");
    f += coeffs[i].as_polynomial() * X.pow(i);
  }
  return {f, x, y};
}

std::int64_t ap(const curves::CurveModel& E, std::uint64_t p) {
  if (curves::genus(E) != 1) throw DomainError("ap needs a genus-1 model");
  return curves::count_points(E, p).a;
}

std::int64_t ap(const WeierstrassCurve& E, std::uint64_t p) {
  return ap(curves::CurveModel(to_model(E, sym::var_id("x"), sym::var_id("y"))), p);
}

std::set<std::int64_t> cm_trace_candidates(std::int64_t D, std::uint64_t p) {
  if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw DomainError("CM discriminant must be negative and 0 or 1 mod 4");
  exact::require_odd_prime(p);
  if (BigInt(static_cast<long>(D)) % BigInt(static_cast<unsigned long>(p)) == 0)
    throw DomainError("prime " + std::to_string(p) + " is ramified for D = " + std::to_string(D));
  if (exact::kronecker_symbol(BigInt(static_cast<long>(D)), p) == -1) return {0};
  std::set<std::int64_t> out;
  const std::int64_t four_p = 4 * static_cast<std::int64_t>(p);
  const std::int64_t absD = -D;
  for (std::int64_t b = 1; absD * b * b <= four_p; ++b) {
    const std::int64_t sq = four_p - absD * b * b;
    if (exact::is_perfect_square(BigInt(static_cast<long>(sq)))) {
      const auto a = static_cast<std::int64_t>(std::sqrt(static_cast<double>(sq)) + 0.5);
      out.insert(a);
      out.insert(-a);
    }
  }
  return out;
}

CheckResult cm_consistency(const curves::CurveModel& E, std::int64_t D, std::uint64_t pmax,
                           const std::vector<std::uint64_t>& bad_primes) {
  CheckResult r;
  r.id = "cm_consistency";
  std::size_t checked = 0;
  for (std::uint64_t p : exact::primes_in_class(pmax, 1, {0})) {
    if (p == 2 || D % static_cast<std::int64_t>(p) == 0) continue;
    if (std::find(bad_primes.begin(), bad_primes.end(), p) != bad_primes.end()) continue;
    std::int64_t a = 0;
    try {
      a = ap(E, p);
    } catch (const curves::BadReduction&) {
      continue;
    }
    ++checked;
    auto cand = cm_trace_candidates(D, p);
    if (!cand.count(a)) {
      std::ostringstream ev;
      ev << "a_" << p << " = " << a << " is not a trace allowed by D = " << D;
      return make_check(r.id, false, ev.str(), p);
    }
  }
  std::ostringstream ev;
  ev << "traces at " << checked << " good primes <= " << pmax << " are allowed by D = " << D
     << " (necessary condition only)";
  return make_check(r.id, true, ev.str());
}

}  // namespace rhomax::elliptic
