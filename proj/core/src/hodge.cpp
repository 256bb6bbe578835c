#include "rhomax/hodge.hpp"

namespace rhomax::hodge {

namespace {

void require_dims(unsigned d, unsigned n) {
  if (d < 3) throw DomainError("degree must be at least 3");
  if (n < 2 || n % 2 != 0) throw DomainError("dimension must be even and at least 2");
}

}  // namespace

std::vector<BigInt> jacobian_poincare(unsigned d, unsigned n) {
  require_dims(d, n);
  std::vector<BigInt> series{1};
  for (unsigned f = 0; f < n + 2; ++f) {
    std::vector<BigInt> next(series.size() + d - 2, 0);
    for (std::size_t i = 0; i < series.size(); ++i)
      for (unsigned j = 0; j <= d - 2; ++j) next[i + j] += series[i];
    series = std::move(next);
  }
  return series;
}

MiddleHodge middle_hodge(unsigned d, unsigned n) {
  auto series = jacobian_poincare(d, n);
  const unsigned nu = n / 2;
  BigInt prim = series.at((nu + 1) * (d - 2));
  return {prim, prim + 1};
}

std::string to_string(Reading r) { return r == Reading::Printed ? "printed" : "adjusted"; }

BigInt shioda_rank(unsigned d, unsigned n, Reading reading) {
  require_dims(d, n);
  const unsigned nu = n / 2;
  using exact::factorial;
  if (d == 3) {
    if (reading == Reading::Printed) return 1 + factorial(n) / (factorial(nu) * factorial(nu));
    return 1 + factorial(n + 2) / (factorial(nu + 1) * factorial(nu + 1));
  }
  if (d == 4) {
    BigInt sum = 0;
    for (unsigned k = 0; k <= nu + 1; ++k)
      sum += factorial(n + 2) / (factorial(k) * factorial(k) * factorial(n + 2 - 2 * k));
    return reading == Reading::Printed ? sum : sum + 1;
  }
  throw DomainError("rank formula only known for d = 3, 4");
}

CheckResult maximality_report(unsigned d, unsigned n) {
  const auto h = middle_hodge(d, n);
  const BigInt printed = shioda_rank(d, n, Reading::Printed);
  const BigInt adjusted = shioda_rank(d, n, Reading::Adjusted);
  std::string values = "h^{nu,nu} = " + h.total.get_str() + ", printed " + printed.get_str() + ", adjusted " +
                       adjusted.get_str();
  CheckResult r{"maximality", Status::Discrepancy, std::nullopt, values, false};
  if (printed == h.total) {
    r.status = Status::Pass;
    r.evidence = "via printed: " + values;
  } else if (adjusted == h.total) {
    r.status = Status::Pass;
    r.evidence = "via adjusted: " + values;
  }
  return r;
}

std::vector<CheckResult> reading_checks(unsigned d, unsigned n) {
  const auto h = middle_hodge(d, n);
  std::vector<CheckResult> out{maximality_report(d, n)};
  for (Reading r : {Reading::Printed, Reading::Adjusted}) {
    const BigInt rank = shioda_rank(d, n, r);
    CheckResult c{"reading:" + to_string(r), rank == h.total ? Status::Pass : Status::Discrepancy, std::nullopt,
                  "rank " + rank.get_str() + ", h^{nu,nu} = " + h.total.get_str() + ", primitive " +
                      h.primitive.get_str(),
                  false};
    out.push_back(std::move(c));
  }
  return out;
}

ProductInvariants product_invariants(unsigned g, unsigned g2) {
  const BigInt gg = BigInt(g) * g2;
  return {2 * gg + 2, 2 + 2 * gg, 2 * gg};
}

QuotientSurface quotient_surface_check(const std::vector<QuotientFactor>& factors) {
  BigInt h11 = 2, ns = 2;
  for (const auto& f : factors) {
    if (f.multiplicity == 0) throw DomainError("multiplicities must be positive");
    const BigInt m2 = BigInt(f.multiplicity) * f.multiplicity;
    h11 += 2 * m2;
    ns += (f.cm ? 2 : 1) * m2;
  }
  return {h11, ns, h11 == ns};
}

BigInt lattice_index(const TauLattice& l) {
  if (l.a <= 0) throw DomainError("leading coefficient must be positive");
  if (l.b * l.b - 4 * l.a * l.c >= 0) throw DomainError("tau is not imaginary quadratic");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), l.a.get_mpz_t(), l.b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), l.c.get_mpz_t());
  if (g != 1) throw DomainError("minimal polynomial must be primitive");
  // tau^2 = -(b/a) tau - c/a
  std::vector<BigRational> v{exact::make_rational(l.c, l.a), exact::make_rational(l.b, l.a)};
  return exact::torsion_order(v);
}

BigInt cm_field_disc(const BigInt& a, const BigInt& b) {
  if (a <= 0 || b <= 0) throw DomainError("orthogonal basis values must be positive");
  return -exact::squarefree_part(a * b);
}

}  // namespace rhomax::hodge
