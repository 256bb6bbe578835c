#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rhomax/check.hpp"
#include "rhomax/curves.hpp"
#include "rhomax/rational_function.hpp"

namespace rhomax::elliptic {

using sym::RationalFunction;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, coefficients in K(params).
struct WeierstrassCurve {
  RationalFunction a1, a2, a3, a4, a6;

  /// y^2 = x^3 + a2 x^2 + a4 x + a6.
  static WeierstrassCurve short_form(const RationalFunction& a2, const RationalFunction& a4,
                                     const RationalFunction& a6);
  RationalFunction discriminant() const;
  RationalFunction c4() const;
};

/// a u^4 + b u^3 + c u^2 + d u + e.
struct BinaryQuartic {
  RationalFunction a, b, c, d, e;

  /// Reads off the coefficients of f (degree 3 or 4 in u; other variables
  /// are treated as parameters).
  static BinaryQuartic from_polynomial(const sym::MPoly& f, sym::VarId u);
  RationalFunction invariant_I() const;
  RationalFunction invariant_J() const;
};

/// Throws sym::DegenerateInput on a zero discriminant.
RationalFunction j_invariant(const WeierstrassCurve& E);
/// j of y^2 = x(x-1)(x-lambda); DegenerateInput for lambda in {0, 1}.
RationalFunction j_from_legendre(const RationalFunction& lambda);
/// j of the double cover branched at the roots of q; DegenerateInput when q
/// has a repeated root.
RationalFunction j_from_binary_quartic(const BinaryQuartic& q);

/// Genus-1 hyperelliptic model equivalent to E (completing the square).
curves::HyperellipticModel to_model(const WeierstrassCurve& E, sym::VarId x, sym::VarId y);

/// p + 1 - #E(F_p) for a genus-1 model.
std::int64_t ap(const curves::CurveModel& E, std::uint64_t p);
std::int64_t ap(const WeierstrassCurve& E, std::uint64_t p);

/// Traces allowed at p for CM by the order of discriminant D.
std::set<std::int64_t> cm_trace_candidates(std::int64_t D, std::uint64_t p);

/// PASS iff ap(E, p) lies in cm_trace_candidates(D, p) for every good odd
/// p <= pmax (p not dividing D, not listed as bad).
CheckResult cm_consistency(const curves::CurveModel& E, std::int64_t D, std::uint64_t pmax,
                           const std::vector<std::uint64_t>& bad_primes = {});

}  // namespace rhomax::elliptic
