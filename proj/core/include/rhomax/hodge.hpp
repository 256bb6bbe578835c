#pragma once

#include <string>
#include <vector>

#include "rhomax/check.hpp"
#include "rhomax/exactmath.hpp"

namespace rhomax::hodge {

/// Coefficients of (1 + T + ... + T^(d-2))^(n+2), constant term first.
std::vector<BigInt> jacobian_poincare(unsigned d, unsigned n);

struct MiddleHodge {
  BigInt primitive;
  BigInt total;
};

/// h^{nu,nu} of the Fermat hypersurface of degree d and dimension n = 2 nu.
MiddleHodge middle_hodge(unsigned d, unsigned n);

enum class Reading { Printed, Adjusted };
std::string to_string(Reading r);

/// Rank of the algebraic part of the middle cohomology, d in {3, 4}.
BigInt shioda_rank(unsigned d, unsigned n, Reading reading);

/// PASS if some reading of shioda_rank equals the total h^{nu,nu}.
CheckResult maximality_report(unsigned d, unsigned n);

/// maximality_report followed by one row per reading ("reading:printed",
/// "reading:adjusted"); a reading that misses h^{nu,nu} is a DISCREPANCY.
std::vector<CheckResult> reading_checks(unsigned d, unsigned n);

struct ProductInvariants {
  BigInt h11;
  BigInt ns_max;
  BigInt hom_bound;
};

/// C x C' with genera g, g'.
ProductInvariants product_invariants(unsigned g, unsigned g2);

struct QuotientFactor {
  unsigned multiplicity = 1;
  bool cm = false;
};

struct QuotientSurface {
  BigInt h11;
  BigInt ns_max;
  bool maximal = false;
};

QuotientSurface quotient_surface_check(const std::vector<QuotientFactor>& factors);

/// tau with minimal polynomial a x^2 + b x + c (a > 0, primitive, b^2 < 4ac).
struct TauLattice {
  BigInt a, b, c;
};

/// [Z<1, tau, tau^2> : Z<1, tau>].
BigInt lattice_index(const TauLattice& l);

/// Q(sqrt(-ab)) for an orthogonal basis with e^2 = a, f^2 = b.
BigInt cm_field_disc(const BigInt& a, const BigInt& b);

}  // namespace rhomax::hodge
