#pragma once

#include <string>
#include <vector>

#include "rhomax/morphisms.hpp"

namespace rhomax::morph {

/// Finite matrix group acting on a declared basis of H^0(K).
struct GroupAction {
  sym::TowerPtr tower;
  std::size_t dimension = 0;
  std::vector<sym::KMatrix> generators;
};

/// Generators given as automorphisms of the curve, matrices derived by
/// pulling back the basis.
GroupAction action_from_automorphisms(const AffineCurve& c, const std::vector<CurveMap>& automorphisms);

/// All products of generators (identity first, breadth-first order).
/// Throws DomainError when more than `bound` elements appear.
std::vector<sym::KMatrix> group_closure(const GroupAction& g, std::size_t bound = 4096);

/// (1/|G|) sum tr(g) conj(tr(g)); DomainError if the value is not rational.
BigRational character_norm(const std::vector<sym::KMatrix>& elements);

/// A declared invariant subspace, spanned by coordinate vectors.
struct IsotypicSummand {
  std::string label;
  std::vector<std::vector<sym::TowerElement>> basis;
};

/// Restriction of each element to a stable summand (nullopt if some
/// element does not preserve it).
std::optional<std::vector<sym::KMatrix>> restrict_to(const std::vector<sym::KMatrix>& elements,
                                                     const IsotypicSummand& s);

/// PASS iff every summand is stable, they are independent and span, and each
/// restricted character has norm 1.
CheckResult verify_decomposition(const std::vector<sym::KMatrix>& elements, const std::vector<IsotypicSummand>& summands);

/// Per-summand data of the irreducibility certificate.
struct SummandWitness {
  std::string summand;
  std::string target;
  bool map_ok = false;
  bool contained = false;
  std::vector<sym::TowerElement> pullback;
  /// Indices into the closure of the translates used.
  std::vector<std::size_t> translates;
  std::size_t rank = 0;
  std::size_t dimension = 0;
  std::string note;
  bool complete() const { return map_ok && contained && rank == dimension; }
};

struct SummandMap {
  const AffineCurve* target = nullptr;
  std::string target_label;
  CurveMap map;
  RationalFunction eta;
};

struct IrredCertificate {
  std::vector<SummandWitness> witnesses;
  /// Target label -> multiplicity, over the complete witnesses.
  std::vector<std::pair<std::string, std::size_t>> conclusion;
  bool complete() const;
};

/// Throws DomainError when some summand has no map.
IrredCertificate lemma_irred_certificate(const AffineCurve& c, const std::vector<sym::KMatrix>& closure,
                                         const std::vector<IsotypicSummand>& summands,
                                         const std::vector<std::optional<SummandMap>>& maps);

}  // namespace rhomax::morph
