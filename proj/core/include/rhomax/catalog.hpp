#pragma once

// Machine-readable example catalog: curve models, maps, group actions and
// isogeny claims, loaded from JSON and expanded over parameter values.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "rhomax/curves.hpp"
#include "rhomax/group.hpp"

namespace rhomax::catalog {

using sym::MPoly;
using sym::RationalFunction;
using sym::TowerElement;
using sym::VarId;

/// Schema violation or dangling reference; the message names the location.
class CatalogError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Curve receiving a map, with its holomorphic form and optional counting model.
struct TargetCurve {
  std::string name;
  morph::AffineCurve curve;
  std::optional<RationalFunction> eta;
  std::optional<curves::CurveModel> model;
  std::optional<BigRational> expected_j;
};

/// Map between affine charts.
struct CurveMapDecl {
  std::string target;
  morph::CurveMap map;
};

/// Homogeneous map from a projective curve into P^n.
struct ImageMapDecl {
  sym::RelationSet source;
  std::vector<VarId> source_vars;
  std::vector<MPoly> components;
  std::vector<VarId> target_vars;
  std::vector<MPoly> relations;
};

/// Map from a product C x C' into P^3.
struct ShiodaDecl {
  sym::RelationSet factors;
  std::vector<VarId> first_vars;
  std::vector<VarId> second_vars;
  std::vector<MPoly> components;
  std::vector<VarId> target_vars;
  MPoly G;
};

struct MapDecl {
  std::string name;
  std::string origin;  // "printed" or "derived"
  bool expect_pass = true;
  std::variant<CurveMapDecl, ImageMapDecl, ShiodaDecl> body;
};

struct Factor {
  std::optional<std::int64_t> disc;
  unsigned mult = 1;
  /// Target whose count enters the exact trace identity.
  std::optional<std::string> target;
};

struct Claim {
  std::vector<Factor> factors;
  /// a_p(C) = sum m_i a_p(E_i) is asserted when set.
  bool exact = false;
};

struct QuadricRankCheck {
  MPoly quadric;
  std::vector<VarId> vars;
  unsigned rank;
};

/// j of a binary quartic equals j of a Legendre curve, over Q(t).
struct QuarticLegendreCheck {
  MPoly quartic;
  VarId var;
  RationalFunction lambda;
};

using AuxCheck = std::variant<QuadricRankCheck, QuarticLegendreCheck>;

struct CertificateLink {
  std::string summand;
  std::string map;
  std::string label;
};

struct Entry {
  std::string id;
  std::string family;
  std::map<std::string, BigRational> params;
  sym::TowerPtr tower;
  std::optional<curves::CurveModel> model;
  std::optional<morph::AffineCurve> chart;
  std::map<std::string, TargetCurve> targets;
  std::vector<MapDecl> maps;
  std::vector<morph::CurveMap> automorphisms;
  std::vector<morph::IsotypicSummand> summands;
  std::vector<CertificateLink> certificate;
  std::optional<Claim> claim;
  std::set<std::uint64_t> bad_primes;
  std::vector<AuxCheck> aux;

  bool symbolic_only() const { return !model.has_value(); }
  const MapDecl* find_map(const std::string& name) const;
};

/// Parses and resolves every entry; parametric entries expand to one entry
/// per listed value, with ids like "Ex1[t=0]".
std::vector<Entry> load_catalog(const nlohmann::json& doc);
std::vector<Entry> load_catalog_file(const std::string& path);

/// Path of the catalog shipped with the library (build or install tree).
std::string default_catalog_path();

const Entry& find_entry(const std::vector<Entry>& entries, const std::string& id);

}  // namespace rhomax::catalog
