#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rhomax/modp.hpp"
#include "rhomax/relation.hpp"

namespace rhomax::curves {

using sym::MPoly;
using sym::VarId;

/// Smooth plane curve F(X,Y,Z) = 0, F homogeneous of degree d.
struct PlaneCurve {
  PlaneCurve(MPoly F, VarId X, VarId Y, VarId Z);
  MPoly F;
  VarId X, Y, Z;
  unsigned degree;
};

/// y^2 = f(x), f squarefree.
struct HyperellipticModel {
  HyperellipticModel(MPoly f, VarId x, VarId y);
  MPoly f;
  VarId x, y;
};

/// v^m = f(u), m prime, f squarefree.
struct SuperellipticModel {
  SuperellipticModel(unsigned m, MPoly f, VarId u, VarId v);
  unsigned m;
  MPoly f;
  VarId u, v;
};

/// Curve in P^n cut out by homogeneous relations. The genus is declared by
/// the caller. With `square_root_base` set, every relation must read
/// s^2 - g(base) and points are counted fibrewise over P(base).
struct SpaceCurve {
  SpaceCurve(std::vector<VarId> coords, std::vector<MPoly> relations, unsigned genus,
             std::vector<VarId> square_root_base = {});
  std::vector<VarId> coords;
  std::vector<MPoly> relations;
  unsigned declared_genus;
  std::vector<VarId> square_root_base;
};

using CurveModel = std::variant<PlaneCurve, HyperellipticModel, SuperellipticModel, SpaceCurve>;

struct CountRecord {
  std::uint64_t p;
  unsigned k;
  std::uint64_t N;
  std::int64_t a;
};

/// Prime where the reduction of the model is singular or degenerate.
class BadReduction : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Constant symbols of the model have no root mod p.
class UnresolvedConstants : public DomainError {
 public:
  using DomainError::DomainError;
};

class WorkCapExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

struct CountOptions {
  std::uint64_t plane_cap = 499;        // largest p for plane enumeration
  std::uint64_t space_brute_cap = 13;   // largest p for brute force on P^n
  std::uint64_t ext_work_cap = 4000000; // field evaluations allowed for extension counts
};

unsigned genus(const CurveModel& model);
const sym::TowerPtr& model_tower(const CurveModel& model);
std::string describe(const CurveModel& model);

CountRecord count_points(const CurveModel& model, std::uint64_t p, const CountOptions& opt = {});
CountRecord count_points_ext(const CurveModel& model, std::uint64_t p, unsigned k, const CountOptions& opt = {});

/// Same count with an explicit choice of constant roots.
CountRecord count_points(const CurveModel& model, const sym::TowerSpecialization& spec, const CountOptions& opt = {});

std::int64_t frobenius_trace(const CountRecord& rec);

/// |a| <= 2 g p^{k/2}, decided exactly (a^2 <= 4 g^2 p^k).
bool weil_bound_holds(const CountRecord& rec, unsigned genus);

/// Affine (Z = 1) and line-at-infinity parts of a plane count.
struct PlaneChartCount {
  std::uint64_t affine;
  std::uint64_t infinity;
};
PlaneChartCount count_plane_charts(const PlaneCurve& c, const sym::TowerSpecialization& spec);

/// Direct enumeration of P^n for a space curve (no fibration).
std::uint64_t count_space_brute(const SpaceCurve& c, const sym::TowerSpecialization& spec);

/// Rank of the symmetric matrix of a rational quadratic form.
unsigned quadric_rank(const MPoly& q, const std::vector<VarId>& vars);

}  // namespace rhomax::curves
