#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rhomax/catalog.hpp"

namespace rhomax::pipeline {

struct Feasibility {
  bool feasible = false;
  /// One trace per factor copy, in factor order, summing to the target.
  std::vector<std::int64_t> witness;
};

/// Is `a` a sum of one value per copy, copies of factor i drawn from sets[i]?
Feasibility feasible_sum(std::int64_t a, const std::vector<std::pair<std::set<std::int64_t>, unsigned>>& sets);

/// Feasibility with the CM trace candidates of each (D, m) at p.
Feasibility trace_feasibility(std::int64_t a, const std::vector<std::pair<std::int64_t, unsigned>>& factors,
                              std::uint64_t p);

struct RunOptions {
  std::uint64_t pmax = 200;
  /// Counts over F_{p^k} for k <= depth (genus <= 3 models).
  unsigned depth = 1;
  curves::CountOptions count;
};

struct EntryReport {
  std::string entry;
  std::vector<CheckResult> checks;
};

/// Runs every check of the entry in order; failures are recorded, never thrown.
/// Prime-independent checks: maps and pullbacks, decomposition and
/// certificate, auxiliary identities.
std::vector<CheckResult> run_symbolic(const catalog::Entry& e);

EntryReport run_entry(const catalog::Entry& e, const RunOptions& opt = {});

/// Runs entries on up to `threads` workers (0: hardware concurrency);
/// results keep the input order.
std::vector<EntryReport> run_entries(const std::vector<const catalog::Entry*>& entries, const RunOptions& opt = {},
                                     unsigned threads = 0);

}  // namespace rhomax::pipeline
