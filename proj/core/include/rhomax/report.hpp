#pragma once

// Report assembly: deterministic JSON and markdown renderings of check runs.

#include <string>
#include <vector>

#include <json.hpp>

#include "rhomax/pipeline.hpp"

namespace rhomax::report {

using pipeline::EntryReport;

enum class Format { Json, Markdown };

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t discrepancy = 0;
  std::size_t skipped = 0;
  /// Failures declared in advance; included in `fail`.
  std::size_t expected_fail = 0;
};

Summary summarize(const std::vector<CheckResult>& checks);

/// Checks sorted by (id, prime), unprimed rows first; status and evidence
/// break ties.
std::vector<CheckResult> ordered(std::vector<CheckResult> checks);

/// {"entry", "checks": [{"id", "status", "prime", "evidence"}], "summary"}.
nlohmann::json entry_json(const EntryReport& r);

/// {"reports": [...], "summary": {...}} with reports sorted by entry id.
nlohmann::json report_json(const std::vector<EntryReport>& reports);

std::string emit(const std::vector<EntryReport>& reports, Format f);
std::string emit_json(const std::vector<EntryReport>& reports);
std::string emit_markdown(const std::vector<EntryReport>& reports);

/// An entry's claim holds when none of its checks failed unexpectedly.
bool claim_holds(const EntryReport& r);

/// Rows of the Fermat table for (d, n), under the entry "hodge[d=..,n=..]".
EntryReport hodge_report(unsigned d, unsigned n);

bool has_unexpected_failure(const std::vector<EntryReport>& reports);

}  // namespace rhomax::report
