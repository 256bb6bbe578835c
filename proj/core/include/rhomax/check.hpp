#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace rhomax {

enum class Status { Pass, Fail, Discrepancy, Skipped };

std::string to_string(Status s);

/// One line of a verification report.
struct CheckResult {
  std::string id;
  Status status = Status::Skipped;
  std::optional<std::uint64_t> prime;
  std::string evidence;
  /// Failure declared in advance by the catalog (negative controls).
  bool expected_failure = false;

  bool passed() const { return status == Status::Pass; }
};

inline CheckResult make_check(std::string id, bool ok, std::string evidence,
                              std::optional<std::uint64_t> prime = std::nullopt) {
  return {std::move(id), ok ? Status::Pass : Status::Fail, prime, std::move(evidence), false};
}

}  // namespace rhomax
