#include "rhomax/check.hpp"

namespace rhomax {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Discrepancy:
      return "DISCREPANCY";
    case Status::Skipped:
      return "SKIPPED";
  }
  return "?";
}

}  // namespace rhomax
