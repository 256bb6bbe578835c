#include "rhomax/report.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "rhomax/hodge.hpp"

namespace rhomax::report {

using nlohmann::json;

namespace {

bool unexpected_fail(const CheckResult& c) { return c.status == Status::Fail && !c.expected_failure; }

json summary_json(const Summary& s) {
  return {{"pass", s.pass}, {"fail", s.fail}, {"discrepancy", s.discrepancy}, {"skipped", s.skipped},
          {"expected_fail", s.expected_fail}};
}

Summary& operator+=(Summary& a, const Summary& b) {
  a.pass += b.pass;
  a.fail += b.fail;
  a.discrepancy += b.discrepancy;
  a.skipped += b.skipped;
  a.expected_fail += b.expected_fail;
  return a;
}

std::vector<EntryReport> sorted_reports(std::vector<EntryReport> rs) {
  std::stable_sort(rs.begin(), rs.end(), [](const EntryReport& a, const EntryReport& b) { return a.entry < b.entry; });
  for (auto& r : rs) r.checks = ordered(std::move(r.checks));
  return rs;
}

std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

}  // namespace

Summary summarize(const std::vector<CheckResult>& checks) {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail:
        ++s.fail;
        if (c.expected_failure) ++s.expected_fail;
        break;
      case Status::Discrepancy: ++s.discrepancy; break;
      case Status::Skipped: ++s.skipped; break;
    }
  }
  return s;
}

std::vector<CheckResult> ordered(std::vector<CheckResult> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
    auto key = [](const CheckResult& c) {
      return std::make_tuple(std::cref(c.id), c.prime.value_or(0), static_cast<int>(c.status), std::cref(c.evidence),
                             c.expected_failure);
    };
    return key(a) < key(b);
  });
  return checks;
}

json entry_json(const EntryReport& r) {
  json checks = json::array();
  for (const auto& c : ordered(r.checks)) {
    json ev = {{"detail", c.evidence}};
    if (c.expected_failure) ev["expected_failure"] = true;
    checks.push_back({{"id", c.id},
                      {"status", to_string(c.status)},
                      {"prime", c.prime ? json(*c.prime) : json(nullptr)},
                      {"evidence", ev}});
  }
  return {{"entry", r.entry}, {"checks", checks}, {"summary", summary_json(summarize(r.checks))}};
}

json report_json(const std::vector<EntryReport>& reports) {
  json rs = json::array();
  Summary total;
  std::size_t held = 0;
  for (const auto& r : sorted_reports(reports)) {
    rs.push_back(entry_json(r));
    total += summarize(r.checks);
    held += claim_holds(r) ? 1 : 0;
  }
  return {{"reports", rs},
          {"summary", summary_json(total)},
          {"claims", {{"pass", held}, {"fail", reports.size() - held}}}};
}

std::string emit_json(const std::vector<EntryReport>& reports) { return report_json(reports).dump(2) + "\n"; }

std::string emit_markdown(const std::vector<EntryReport>& reports) {
  std::ostringstream os;
  os << "# Verification report\n";
  std::size_t held = 0;
  Summary total;
  for (const auto& r : sorted_reports(reports)) {
    auto s = summarize(r.checks);
    total += s;
    held += claim_holds(r) ? 1 : 0;
    os << "\n## " << r.entry << "\n\n| check | prime | status | evidence |\n|---|---|---|---|\n";
    for (const auto& c : r.checks) {
      os << "| " << cell(c.id) << " | " << (c.prime ? std::to_string(*c.prime) : "") << " | " << to_string(c.status)
         << (c.expected_failure ? " (expected)" : "") << " | " << cell(c.evidence) << " |\n";
    }
    os << "\n" << s.pass << " pass, " << s.fail << " fail, " << s.discrepancy << " discrepancy, " << s.skipped
       << " skipped\n";
  }
  os << "\nchecks: " << total.pass << " pass / " << total.fail << " fail / " << total.discrepancy
     << " discrepancy / " << total.skipped << " skipped\n";
  os << "claims: " << held << " pass / " << reports.size() - held << " fail\n";
  return os.str();
}

std::string emit(const std::vector<EntryReport>& reports, Format f) {
  return f == Format::Json ? emit_json(reports) : emit_markdown(reports);
}

EntryReport hodge_report(unsigned d, unsigned n) {
  return {"hodge[d=" + std::to_string(d) + ",n=" + std::to_string(n) + "]", hodge::reading_checks(d, n)};
}

bool claim_holds(const EntryReport& r) { return std::none_of(r.checks.begin(), r.checks.end(), unexpected_fail); }

bool has_unexpected_failure(const std::vector<EntryReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const EntryReport& r) { return !claim_holds(r); });
}

}  // namespace rhomax::report
