// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "rhomax/elliptic.hpp"
#include "rhomax/hodge.hpp"
#include "rhomax/parser.hpp"
#include "rhomax/pipeline.hpp"

using namespace rhomax;

namespace {

using catalog::Entry;

const std::vector<Entry>& entries() {
  static const auto e = catalog::load_catalog_file(RHOMAX_CATALOG_PATH);
  return e;
}

const Entry& entry(const std::string& id) { return catalog::find_entry(entries(), id); }

// Collects mismatches; a criterion passes when none were recorded.
struct Ledger {
  std::vector<std::string> problems;
  std::size_t checked = 0;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) problems.push_back(what);
  }
};

const CheckResult* find(const std::vector<CheckResult>& rows, const std::string& id,
                        std::optional<std::uint64_t> prime = std::nullopt) {
  for (const auto& r : rows)
    if (r.id == id && r.prime == prime) return &r;
  return nullptr;
}

bool primes_upto(std::uint64_t p) { return p > 2 && exact::is_prime(p); }

sym::TowerElement constant(const std::string& text, const sym::TowerPtr& t) {
  return sym::parse_polynomial(text, t).constant_value();
}

void symbolic_maps(Ledger& L) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> passing = {
      {"Ex1[t=0]", {"pi", "pi'"}}, {"Ex1[t=1]", {"pi", "pi'"}}, {"Ex1[t=3]", {"pi", "pi'"}},
      {"Ex2", {"pi"}},             {"Ex3[t=0]", {"q"}},          {"Ex3[t=1]", {"q"}},
      {"Ex4", {"g"}},              {"C6", {"f", "g", "h"}},      {"C6/alpha", {"canonical"}},
      {"C6/beta", {"canonical"}},  {"C6/gamma", {"canonical"}},  {"C6/delta", {"canonical"}}};
  for (const auto& [id, maps] : passing) {
    auto rows = pipeline::run_symbolic(entry(id));
    for (const auto& m : maps) {
      const auto* r = find(rows, "map:" + m);
      L.expect(r && r->passed(), id + " map " + m + (r ? ": " + r->evidence : " missing"));
    }
  }
  const auto& ex4 = entry("Ex4");
  auto rows = pipeline::run_symbolic(ex4);
  const auto* f = find(rows, "map:f");
  L.expect(f && f->status == Status::Fail && f->expected_failure, "Ex4 map f should fail as expected");
  const auto& decl = std::get<catalog::CurveMapDecl>(ex4.find_map("f")->body);
  auto residual = morph::map_residual(*ex4.chart, ex4.targets.at(decl.target).curve, decl.map);
  L.expect(residual == sym::parse_polynomial("x^3*(x^6+1)-x^2*(x^4+1)", ex4.tower),
           "Ex4 f residual " + residual.to_string());
}

// coordinates of the pullback of the target's form against the chart basis
std::vector<sym::TowerElement> pulled_back(const Entry& e, const std::string& map) {
  const auto& decl = std::get<catalog::CurveMapDecl>(e.find_map(map)->body);
  const auto& target = e.targets.at(decl.target);
  return morph::classify(*e.chart, morph::pullback(*e.chart, target.curve, decl.map, *target.eta));
}

void expect_form(Ledger& L, const Entry& e, const std::string& map,
                 const std::vector<std::pair<std::string, sym::TowerElement>>& expected) {
  auto got = pulled_back(e, map);
  const auto& labels = e.chart->basis_labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    sym::TowerElement want(e.tower);
    for (const auto& [label, c] : expected)
      if (label == labels[i]) want = c;
    L.expect(got[i] == want, e.id + " " + map + " coefficient of " + labels[i] + " is " + got[i].to_string());
  }
}

void pullbacks(Ledger& L) {
  const auto& c6 = entry("C6");
  expect_form(L, c6, "f", {{"X^1*Y^2*Z^0", constant("-2", c6.tower)}});
  expect_form(L, c6, "g", {{"X^0*Y^3*Z^0", constant("-2*c", c6.tower)}});
  expect_form(L, c6, "h", {{"X^1*Y^1*Z^1", constant("2", c6.tower)}});
  const auto& ex4 = entry("Ex4");
  auto inv = constant("l", ex4.tower).inverse();
  expect_form(L, ex4, "g", {{"x^0 dx/y", -inv}, {"x^2 dx/y", inv}});
}

void certificates(Ledger& L) {
  const std::vector<std::pair<std::string, std::string>> want = {
      {"Ex1[t=0]", "E_t^2"}, {"Ex1[t=1]", "E_t^2"}, {"Ex1[t=3]", "E_t^2"},
      {"Ex3[t=0]", "E_t^3"}, {"Ex3[t=1]", "E_t^3"}, {"C6", "E_omega^10"}};
  for (const auto& [id, conclusion] : want) {
    auto rows = pipeline::run_symbolic(entry(id));
    const auto* cert = find(rows, "certificate");
    L.expect(cert && cert->passed() && cert->evidence.find("conclusion " + conclusion + ",") != std::string::npos,
             id + " certificate: " + (cert ? cert->evidence : "missing"));
    const auto* dec = find(rows, "decomposition");
    bool norms_one = dec && dec->passed() && dec->evidence.find("norms (") != std::string::npos;
    if (norms_one) {
      auto norms = dec->evidence.substr(dec->evidence.find("norms (") + 7);
      norms = norms.substr(0, norms.find(')'));
      std::stringstream ss(norms);
      for (std::string n; std::getline(ss, n, ',');) norms_one = norms_one && n == "1";
    }
    L.expect(norms_one, id + " decomposition: " + (dec ? dec->evidence : "missing"));
  }
}

void inert_exactness(Ledger& L) {
  struct Case {
    std::string id;
    std::uint64_t mod, residue, anchor_p, anchor_n;
  };
  const std::vector<Case> cases = {{"C6", 3, 2, 5, 6},       {"Ex3[t=0]", 4, 3, 7, 8}, {"Ex4", 4, 3, 7, 8},
                                   {"X8", 8, 7, 7, 8},       {"C6/alpha", 3, 2, 5, 6}, {"C6/gamma", 3, 2, 5, 6}};
  for (const auto& c : cases) {
    const auto& e = entry(c.id);
    std::size_t n = 0;
    for (std::uint64_t p = 3; p <= 200; p += 2) {
      if (!primes_upto(p) || p % c.mod != c.residue || e.bad_primes.count(p)) continue;
      auto rec = curves::count_points(*e.model, p);
      L.expect(rec.N == p + 1, c.id + " p=" + std::to_string(p) + " N=" + std::to_string(rec.N));
      if (p == c.anchor_p) L.expect(rec.N == c.anchor_n, c.id + " anchor");
      ++n;
    }
    L.expect(n >= 10, c.id + " tested only " + std::to_string(n) + " primes");
  }
}

void declared(Ledger& L, const Entry& e, const std::vector<std::pair<std::int64_t, unsigned>>& factors) {
  std::vector<std::pair<std::int64_t, unsigned>> got;
  for (const auto& f : e.claim->factors) got.emplace_back(f.disc.value_or(0), f.mult);
  std::sort(got.begin(), got.end());
  auto want = factors;
  std::sort(want.begin(), want.end());
  L.expect(got == want, e.id + " declared factors differ");
}

void split_feasibility(Ledger& L) {
  const std::vector<std::pair<std::string, std::vector<std::pair<std::int64_t, unsigned>>>> cases = {
      {"C6", {{-3, 10}}},     {"C6/alpha", {{-3, 4}}}, {"C6/beta", {{-3, 4}}},
      {"C6/gamma", {{-3, 4}}}, {"C6/delta", {{-3, 4}}}, {"Ex2", {{-8, 2}}},
      {"Ex4", {{-4, 3}}},     {"X8", {{-4, 3}, {-8, 2}}}};
  pipeline::RunOptions opt;
  opt.pmax = 200;
  for (const auto& [id, factors] : cases) {
    const auto& e = entry(id);
    declared(L, e, factors);
    auto rep = pipeline::run_entry(e, opt);
    std::size_t split = 0;
    for (const auto& r : rep.checks) {
      if (r.id != "feasibility") continue;
      L.expect(r.passed(), id + " p=" + std::to_string(r.prime.value_or(0)) + " " + r.evidence);
      if (!find(rep.checks, "inert", r.prime)) ++split;
    }
    L.expect(split >= 10, id + " only " + std::to_string(split) + " split or mixed primes");
  }
  L.expect(elliptic::cm_trace_candidates(-3, 7) == std::set<std::int64_t>{-5, -4, -1, 1, 4, 5}, "candidates at 7");
  L.expect(curves::count_points(*entry("C6").model, 7).a == 8, "a_7(C6) = 8");
  L.expect(pipeline::trace_feasibility(8, {{-3, 10}}, 7).feasible, "anchor a=8 at p=7");
}

std::int64_t trace_of(const curves::CurveModel& m, std::uint64_t p) { return curves::count_points(m, p).a; }

void exact_identities(Ledger& L) {
  pipeline::RunOptions opt;
  opt.pmax = 100;
  for (const char* id : {"Ex1[t=0]", "Ex1[t=1]", "Ex1[t=3]", "Ex3[t=0]", "Ex3[t=1]"}) {
    auto rep = pipeline::run_entry(entry(id), opt);
    std::size_t n = 0;
    for (const auto& r : rep.checks)
      if (r.id == "exact_trace") {
        L.expect(r.passed(), std::string(id) + " p=" + std::to_string(r.prime.value_or(0)) + " " + r.evidence);
        ++n;
      }
    L.expect(n >= 15, std::string(id) + " only " + std::to_string(n) + " exact identities");
  }
  const auto& ex1 = entry("Ex1[t=0]");
  L.expect(trace_of(*ex1.model, 5) == 0 && trace_of(*ex1.targets.at("E").model, 5) == 0 &&
               trace_of(*ex1.targets.at("E'").model, 5) == 0,
           "Ex1 anchor 0 = 0 + 0 at p=5");
  const auto& ex3 = entry("Ex3[t=0]");
  L.expect(trace_of(*ex3.model, 5) == 6 && trace_of(*ex3.targets.at("Q").model, 5) == 2, "Ex3 anchor 6 = 3*2 at p=5");
}

void j_invariants(Ledger& L) {
  auto rows = pipeline::run_symbolic(entry("Ex2"));
  const auto* j = find(rows, "j:E");
  L.expect(j && j->passed() && j->evidence.rfind("j = 8000,", 0) == 0, "Ex2 j: " + (j ? j->evidence : "missing"));
  auto Q = sym::Tower::rational();
  auto quartic = sym::parse_polynomial("(t+2)*(u^4+1)+2*t*u^2", Q);
  auto jq = elliptic::j_from_binary_quartic(elliptic::BinaryQuartic::from_polynomial(quartic, sym::var_id("u")));
  auto jl = elliptic::j_from_legendre(sym::parse_rational_function("-(t+1)", Q));
  L.expect(jq.equals(jl), "quartic and Legendre j differ over Q(t): " + jq.to_string());
}

void hodge_tables(Ledger& L) {
  struct Row {
    unsigned d, n;
    long total, printed;
  };
  const std::vector<Row> rows = {{3, 2, 7, 3},     {3, 4, 21, 7},     {3, 6, 71, -1},
                                 {4, 2, 20, 19},   {4, 4, 142, 141},  {4, 6, 1108, 1107}};
  for (const auto& r : rows) {
    std::string at = "(" + std::to_string(r.d) + "," + std::to_string(r.n) + ")";
    auto h = hodge::middle_hodge(r.d, r.n);
    L.expect(h.total == r.total, at + " total " + h.total.get_str());
    L.expect(hodge::shioda_rank(r.d, r.n, hodge::Reading::Adjusted) == h.total, at + " adjusted reading");
    auto printed = hodge::shioda_rank(r.d, r.n, hodge::Reading::Printed);
    if (r.printed >= 0) L.expect(printed == r.printed, at + " printed " + printed.get_str());
    auto checks = hodge::reading_checks(r.d, r.n);
    L.expect(checks[0].passed() && checks[0].evidence.rfind("via adjusted", 0) == 0, at + " maximality");
    L.expect(find(checks, "reading:printed")->status == Status::Discrepancy, at + " printed not flagged");
  }
}

void bookkeeping(Ledger& L) {
  auto pi = hodge::product_invariants(10, 10);
  L.expect(pi.h11 == 202 && pi.ns_max == 202 && pi.hom_bound == 200, "product_invariants(10,10)");
  auto q = hodge::quotient_surface_check({{2, true}, {1, true}, {1, true}, {1, true}});
  L.expect(q.h11 == 16 && q.ns_max == 16 && q.maximal, "quotient_surface_check");
  L.expect(hodge::lattice_index({9, 0, 1}) == 9, "lattice_index(9x^2+1)");
  L.expect(hodge::cm_field_disc(2, 3) == -6, "cm_field_disc(2,3)");
}

// runs the "property:" cases of a unit test binary; number run, or -1 on failure
int run_properties(const std::string& binary) {
  std::string cmd = "\"" + binary + "\" -tc=\"property:*\" -nv 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  std::string out;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  if (pclose(pipe) != 0) return -1;
  auto at = out.find("test cases:");
  return at == std::string::npos ? -1 : std::atoi(out.c_str() + at + 11);
}

void property_suites(Ledger& L) {
  for (const char* t : {"test_curves", "test_elliptic", "test_symbolic", "test_morphisms", "test_pipeline",
                        "test_report", "test_hodge", "test_catalog"}) {
    int n = run_properties(std::string(RHOMAX_TEST_DIR) + "/" + t);
    L.expect(n > 0, std::string(t) + (n < 0 ? " property cases failed" : " has no property cases"));
  }
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<void(Ledger&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "symbolic map suite", 5, symbolic_maps},
      {2, "pullback identities (exact)", 5, pullbacks},
      {3, "irreducibility certificates and character norms", 10, certificates},
      {4, "inert-prime exactness, pmax=200 (zero tolerance)", 60, inert_exactness},
      {5, "split-prime feasibility, pmax=200", 60, split_feasibility},
      {6, "exact trace identities, pmax=100", 60, exact_identities},
      {7, "j-invariants (exact)", 5, j_invariants},
      {8, "Hodge tables (exact integers)", 1, hodge_tables},
      {9, "product/quotient bookkeeping", 1, bookkeeping},
      {10, "property suites (>= 100 cases each)", 60, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Ledger L;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(L);
    } catch (const std::exception& e) {
      L.problems.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) L.problems.push_back("runtime over " + std::to_string(c.limit_seconds) + " s");
    bool ok = L.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %2d %s: %zu checks, %.2f s (limit %.0f s)\n", ok ? "PASS" : "FAIL", c.number, c.name,
                L.checked, secs, c.limit_seconds);
    for (std::size_t i = 0; i < L.problems.size() && i < 10; ++i) std::printf("       %s\n", L.problems[i].c_str());
  }
  std::printf("acceptance: %zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
