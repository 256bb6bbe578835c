#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rhomax/hodge.hpp"
#include "rhomax/report.hpp"

using namespace rhomax;

namespace {

struct Common {
  std::string catalog;
  unsigned threads = 0;
};

struct RunArgs {
  std::uint64_t pmax = 200;
  unsigned depth = 1;
  std::string format = "md";
  std::string out;
};

void add_run_options(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("--pmax", a.pmax, "largest prime tested")->check(CLI::Range(3, 100000));
  cmd->add_option("--depth", a.depth, "largest extension degree counted")->check(CLI::Range(1, 3));
  cmd->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--out", a.out, "write the report here instead of stdout");
}

void write(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::vector<catalog::Entry> load(const Common& c) {
  return catalog::load_catalog_file(c.catalog.empty() ? catalog::default_catalog_path() : c.catalog);
}

int finish(const std::vector<report::EntryReport>& reports, const RunArgs& a) {
  write(report::emit(reports, a.format == "json" ? report::Format::Json : report::Format::Markdown), a.out);
  return report::has_unexpected_failure(reports) ? 1 : 0;
}

pipeline::RunOptions run_options(const RunArgs& a) {
  pipeline::RunOptions o;
  o.pmax = a.pmax;
  o.depth = a.depth;
  return o;
}

int verify(const Common& c, const RunArgs& a, const std::vector<std::string>& ids) {
  auto entries = load(c);
  std::vector<const catalog::Entry*> chosen;
  if (ids.empty())
    for (const auto& e : entries) chosen.push_back(&e);
  for (const auto& id : ids) chosen.push_back(&catalog::find_entry(entries, id));
  return finish(pipeline::run_entries(chosen, run_options(a), c.threads), a);
}

int report_all(const Common& c, const RunArgs& a) {
  auto entries = load(c);
  std::vector<const catalog::Entry*> chosen;
  for (const auto& e : entries) chosen.push_back(&e);
  auto reports = pipeline::run_entries(chosen, run_options(a), c.threads);
  for (unsigned d : {3u, 4u})
    for (unsigned n : {2u, 4u, 6u}) reports.push_back(report::hodge_report(d, n));
  return finish(reports, a);
}

int count(const Common& c, const std::string& id, std::uint64_t p, unsigned k) {
  auto entries = load(c);
  const auto& e = catalog::find_entry(entries, id);
  if (!e.model) throw DomainError(id + " has no counting model");
  auto rec = k == 1 ? curves::count_points(*e.model, p) : curves::count_points_ext(*e.model, p, k);
  unsigned g = curves::genus(*e.model);
  std::cout << id << " p=" << p << " k=" << k << " N=" << rec.N << " a=" << rec.a << " g=" << g
            << " weil=" << (curves::weil_bound_holds(rec, g) ? "ok" : "violated") << "\n";
  return 0;
}

int hodge_table(unsigned d, unsigned n, unsigned nmax, const std::string& format) {
  if (nmax < n) nmax = n;
  std::vector<report::EntryReport> reports;
  for (unsigned m = n; m <= nmax; m += 2) reports.push_back(report::hodge_report(d, m));
  if (format == "json") {
    std::cout << report::emit_json(reports);
  } else {
    std::cout << "| d | n | primitive | h^{nu,nu} | printed | adjusted | maximality |\n|---|---|---|---|---|---|---|\n";
    for (unsigned m = n; m <= nmax; m += 2) {
      auto h = hodge::middle_hodge(d, m);
      std::cout << "| " << d << " | " << m << " | " << h.primitive << " | " << h.total << " | "
                << hodge::shioda_rank(d, m, hodge::Reading::Printed) << " | "
                << hodge::shioda_rank(d, m, hodge::Reading::Adjusted) << " | "
                << to_string(hodge::maximality_report(d, m).status) << " |\n";
    }
  }
  return report::has_unexpected_failure(reports) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suite for Fermat-type curves and their CM isogeny factors"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--catalog", common.catalog, "catalog JSON (default: shipped catalog)");
  app.add_option("--threads", common.threads, "worker threads (0: all cores)");

  RunArgs verify_args;
  std::vector<std::string> ids;
  auto* v = app.add_subcommand("verify", "run the catalog checks");
  v->add_option("--entry", ids, "entry id, repeatable (default: all)");
  add_run_options(v, verify_args);

  std::string count_id;
  std::uint64_t prime = 0;
  unsigned k = 1;
  auto* cnt = app.add_subcommand("count", "count points of an entry's model");
  cnt->add_option("--entry", count_id, "entry id")->required();
  cnt->add_option("--prime", prime, "odd prime")->required();
  cnt->add_option("--k", k, "extension degree")->check(CLI::Range(1, 3));

  unsigned d = 3, n = 2, nmax = 0;
  std::string hodge_format = "md";
  auto* h = app.add_subcommand("hodge", "Fermat hypersurface Hodge numbers and Shioda ranks");
  h->add_option("--d", d, "degree")->required()->check(CLI::IsMember({3u, 4u}));
  h->add_option("--n", n, "even dimension")->required();
  h->add_option("--nmax", nmax, "tabulate n, n+2, ..., nmax");
  h->add_option("--format", hodge_format, "output format")->check(CLI::IsMember({"json", "md"}));

  RunArgs report_args;
  bool all = false;
  auto* r = app.add_subcommand("report", "full report: every entry plus the Hodge grid");
  r->add_flag("--all", all, "include every catalog entry")->required();
  add_run_options(r, report_args);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*v) return verify(common, verify_args, ids);
    if (*cnt) return count(common, count_id, prime, k);
    if (*h) return hodge_table(d, n, nmax, hodge_format);
    if (*r) return report_all(common, report_args);
  } catch (const std::exception& e) {
    std::cerr << "rhomax: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
