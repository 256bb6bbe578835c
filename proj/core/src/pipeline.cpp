#include "rhomax/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "rhomax/elliptic.hpp"

namespace rhomax::pipeline {

namespace {

using sym::MPoly;
using sym::RationalFunction;

std::string join(const std::vector<std::int64_t>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

}  // namespace

Feasibility feasible_sum(std::int64_t a, const std::vector<std::pair<std::set<std::int64_t>, unsigned>>& sets) {
  std::vector<const std::set<std::int64_t>*> layers;
  for (const auto& [s, m] : sets)
    for (unsigned i = 0; i < m; ++i) layers.push_back(&s);

  // choice[i][sum] = value taken from layer i to reach sum after i+1 layers
  std::vector<std::map<std::int64_t, std::int64_t>> choice(layers.size());
  std::set<std::int64_t> reach{0};
  for (std::size_t i = 0; i < layers.size(); ++i) {
    std::set<std::int64_t> next;
    for (std::int64_t s : reach)
      for (std::int64_t v : *layers[i]) {
        auto [it, fresh] = choice[i].emplace(s + v, v);
        (void)it;
        if (fresh) next.insert(s + v);
      }
    reach = std::move(next);
  }
  Feasibility out;
  if (!reach.count(a)) return out;
  out.feasible = true;
  std::int64_t s = a;
  for (std::size_t i = layers.size(); i-- > 0;) {
    std::int64_t v = choice[i].at(s);
    out.witness.push_back(v);
    s -= v;
  }
  std::reverse(out.witness.begin(), out.witness.end());
  return out;
}

Feasibility trace_feasibility(std::int64_t a, const std::vector<std::pair<std::int64_t, unsigned>>& factors,
                              std::uint64_t p) {
  std::vector<std::pair<std::set<std::int64_t>, unsigned>> sets;
  for (const auto& [D, m] : factors) sets.emplace_back(elliptic::cm_trace_candidates(D, p), m);
  return feasible_sum(a, sets);
}

namespace {

using catalog::Entry;
using catalog::MapDecl;

std::string describe_form(const morph::AffineCurve& c, const std::vector<sym::TowerElement>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + v[i].to_string() + ")*" + c.basis_labels()[i];
  }
  return out.empty() ? "0" : out;
}

template <class F>
CheckResult guarded_check(const std::string& id, F&& f, std::optional<std::uint64_t> prime = std::nullopt) {
  try {
    return f();
  } catch (const std::exception& ex) {
    return make_check(id, false, std::string("error: ") + ex.what(), prime);
  }
}

CheckResult run_map(const Entry& e, const MapDecl& m) {
  auto res = guarded_check("map:" + m.name, [&]() -> CheckResult {
    return std::visit(
        [&](const auto& body) -> CheckResult {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, catalog::CurveMapDecl>) {
            if (!e.chart) throw DomainError("entry has no chart");
            return morph::verify_map(*e.chart, e.targets.at(body.target).curve, body.map);
          } else if constexpr (std::is_same_v<T, catalog::ImageMapDecl>) {
            return morph::verify_image_relations(body.source, body.source_vars, body.components, body.target_vars,
                                                 body.relations);
          } else {
            return morph::verify_shioda_trick(body.factors, body.first_vars, body.second_vars, body.components,
                                              body.target_vars, body.G);
          }
        },
        m.body);
  });
  res.id = "map:" + m.name;
  res.evidence = "[" + m.origin + "] " + res.evidence;
  if (!m.expect_pass) {
    if (res.status == Status::Fail) {
      res.expected_failure = true;
    } else if (res.status == Status::Pass) {
      res.status = Status::Discrepancy;
      res.evidence = "expected to fail but passed: " + res.evidence;
    }
  }
  return res;
}

std::optional<CheckResult> run_pullback(const Entry& e, const MapDecl& m) {
  const auto* body = std::get_if<catalog::CurveMapDecl>(&m.body);
  if (!body || !e.chart || !e.chart->has_basis()) return std::nullopt;
  const auto& target = e.targets.at(body->target);
  if (!target.eta) return std::nullopt;
  return guarded_check("pullback:" + m.name, [&] {
    auto omega = morph::pullback(*e.chart, target.curve, body->map, *target.eta);
    auto coords = morph::try_classify(*e.chart, omega);
    if (!coords) return make_check("pullback:" + m.name, false, "pullback " + omega.to_string() + " not in span");
    return make_check("pullback:" + m.name, true, describe_form(*e.chart, *coords));
  });
}

void run_symmetry(const Entry& e, std::vector<CheckResult>& out) {
  if (!e.chart || e.automorphisms.empty()) return;
  std::vector<sym::KMatrix> closure;
  out.push_back(guarded_check("group", [&] {
    closure = morph::group_closure(morph::action_from_automorphisms(*e.chart, e.automorphisms));
    return make_check("group", true, "|G| = " + std::to_string(closure.size()));
  }));
  if (closure.empty() || e.summands.empty()) return;
  out.push_back(guarded_check("decomposition", [&] { return morph::verify_decomposition(closure, e.summands); }));
  if (e.certificate.empty()) return;

  out.push_back(guarded_check("certificate", [&] {
    std::vector<std::optional<morph::SummandMap>> maps;
    bool maps_ok = true;
    for (const auto& s : e.summands) {
      auto link = std::find_if(e.certificate.begin(), e.certificate.end(),
                               [&](const catalog::CertificateLink& l) { return l.summand == s.label; });
      if (link == e.certificate.end()) {
        maps.emplace_back(std::nullopt);
        continue;
      }
      const MapDecl* decl = e.find_map(link->map);
      const auto& body = std::get<catalog::CurveMapDecl>(decl->body);
      const auto& target = e.targets.at(body.target);
      if (!target.eta) throw DomainError("target " + target.name + " has no holomorphic form");
      maps_ok = maps_ok && decl->expect_pass;
      maps.emplace_back(morph::SummandMap{&target.curve, link->label, body.map, *target.eta});
    }
    auto cert = morph::lemma_irred_certificate(*e.chart, closure, e.summands, maps);
    std::ostringstream ev;
    std::size_t total = 0;
    for (const auto& w : cert.witnesses)
      ev << w.summand << " <- " << w.target << ": rank " << w.rank << "/" << w.dimension
         << (w.complete() ? "" : " incomplete") << (w.note.empty() ? "" : " (" + w.note + ")") << "; ";
    ev << "conclusion";
    for (const auto& [label, mult] : cert.conclusion) {
      ev << " " << label << "^" << mult;
      total += mult;
    }
    bool ok = cert.complete() && maps_ok;
    if (e.model) {
      unsigned g = curves::genus(*e.model);
      ev << ", genus " << g;
      ok = ok && total == g;
    }
    return make_check("certificate", ok, ev.str());
  }));
}

bool good_prime(const Entry& e, std::uint64_t p) {
  if (p == 2 || !exact::is_prime(p) || e.bad_primes.count(p)) return false;
  if (e.claim)
    for (const auto& f : e.claim->factors)
      if (f.disc && (-*f.disc) % static_cast<std::int64_t>(p) == 0) return false;
  return true;
}

std::vector<std::pair<std::int64_t, unsigned>> cm_factors(const catalog::Claim& c) {
  std::vector<std::pair<std::int64_t, unsigned>> out;
  for (const auto& f : c.factors) {
    if (!f.disc) return {};
    out.emplace_back(*f.disc, f.mult);
  }
  return out;
}

std::string suffix(unsigned k) { return k == 1 ? "" : "@k" + std::to_string(k); }

// sum m_i a(E_i) over F_{p^k}
std::int64_t factor_trace_sum(const Entry& e, std::uint64_t p, unsigned k, const RunOptions& opt,
                                             std::string& detail) {
  std::int64_t sum = 0;
  for (const auto& f : e.claim->factors) {
    const auto& model = *e.targets.at(*f.target).model;
    auto rec = k == 1 ? curves::count_points(model, p, opt.count) : curves::count_points_ext(model, p, k, opt.count);
    detail += (detail.empty() ? "" : ", ") + std::to_string(f.mult) + "*a(" + *f.target + ")=" +
              std::to_string(f.mult) + "*" + std::to_string(rec.a);
    sum += static_cast<std::int64_t>(f.mult) * rec.a;
  }
  return sum;
}

void run_prime(const Entry& e, std::uint64_t p, const RunOptions& opt, std::vector<CheckResult>& out) {
  const auto& model = *e.model;
  unsigned g = curves::genus(model);
  curves::CountRecord rec{};
  try {
    rec = curves::count_points(model, p, opt.count);
  } catch (const curves::BadReduction& ex) {
    out.push_back({"count", Status::Skipped, p, std::string("bad reduction: ") + ex.what(), false});
    return;
  } catch (const curves::UnresolvedConstants& ex) {
    out.push_back({"count", Status::Skipped, p, std::string("constants unresolved: ") + ex.what(), false});
    return;
  } catch (const curves::WorkCapExceeded& ex) {
    out.push_back({"count", Status::Skipped, p, std::string("work cap: ") + ex.what(), false});
    return;
  }
  std::string na = "N = " + std::to_string(rec.N) + ", a = " + std::to_string(rec.a);
  out.push_back(make_check("weil", curves::weil_bound_holds(rec, g), na + ", g = " + std::to_string(g), p));
  if (!e.claim) return;

  auto factors = cm_factors(*e.claim);
  std::optional<bool> feasible;
  if (factors.empty()) {
    out.push_back({"feasibility", Status::Skipped, p, "factor without CM discriminant", false});
  } else {
    auto fz = trace_feasibility(rec.a, factors, p);
    feasible = fz.feasible;
    bool inert = std::all_of(factors.begin(), factors.end(),
                             [&](const auto& f) { return exact::kronecker_symbol(f.first, p) == -1; });
    if (inert) {
      bool ok = rec.N == p + 1 && fz.feasible;
      out.push_back(make_check("inert", ok, na + ", p+1 = " + std::to_string(p + 1), p));
    }
    out.push_back(make_check("feasibility", fz.feasible,
                             na + (fz.feasible ? ", witness " + join(fz.witness, "+") : ", no decomposition"), p));
  }

  if (e.claim->exact) {
    out.push_back(guarded_check(
        "exact_trace",
        [&] {
          std::string detail;
          auto sum = factor_trace_sum(e, p, 1, opt, detail);
          auto r = make_check("exact_trace", sum == rec.a, "a = " + std::to_string(rec.a) + ", " + detail, p);
          if (r.passed() && feasible && !*feasible) {
            r.status = Status::Discrepancy;
            r.evidence += "; exact identity holds but feasibility failed";
          }
          return r;
        },
        p));
  }

  for (unsigned k = 2; k <= opt.depth && g <= 3; ++k) {
    try {
      auto rk = curves::count_points_ext(model, p, k, opt.count);
      out.push_back(make_check("weil" + suffix(k), curves::weil_bound_holds(rk, g),
                               "N = " + std::to_string(rk.N) + ", a = " + std::to_string(rk.a), p));
      if (e.claim->exact) {
        std::string detail;
        auto sum = factor_trace_sum(e, p, k, opt, detail);
        out.push_back(make_check("exact_trace" + suffix(k), sum == rk.a,
                                 "a = " + std::to_string(rk.a) + ", " + detail, p));
      }
    } catch (const curves::WorkCapExceeded& ex) {
      out.push_back({"weil" + suffix(k), Status::Skipped, p, std::string("work cap: ") + ex.what(), false});
    } catch (const std::exception& ex) {
      out.push_back({"weil" + suffix(k), Status::Skipped, p, std::string("not counted: ") + ex.what(), false});
    }
  }
}

void run_aux(const Entry& e, std::vector<CheckResult>& out) {
  for (const auto& [name, t] : e.targets) {
    if (!t.expected_j) continue;
    out.push_back(guarded_check("j:" + name, [&, &t = t, &name = name] {
      auto y2 = MPoly::variable(e.tower, t.curve.y()).pow(2);
      MPoly f = y2 - t.curve.relation();
      if (f.involves(t.curve.y())) throw DomainError("target is not of the form v^2 = f(u)");
      auto j = elliptic::j_from_binary_quartic(elliptic::BinaryQuartic::from_polynomial(f, t.curve.x()));
      RationalFunction expect(MPoly(e.tower, *t.expected_j));
      return make_check("j:" + name, j.equals(expect), "j = " + j.to_string() + ", expected " + t.expected_j->get_str());
    }));
  }
  for (const auto& a : e.aux) {
    if (const auto* q = std::get_if<catalog::QuadricRankCheck>(&a)) {
      out.push_back(guarded_check("quadric_rank", [&] {
        unsigned r = curves::quadric_rank(q->quadric, q->vars);
        return make_check("quadric_rank", r == q->rank,
                          "rank " + std::to_string(r) + ", expected " + std::to_string(q->rank));
      }));
    } else if (const auto* ql = std::get_if<catalog::QuarticLegendreCheck>(&a)) {
      out.push_back(guarded_check("quartic_legendre", [&] {
        auto jq = elliptic::j_from_binary_quartic(elliptic::BinaryQuartic::from_polynomial(ql->quartic, ql->var));
        auto jl = elliptic::j_from_legendre(ql->lambda);
        return make_check("quartic_legendre", jq.equals(jl), "j = " + jq.to_string());
      }));
    }
  }
}

}  // namespace

std::vector<CheckResult> run_symbolic(const catalog::Entry& e) {
  std::vector<CheckResult> out;
  for (const auto& m : e.maps) {
    out.push_back(run_map(e, m));
    if (out.back().passed())
      if (auto pb = run_pullback(e, m)) out.push_back(std::move(*pb));
  }
  run_symmetry(e, out);
  run_aux(e, out);
  return out;
}

EntryReport run_entry(const catalog::Entry& e, const RunOptions& opt) {
  EntryReport rep{e.id, run_symbolic(e)};
  auto& out = rep.checks;
  if (e.model)
    for (std::uint64_t p = 3; p <= opt.pmax; p += 2)
      if (good_prime(e, p)) run_prime(e, p, opt, out);
  return rep;
}

std::vector<EntryReport> run_entries(const std::vector<const catalog::Entry*>& entries, const RunOptions& opt,
                                     unsigned threads) {
  std::vector<EntryReport> out(entries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, entries.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < entries.size();) out[i] = run_entry(*entries[i], opt);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace rhomax::pipeline
