#include "rhomax/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rhomax/parser.hpp"

namespace rhomax::catalog {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& loc, const std::string& what) { throw CatalogError(loc + ": " + what); }

const json& req(const json& j, const std::string& key, const std::string& loc) {
  if (!j.is_object()) fail(loc, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(loc, "missing '" + key + "'");
  return *it;
}

const json* opt(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

std::string str(const json& j, const std::string& loc) {
  if (!j.is_string()) fail(loc, "expected a string");
  return j.get<std::string>();
}

const json& arr(const json& j, const std::string& loc) {
  if (!j.is_array()) fail(loc, "expected an array");
  return j;
}

bool is_count(const json& j) { return j.is_number_integer() && j.get<std::int64_t>() >= 0; }

std::string at(const std::string& loc, const std::string& key) { return loc + "." + key; }
std::string at(const std::string& loc, std::size_t i) { return loc + "[" + std::to_string(i) + "]"; }

// Parsing context of one expanded entry: its tower and parameter values.
struct Context {
  sym::TowerPtr tower;
  std::map<VarId, BigRational> params;
  std::string key;  // "t=0" style, empty without parameters

  MPoly poly(const json& j, const std::string& loc) const {
    const std::string text = str(j, loc);
    try {
      MPoly p = sym::parse_polynomial(text, tower);
      if (params.empty()) return p;
      std::map<VarId, MPoly> images;
      for (const auto& [v, q] : params) images.emplace(v, MPoly(tower, q));
      return p.substitute(images);
    } catch (const sym::ParseError& e) {
      fail(loc, "cannot parse '" + text + "': " + e.what());
    } catch (const DomainError& e) {
      fail(loc, "'" + text + "': " + e.what());
    }
  }

  RationalFunction rf(const json& j, const std::string& loc) const {
    const std::string text = str(j, loc);
    try {
      RationalFunction r = sym::parse_rational_function(text, tower);
      if (params.empty()) return r;
      std::map<VarId, RationalFunction> images;
      for (const auto& [v, q] : params) images.emplace(v, RationalFunction(MPoly(tower, q)));
      return r.compose(images);
    } catch (const sym::ParseError& e) {
      fail(loc, "cannot parse '" + text + "': " + e.what());
    } catch (const DomainError& e) {
      fail(loc, "'" + text + "': " + e.what());
    }
  }

  std::vector<MPoly> polys(const json& j, const std::string& loc) const {
    std::vector<MPoly> out;
    for (std::size_t i = 0; i < arr(j, loc).size(); ++i) out.push_back(poly(j[i], at(loc, i)));
    return out;
  }

  // Value chosen per parameter instance: either a plain value or an object
  // keyed by the instance key.
  const json* select(const json& j) const {
    if (!j.is_object()) return &j;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
  }
};

VarId var(const json& j, const std::string& loc) { return sym::var_id(str(j, loc)); }

std::vector<VarId> vars(const json& j, const std::string& loc) {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < arr(j, loc).size(); ++i) out.push_back(var(j[i], at(loc, i)));
  return out;
}

std::vector<VarId> vars_n(const json& j, std::size_t n, const std::string& loc) {
  auto v = vars(j, loc);
  if (v.size() != n) fail(loc, "expected " + std::to_string(n) + " variable names");
  return v;
}

}  // namespace

namespace {

template <class F>
auto guarded(const std::string& loc, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const CatalogError&) {
    throw;
  } catch (const DomainError& e) {
    fail(loc, e.what());
  } catch (const sym::ParseError& e) {
    fail(loc, e.what());
  }
}

curves::CurveModel parse_model(const json& j, const Context& cx, const std::string& loc) {
  const std::string kind = str(req(j, "kind", loc), at(loc, "kind"));
  return guarded(loc, [&]() -> curves::CurveModel {
    if (kind == "plane") {
      auto v = vars_n(req(j, "vars", loc), 3, at(loc, "vars"));
      return curves::PlaneCurve(cx.poly(req(j, "F", loc), at(loc, "F")), v[0], v[1], v[2]);
    }
    if (kind == "hyperelliptic") {
      auto v = vars_n(req(j, "vars", loc), 2, at(loc, "vars"));
      return curves::HyperellipticModel(cx.poly(req(j, "f", loc), at(loc, "f")), v[0], v[1]);
    }
    if (kind == "superelliptic") {
      auto v = vars_n(req(j, "vars", loc), 2, at(loc, "vars"));
      const json& m = req(j, "m", loc);
      if (!is_count(m)) fail(at(loc, "m"), "expected a positive integer");
      return curves::SuperellipticModel(m.get<unsigned>(), cx.poly(req(j, "f", loc), at(loc, "f")), v[0], v[1]);
    }
    if (kind == "space") {
      const json& g = req(j, "genus", loc);
      if (!is_count(g)) fail(at(loc, "genus"), "expected a non-negative integer");
      std::vector<VarId> base;
      if (const json* b = opt(j, "square_root_base")) base = vars(*b, at(loc, "square_root_base"));
      return curves::SpaceCurve(vars(req(j, "coords", loc), at(loc, "coords")),
                                cx.polys(req(j, "relations", loc), at(loc, "relations")), g.get<unsigned>(), base);
    }
    fail(at(loc, "kind"), "unknown model kind '" + kind + "'");
  });
}

sym::RelationSet parse_relations(const json& j, const Context& cx, const std::string& loc) {
  auto rels = cx.polys(req(j, "relations", loc), at(loc, "relations"));
  auto solve = vars_n(req(j, "solve_for", loc), rels.size(), at(loc, "solve_for"));
  return guarded(loc, [&] {
    std::vector<sym::CurveRelation> out;
    for (std::size_t i = 0; i < rels.size(); ++i) out.emplace_back(rels[i], solve[i]);
    return sym::RelationSet(std::move(out));
  });
}

morph::AffineCurve parse_chart(const json& j, const Context& cx, const std::string& loc) {
  auto v = vars_n(req(j, "vars", loc), 2, at(loc, "vars"));
  const std::string basis = opt(j, "basis") ? str(j["basis"], at(loc, "basis")) : "none";
  return guarded(loc, [&] {
    if (basis == "hyperelliptic") return morph::AffineCurve::hyperelliptic(cx.poly(req(j, "f", loc), at(loc, "f")), v[0], v[1]);
    MPoly F = cx.poly(req(j, "relation", loc), at(loc, "relation"));
    if (basis == "plane") return morph::AffineCurve::plane(F, v[0], v[1]);
    if (basis == "none") return morph::AffineCurve::bare(F, v[0], v[1]);
    fail(at(loc, "basis"), "unknown basis '" + basis + "'");
  });
}

TargetCurve parse_target(const std::string& name, const json& j, const Context& cx, const std::string& loc) {
  TargetCurve t{name, parse_chart(j, cx, loc), std::nullopt, std::nullopt, std::nullopt};
  if (const json* e = opt(j, "eta")) t.eta = cx.rf(*e, at(loc, "eta"));
  if (const json* m = opt(j, "model")) t.model = parse_model(*m, cx, at(loc, "model"));
  const json* jj = opt(j, "j");
  if (jj) jj = cx.select(*jj);
  if (jj) {
    try {
      t.expected_j = exact::parse_rational(str(*jj, at(loc, "j")));
    } catch (const std::exception& e) {
      fail(at(loc, "j"), e.what());
    }
  }
  return t;
}

}  // namespace

namespace {

MapDecl parse_map(const json& j, const Context& cx, const Entry& e, const std::string& loc) {
  const std::string name = str(req(j, "name", loc), at(loc, "name"));
  std::string origin = "printed";
  if (const json* o = opt(j, "origin")) {
    origin = str(*o, at(loc, "origin"));
    if (origin != "printed" && origin != "derived") fail(at(loc, "origin"), "expected 'printed' or 'derived'");
  }
  bool expect_pass = true;
  if (const json* x = opt(j, "expect")) {
    const std::string s = str(*x, at(loc, "expect"));
    if (s != "pass" && s != "fail") fail(at(loc, "expect"), "expected 'pass' or 'fail'");
    expect_pass = s == "pass";
  }
  const std::string kind = opt(j, "kind") ? str(j["kind"], at(loc, "kind")) : "curve";
  const json& comps = arr(req(j, "components", loc), at(loc, "components"));
  if (kind == "curve") {
    if (!e.chart) fail(loc, "curve map declared without a chart");
    const std::string target = str(req(j, "target", loc), at(loc, "target"));
    if (!e.targets.count(target)) fail(at(loc, "target"), "unknown target '" + target + "'");
    if (comps.size() != 2) fail(at(loc, "components"), "expected two components");
    return {name, origin, expect_pass,
            CurveMapDecl{target, {cx.rf(comps[0], at(at(loc, "components"), 0)), cx.rf(comps[1], at(at(loc, "components"), 1))}}};
  }
  if (kind == "image") {
    const json& src = req(j, "source", loc);
    ImageMapDecl d{parse_relations(src, cx, at(loc, "source")), vars(req(src, "vars", loc), at(loc, "source.vars")),
                   cx.polys(comps, at(loc, "components")),
                   vars_n(req(j, "target_vars", loc), comps.size(), at(loc, "target_vars")),
                   cx.polys(req(j, "relations", loc), at(loc, "relations"))};
    return {name, origin, expect_pass, std::move(d)};
  }
  if (kind == "shioda") {
    const json& fs = arr(req(j, "factors", loc), at(loc, "factors"));
    if (fs.size() != 2) fail(at(loc, "factors"), "expected two factors");
    std::vector<sym::CurveRelation> rels;
    std::vector<std::vector<VarId>> vs;
    for (std::size_t i = 0; i < 2; ++i) {
      auto l = at(at(loc, "factors"), i);
      auto r = parse_relations(fs[i], cx, l);
      for (const auto& c : r.relations()) rels.push_back(c);
      vs.push_back(vars(req(fs[i], "vars", l), at(l, "vars")));
    }
    ShiodaDecl d{guarded(loc, [&] { return sym::RelationSet(rels); }), vs[0], vs[1], cx.polys(comps, at(loc, "components")),
                 vars_n(req(j, "target_vars", loc), comps.size(), at(loc, "target_vars")),
                 cx.poly(req(j, "G", loc), at(loc, "G"))};
    return {name, origin, expect_pass, std::move(d)};
  }
  fail(at(loc, "kind"), "unknown map kind '" + kind + "'");
}

std::vector<TowerElement> parse_vector(const json& j, const Context& cx, std::size_t n, const std::string& loc) {
  if (!j.is_array() || j.size() != n) fail(loc, "expected a vector of length " + std::to_string(n));
  std::vector<TowerElement> v;
  for (std::size_t i = 0; i < n; ++i) {
    MPoly p = cx.poly(j[i], at(loc, i));
    if (!p.is_constant()) fail(at(loc, i), "expected a constant");
    v.push_back(p.is_zero() ? cx.tower->zero() : p.constant_value());
  }
  return v;
}

morph::IsotypicSummand parse_summand(const json& j, const Context& cx, const morph::AffineCurve& chart,
                                     const std::string& loc) {
  morph::IsotypicSummand s{str(req(j, "label", loc), at(loc, "label")), {}};
  const std::size_t n = chart.dimension();
  if (const json* ls = opt(j, "labels")) {
    const auto& names = chart.basis_labels();
    for (std::size_t i = 0; i < arr(*ls, at(loc, "labels")).size(); ++i) {
      const std::string l = str((*ls)[i], at(at(loc, "labels"), i));
      auto it = std::find(names.begin(), names.end(), l);
      if (it == names.end()) fail(at(at(loc, "labels"), i), "unknown basis label '" + l + "'");
      std::vector<TowerElement> v(n, cx.tower->zero());
      v[static_cast<std::size_t>(it - names.begin())] = cx.tower->one();
      s.basis.push_back(std::move(v));
    }
  }
  if (const json* vs = opt(j, "vectors"))
    for (std::size_t i = 0; i < arr(*vs, at(loc, "vectors")).size(); ++i)
      s.basis.push_back(parse_vector((*vs)[i], cx, n, at(at(loc, "vectors"), i)));
  if (s.basis.empty()) fail(loc, "summand has no basis");
  return s;
}

Claim parse_claim(const json& j, const Context& cx, const Entry& e, const std::string& loc) {
  Claim c;
  if (const json* x = opt(j, "exact")) {
    if (!x->is_boolean()) fail(at(loc, "exact"), "expected a boolean");
    c.exact = x->get<bool>();
  }
  const json& fs = arr(req(j, "factors", loc), at(loc, "factors"));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto l = at(at(loc, "factors"), i);
    Factor f;
    if (const json* d = opt(fs[i], "disc")) {
      if (const json* v = cx.select(*d)) {
        if (!v->is_number_integer()) fail(at(l, "disc"), "expected an integer");
        f.disc = v->get<std::int64_t>();
        const auto r = ((*f.disc % 4) + 4) % 4;
        if (*f.disc >= 0 || (r != 0 && r != 1))
          fail(at(l, "disc"), "not a negative discriminant");
      }
    }
    const json& m = req(fs[i], "mult", l);
    if (!is_count(m) || m.get<unsigned>() == 0) fail(at(l, "mult"), "expected a positive integer");
    f.mult = m.get<unsigned>();
    if (const json* t = opt(fs[i], "target")) {
      f.target = str(*t, at(l, "target"));
      if (!e.targets.count(*f.target)) fail(at(l, "target"), "unknown target '" + *f.target + "'");
    }
    c.factors.push_back(f);
  }
  if (c.exact)
    for (std::size_t i = 0; i < c.factors.size(); ++i)
      if (!c.factors[i].target || !e.targets.at(*c.factors[i].target).model)
        fail(at(at(loc, "factors"), i), "exact claims need a target with a counting model");
  return c;
}

AuxCheck parse_aux(const json& j, const Context& cx, const std::string& loc) {
  const std::string kind = str(req(j, "kind", loc), at(loc, "kind"));
  if (kind == "quadric_rank") {
    const json& r = req(j, "rank", loc);
    if (!is_count(r)) fail(at(loc, "rank"), "expected a non-negative integer");
    return QuadricRankCheck{cx.poly(req(j, "quadric", loc), at(loc, "quadric")), vars(req(j, "vars", loc), at(loc, "vars")),
                            r.get<unsigned>()};
  }
  if (kind == "quartic_legendre") {
    // evaluated over Q(params): parameters stay symbolic
    Context generic{cx.tower, {}, cx.key};
    return QuarticLegendreCheck{generic.poly(req(j, "quartic", loc), at(loc, "quartic")), var(req(j, "var", loc), at(loc, "var")),
                                generic.rf(req(j, "lambda", loc), at(loc, "lambda"))};
  }
  fail(at(loc, "kind"), "unknown check kind '" + kind + "'");
}

}  // namespace

namespace {

sym::TowerPtr parse_tower(const json& j, sym::TowerPtr base, const std::string& loc) {
  for (std::size_t i = 0; i < arr(j, loc).size(); ++i) {
    const auto l = at(loc, i);
    const std::string sym = str(req(j[i], "symbol", l), at(l, "symbol"));
    const std::string rel = str(req(j[i], "relation", l), at(l, "relation"));
    std::optional<std::string> conj;
    if (const json* c = opt(j[i], "conjugate")) conj = str(*c, at(l, "conjugate"));
    base = guarded(l, [&] { return base->extended(sym, rel, conj); });
  }
  return base;
}

std::set<std::uint64_t> parse_primes(const json& j, const std::string& loc) {
  std::set<std::uint64_t> out;
  for (std::size_t i = 0; i < arr(j, loc).size(); ++i) {
    if (!is_count(j[i])) fail(at(loc, i), "expected a prime");
    const auto p = j[i].get<std::uint64_t>();
    if (!exact::is_prime(p)) fail(at(loc, i), std::to_string(p) + " is not prime");
    out.insert(p);
  }
  return out;
}

Entry parse_instance(const json& j, const std::string& family, const Context& cx, const std::string& loc) {
  Entry e;
  e.family = family;
  e.id = cx.key.empty() ? family : family + "[" + cx.key + "]";
  e.tower = cx.tower;
  for (const auto& [v, q] : cx.params) e.params.emplace(sym::var_name(v), q);
  if (const json* m = opt(j, "model")) e.model = parse_model(*m, cx, at(loc, "model"));
  if (const json* c = opt(j, "chart")) e.chart = parse_chart(*c, cx, at(loc, "chart"));
  if (const json* ts = opt(j, "targets")) {
    if (!ts->is_object()) fail(at(loc, "targets"), "expected an object");
    for (const auto& [name, t] : ts->items()) e.targets.emplace(name, parse_target(name, t, cx, at(at(loc, "targets"), name)));
  }
  if (const json* ms = opt(j, "maps"))
    for (std::size_t i = 0; i < arr(*ms, at(loc, "maps")).size(); ++i) {
      e.maps.push_back(parse_map((*ms)[i], cx, e, at(at(loc, "maps"), i)));
      for (std::size_t k = 0; k + 1 < e.maps.size(); ++k)
        if (e.maps[k].name == e.maps.back().name) fail(at(at(loc, "maps"), i), "duplicate map name");
    }
  if (const json* a = opt(j, "action")) {
    const auto l = at(loc, "action");
    if (!e.chart || !e.chart->has_basis()) fail(l, "a group action needs a chart with a holomorphic basis");
    const json& gens = arr(req(*a, "automorphisms", l), at(l, "automorphisms"));
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto gl = at(at(l, "automorphisms"), i);
      if (!gens[i].is_array() || gens[i].size() != 2) fail(gl, "expected two components");
      e.automorphisms.push_back({cx.rf(gens[i][0], at(gl, 0)), cx.rf(gens[i][1], at(gl, 1))});
    }
  }
  if (const json* ss = opt(j, "summands")) {
    if (!e.chart || !e.chart->has_basis()) fail(at(loc, "summands"), "summands need a chart with a holomorphic basis");
    for (std::size_t i = 0; i < arr(*ss, at(loc, "summands")).size(); ++i)
      e.summands.push_back(parse_summand((*ss)[i], cx, *e.chart, at(at(loc, "summands"), i)));
  }
  if (const json* cs = opt(j, "certificate"))
    for (std::size_t i = 0; i < arr(*cs, at(loc, "certificate")).size(); ++i) {
      const auto l = at(at(loc, "certificate"), i);
      CertificateLink c{str(req((*cs)[i], "summand", l), at(l, "summand")), str(req((*cs)[i], "map", l), at(l, "map")),
                        str(req((*cs)[i], "label", l), at(l, "label"))};
      auto s = std::find_if(e.summands.begin(), e.summands.end(), [&](const auto& x) { return x.label == c.summand; });
      if (s == e.summands.end()) fail(at(l, "summand"), "unknown summand '" + c.summand + "'");
      const MapDecl* m = e.find_map(c.map);
      if (!m || !std::holds_alternative<CurveMapDecl>(m->body)) fail(at(l, "map"), "unknown curve map '" + c.map + "'");
      if (!e.targets.at(std::get<CurveMapDecl>(m->body).target).eta)
        fail(at(l, "map"), "target of '" + c.map + "' declares no differential");
      e.certificate.push_back(std::move(c));
    }
  if (const json* c = opt(j, "claim")) {
    if (!e.model) fail(at(loc, "claim"), "a claim needs a model");
    e.claim = parse_claim(*c, cx, e, at(loc, "claim"));
    unsigned total = 0;
    for (const auto& f : e.claim->factors) total += f.mult;
    const unsigned g = curves::genus(*e.model);
    if (total != g)
      fail(at(loc, "claim"), "multiplicities sum to " + std::to_string(total) + " but the genus is " + std::to_string(g));
  }
  if (const json* b = opt(j, "bad_primes")) {
    if (const json* sel = cx.select(*b)) e.bad_primes = parse_primes(*sel, at(loc, "bad_primes"));
  }
  if (e.model && e.bad_primes.empty()) fail(at(loc, "bad_primes"), "a counted model needs its bad primes");
  if (const json* as = opt(j, "checks"))
    for (std::size_t i = 0; i < arr(*as, at(loc, "checks")).size(); ++i)
      e.aux.push_back(parse_aux((*as)[i], cx, at(at(loc, "checks"), i)));
  return e;
}

}  // namespace

const MapDecl* Entry::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

std::vector<Entry> load_catalog(const json& doc) {
  std::vector<Entry> out;
  if (doc.is_null() || (doc.is_object() && doc.empty())) return out;
  if (!doc.is_object()) fail("$", "expected an object");
  sym::TowerPtr base = sym::Tower::rational();
  if (const json* t = opt(doc, "tower")) base = parse_tower(*t, base, "$.tower");
  const json* entries = opt(doc, "entries");
  if (!entries) return out;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < arr(*entries, "$.entries").size(); ++i) {
    const json& j = (*entries)[i];
    const auto loc = at(std::string("$.entries"), i);
    const std::string family = str(req(j, "id", loc), at(loc, "id"));
    sym::TowerPtr tower = base;
    if (const json* t = opt(j, "tower")) tower = parse_tower(*t, base, at(loc, "tower"));

    // cartesian product over the parameter lists
    std::vector<Context> instances{{tower, {}, ""}};
    if (const json* ps = opt(j, "params")) {
      if (!ps->is_object()) fail(at(loc, "params"), "expected an object");
      for (const auto& [name, values] : ps->items()) {
        const auto pl = at(at(loc, "params"), name);
        if (tower->has_symbol(name)) fail(pl, "parameter shadows a constant symbol");
        std::vector<Context> next;
        for (const auto& base_cx : instances)
          for (std::size_t k = 0; k < arr(values, pl).size(); ++k) {
            const std::string text = str(values[k], at(pl, k));
            BigRational q;
            try {
              q = exact::parse_rational(text);
            } catch (const std::exception& ex) {
              fail(at(pl, k), ex.what());
            }
            Context c = base_cx;
            c.params.emplace(sym::var_id(name), q);
            c.key += (c.key.empty() ? "" : ",") + name + "=" + text;
            next.push_back(std::move(c));
          }
        instances = std::move(next);
      }
    }
    for (const auto& cx : instances) {
      Entry e = parse_instance(j, family, cx, loc);
      if (!ids.insert(e.id).second) fail(loc, "duplicate entry id '" + e.id + "'");
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Entry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CatalogError(path + ": " + e.what());
  }
  return load_catalog(doc);
}

std::string default_catalog_path() {
  if (const char* env = std::getenv("RHOMAX_CATALOG")) return env;
  for (const char* p : {RHOMAX_SOURCE_CATALOG, RHOMAX_INSTALL_CATALOG})
    if (std::ifstream(p).good()) return p;
  return "data/catalog.json";
}

const Entry& find_entry(const std::vector<Entry>& entries, const std::string& id) {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw CatalogError("no catalog entry '" + id + "'");
}

}  // namespace rhomax::catalog
