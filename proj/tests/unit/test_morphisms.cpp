#include <doctest.h>

#include <random>

#include "rhomax/group.hpp"
#include "rhomax/modp.hpp"
#include "rhomax/parser.hpp"

using namespace rhomax;
using namespace rhomax::morph;
using sym::parse_polynomial;
using sym::parse_rational_function;
using sym::Tower;
using sym::var_id;

namespace {

TowerPtr tower_w() { return Tower::rational()->extended("w", "w^2+w+1", "-1-w"); }
TowerPtr tower_wc() { return tower_w()->extended("c", "c^3-2", "c"); }
TowerPtr tower_wl() { return tower_w()->extended("l", "l^2-(2*w+1)/3"); }

MPoly P(const std::string& s, const TowerPtr& t) { return parse_polynomial(s, t); }
RationalFunction R(const std::string& s, const TowerPtr& t) { return parse_rational_function(s, t); }
CurveMap M(const std::string& u, const std::string& v, const TowerPtr& t) { return {R(u, t), R(v, t)}; }

std::size_t label_index(const AffineCurve& c, const std::string& label) {
  const auto& ls = c.basis_labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return i;
  FAIL("unknown label " << label);
  return 0;
}

std::vector<TowerElement> unit(const AffineCurve& c, const std::string& label) {
  std::vector<TowerElement> v(c.dimension(), c.tower()->zero());
  v[label_index(c, label)] = c.tower()->one();
  return v;
}

IsotypicSummand span(const AffineCurve& c, const std::string& name, const std::vector<std::string>& labels) {
  IsotypicSummand s{name, {}};
  for (const auto& l : labels) s.basis.push_back(unit(c, l));
  return s;
}

struct C6 {
  TowerPtr t = tower_wc();
  VarId x = var_id("x"), y = var_id("y");
  AffineCurve curve = AffineCurve::plane(P("x^6+y^6+1", t), x, y);
  AffineCurve E = AffineCurve::bare(P("v^2-u^3+1", t), var_id("u"), var_id("v"));
  AffineCurve cubic = AffineCurve::bare(P("xi^3+eta^3+1", t), var_id("xi"), var_id("eta"));
  CurveMap f = M("-x^2", "y^3", t);
  CurveMap g = M("c/2*y^4/x^2", "(x^3-1/x^3)/2", t);
  CurveMap h = M("x^2", "y^2", t);
  std::vector<CurveMap> autos{M("(1+w)*x", "y", t), M("x", "(1+w)*y", t), M("y", "x", t), M("x/y", "1/y", t)};
  std::vector<IsotypicSummand> summands() const {
    return {span(curve, "V300", {"X^3*Y^0*Z^0", "X^0*Y^3*Z^0", "X^0*Y^0*Z^3"}),
            span(curve, "V210",
                 {"X^2*Y^1*Z^0", "X^2*Y^0*Z^1", "X^1*Y^2*Z^0", "X^0*Y^2*Z^1", "X^1*Y^0*Z^2", "X^0*Y^1*Z^2"}),
            span(curve, "V111", {"X^1*Y^1*Z^1"})};
  }
};

const C6& c6() {
  static const C6 c;
  return c;
}

struct Ex1 {
  TowerPtr t = tower_w();
  VarId x = var_id("x"), y = var_id("y");
  AffineCurve curve = AffineCurve::hyperelliptic(P("x^6+t*x^3+1", t), x, y);
  AffineCurve E = AffineCurve::bare(P("v^2-(u+2)*(u^3-3*u+t)", t), var_id("u"), var_id("v"));
  CurveMap map = M("x+1/x", "y*(x+1)/x^2", t);
  std::vector<CurveMap> autos{M("w*x", "y", t), M("1/x", "y/x^3", t)};
};

const Ex1& ex1() {
  static const Ex1 e;
  return e;
}

}  // namespace

TEST_CASE("verify_map examples") {
  const auto& c = c6();
  auto r = verify_map(c.curve, c.E, c.f);
  CHECK(r.passed());
  CHECK(r.id == "map");
  CHECK(verify_map(c.curve, c.E, c.g).passed());
  CHECK(verify_map(c.curve, c.cubic, c.h).passed());
  CHECK(verify_map(ex1().curve, ex1().E, ex1().map).passed());

  auto t = tower_w();
  auto H = AffineCurve::hyperelliptic(P("x*(x^6+1)", t), var_id("x"), var_id("y"));
  auto E = AffineCurve::bare(P("v^2-u^3-u", t), var_id("u"), var_id("v"));
  auto f = M("x^2", "x*y", t);
  auto bad = verify_map(H, E, f);
  CHECK_FALSE(bad.passed());
  CHECK(map_residual(H, E, f) == P("x^3*(x^6+1)-x^2*(x^4+1)", t));
  CHECK_THROWS_AS(pullback(H, E, f, R("1/v", t)), DomainError);
  CHECK_THROWS_AS(verify_map(H, E, M("x^2", "y/(y^2-x^7-x)", t)), sym::DegenerateInput);
}

TEST_CASE("pullback and classify examples") {
  const auto& c = c6();
  auto t = c.t;
  auto vf = classify(c.curve, pullback(c.curve, c.E, c.f, R("1/v", t)));
  auto expect = unit(c.curve, "X^1*Y^2*Z^0");
  for (auto& e : expect) e = e * t->from_rational(-2);
  CHECK(vf == expect);

  auto vg = classify(c.curve, pullback(c.curve, c.E, c.g, R("1/v", t)));
  expect = unit(c.curve, "X^0*Y^3*Z^0");
  for (auto& e : expect) e = e * t->symbol("c") * t->from_rational(-2);
  CHECK(vg == expect);
  CHECK(pullback(c.curve, c.E, c.g, R("1/v", t)).equals(R("-2*c/y^2", t)));

  auto vh = classify(c.curve, pullback(c.curve, c.cubic, c.h, R("1/eta^2", t)));
  expect = unit(c.curve, "X^1*Y^1*Z^1");
  for (auto& e : expect) e = e * t->from_rational(2);
  CHECK(vh == expect);

  CHECK(classify(c.curve, R("-2*x/y^3", t))[label_index(c.curve, "X^1*Y^2*Z^0")] == t->from_rational(-2));
  CHECK(classify(c.curve, R("1/y^2", t)) == unit(c.curve, "X^0*Y^3*Z^0"));
  for (std::size_t k = 0; k < c.curve.dimension(); ++k) {
    std::vector<TowerElement> e(c.curve.dimension(), t->zero());
    e[k] = t->one();
    CHECK(classify(c.curve, c.curve.basis_form(k)) == e);
  }
  CHECK_THROWS_AS(classify(c.curve, R("1", t)), NotHolomorphic);
  CHECK_FALSE(try_classify(c.curve, R("x^4/y^5", t)).has_value());

  auto tl = tower_wl();
  auto H = AffineCurve::hyperelliptic(P("x*(x^6+1)", tl), var_id("x"), var_id("y"));
  auto E = AffineCurve::bare(P("v^2-u^3-u", tl), var_id("u"), var_id("v"));
  auto g = M("l^2*(x+1/x)", "l^3*y/x^2", tl);
  REQUIRE(verify_map(H, E, g).passed());
  auto pg = pullback(H, E, g, R("1/v", tl));
  CHECK(pg.equals(R("(x^2-1)/(l*y)", tl)));
  auto li = tl->symbol("l").inverse();
  CHECK(classify(H, pg) == std::vector<TowerElement>{-li, tl->zero(), li});
}

TEST_CASE("image relations of the sextic quotients") {
  auto t = Tower::rational();
  std::vector<VarId> src{var_id("X"), var_id("Y"), var_id("Z")};
  std::vector<VarId> tgt{var_id("x"), var_id("y"), var_id("z"), var_id("t")};
  sym::RelationSet sextic({sym::CurveRelation(P("X^6+Y^6+Z^6", t), var_id("Z"))});
  std::vector<MPoly> alpha{P("X^2", t), P("X*Y", t), P("Y^2", t), P("Z^2", t)};
  CHECK(verify_image_relations(sextic, src, alpha, tgt, {P("x*z-y^2", t), P("x^3+z^3+t^3", t)}).passed());
  std::vector<MPoly> beta{P("(X+Y)^2", t), P("(X+Y)*Z", t), P("Z^2", t), P("X*Y", t)};
  CHECK(verify_image_relations(sextic, src, beta, tgt, {P("x*z-y^2", t), P("x*(x-3*t)^2+z^3-2*t^3", t)}).passed());
  std::vector<MPoly> delta{P("X^3+Y^3+Z^3", t), P("X*Y*Z", t), P("X^2*Y+Y^2*Z+Z^2*X", t), P("X*Y^2+Y*Z^2+Z*X^2", t)};
  CHECK(verify_image_relations(sextic, src, delta, tgt,
                               {P("(x+y)^2+5*y^2-2*z*t", t), P("x*y^2-x*z*t+3*y^3-4*y*z*t+z^3+t^3", t)})
            .passed());
  auto wrong = verify_image_relations(sextic, src, alpha, tgt, {P("x^3+z^3-t^3", t)});
  CHECK_FALSE(wrong.passed());
  CHECK(wrong.id == "image_relations");
  CHECK_THROWS_AS(verify_image_relations(sextic, src, {P("X^2", t), P("X", t), P("Y^2", t), P("Z^2", t)}, tgt, {}),
                  DomainError);
  CHECK_THROWS_AS(verify_image_relations(sextic, src, {P("X^2+Y", t), P("X*Y", t), P("Y^2", t), P("Z^2", t)}, tgt, {}),
                  DomainError);
}

TEST_CASE("group closure and character norms") {
  auto t = tower_w();
  auto w = t->symbol("w");
  sym::KMatrix psi(t, 2, 2), tau(t, 2, 2);
  psi(0, 0) = w;
  psi(1, 1) = w * w;
  tau(0, 1) = t->from_rational(-1);
  tau(1, 0) = t->from_rational(-1);
  auto g = group_closure({t, 2, {psi, tau}});
  CHECK(g.size() == 6);
  CHECK(g.front().is_identity());
  CHECK(character_norm(g) == 1);

  // generators derived from the automorphisms agree with the hand matrices
  auto derived = action_from_automorphisms(ex1().curve, ex1().autos);
  REQUIRE(derived.generators.size() == 2);
  CHECK(derived.generators[0] == psi);
  CHECK(derived.generators[1] == tau);

  auto q = Tower::rational();
  auto one = q->one(), zero = q->zero();
  sym::KMatrix rot(q, 3, 3), cyc(q, 3, 3);
  rot(0, 1) = -one;
  rot(1, 0) = one;
  rot(2, 2) = one;
  cyc(0, 2) = one;
  cyc(1, 0) = one;
  cyc(2, 1) = one;
  auto s4 = group_closure({q, 3, {rot, cyc}});
  CHECK(s4.size() == 24);
  CHECK(character_norm(s4) == 1);

  auto triv = group_closure({q, 2, {sym::KMatrix::identity(q, 2)}});
  CHECK(triv.size() == 1);
  CHECK(character_norm(triv) == 4);

  sym::KMatrix big(q, 1, 1);
  big(0, 0) = q->from_rational(2);
  CHECK_THROWS_AS(group_closure({q, 1, {big}}, 50), DomainError);
  CHECK_THROWS_AS(action_from_automorphisms(ex1().curve, {M("2*x", "y", t)}), DomainError);
}

TEST_CASE("verify_decomposition examples") {
  const auto& c = c6();
  auto G = group_closure(action_from_automorphisms(c.curve, c.autos));
  CHECK(G.size() == 216);
  auto r = verify_decomposition(G, c.summands());
  CHECK(r.passed());
  CHECK(r.evidence == "|G| = 216, dims (3,6,1), norms (1,1,1)");

  auto t = tower_w();
  auto H = AffineCurve::hyperelliptic(P("x*(x^6+1)", t), var_id("x"), var_id("y"));
  auto G4 = group_closure(action_from_automorphisms(H, {M("1/x", "-y/x^4", t), M("w*x", "w^2*y", t)}));
  auto ex4 = verify_decomposition(G4, {span(H, "A", {"x^0 dx/y", "x^2 dx/y"}), span(H, "B", {"x^1 dx/y"})});
  CHECK(ex4.passed());

  auto G1 = group_closure(action_from_automorphisms(ex1().curve, ex1().autos));
  auto split = verify_decomposition(G1, {span(ex1().curve, "a", {"x^0 dx/y"}), span(ex1().curve, "b", {"x^1 dx/y"})});
  CHECK_FALSE(split.passed());
  CHECK(split.evidence.find("not stable") != std::string::npos);
  CHECK_FALSE(verify_decomposition(G1, {span(ex1().curve, "a", {"x^0 dx/y"})}).passed());
  CHECK(verify_decomposition(G1, {span(ex1().curve, "all", {"x^0 dx/y", "x^1 dx/y"})}).passed());
  IsotypicSummand wrong{"w", {{t->one()}}};
  CHECK_THROWS_AS(verify_decomposition(G1, {wrong}), DomainError);
}

TEST_CASE("irreducibility certificate examples") {
  const auto& c = c6();
  auto G = group_closure(action_from_automorphisms(c.curve, c.autos));
  auto eta = R("1/v", c.t);
  std::vector<std::optional<SummandMap>> maps{SummandMap{&c.E, "E_omega", c.g, eta},
                                              SummandMap{&c.E, "E_omega", c.f, eta},
                                              SummandMap{&c.cubic, "E_omega", c.h, R("1/eta^2", c.t)}};
  auto cert = lemma_irred_certificate(c.curve, G, c.summands(), maps);
  CHECK(cert.complete());
  REQUIRE(cert.witnesses.size() == 3);
  CHECK(cert.witnesses[0].rank == 3);
  CHECK(cert.witnesses[1].rank == 6);
  CHECK(cert.witnesses[1].translates.size() == 6);
  CHECK(cert.witnesses[2].translates == std::vector<std::size_t>{0});
  CHECK(cert.conclusion == std::vector<std::pair<std::string, std::size_t>>{{"E_omega", 10}});

  // a map into the wrong summand is reported, not concluded
  std::vector<std::optional<SummandMap>> swapped{maps[1], maps[0], maps[2]};
  auto bad = lemma_irred_certificate(c.curve, G, c.summands(), swapped);
  CHECK_FALSE(bad.complete());
  CHECK_FALSE(bad.witnesses[0].contained);
  CHECK(bad.conclusion == std::vector<std::pair<std::string, std::size_t>>{{"E_omega", 1}});

  const auto& e = ex1();
  auto G1 = group_closure(action_from_automorphisms(e.curve, e.autos));
  std::vector<IsotypicSummand> whole{span(e.curve, "H0", {"x^0 dx/y", "x^1 dx/y"})};
  auto c1 = lemma_irred_certificate(e.curve, G1, whole, {SummandMap{&e.E, "E_t", e.map, R("1/v", e.t)}});
  CHECK(c1.complete());
  CHECK(c1.witnesses[0].pullback == std::vector<TowerElement>{e.t->from_rational(-1), e.t->one()});
  CHECK(c1.witnesses[0].translates.size() == 2);
  CHECK(c1.conclusion == std::vector<std::pair<std::string, std::size_t>>{{"E_t", 2}});

  CHECK_THROWS_AS(lemma_irred_certificate(e.curve, G1, whole, {std::nullopt}), DomainError);
  CHECK_THROWS_AS(lemma_irred_certificate(e.curve, G1, whole, {}), DomainError);

  auto t = tower_w();
  auto H = AffineCurve::hyperelliptic(P("x*(x^6+1)", t), var_id("x"), var_id("y"));
  auto E = AffineCurve::bare(P("v^2-u^3-u", t), var_id("u"), var_id("v"));
  auto G4 = group_closure(action_from_automorphisms(H, {M("1/x", "-y/x^4", t), M("w*x", "w^2*y", t)}));
  auto c4 = lemma_irred_certificate(H, G4, {span(H, "B", {"x^1 dx/y"})},
                                    {SummandMap{&E, "E_i", M("x^2", "x*y", t), R("1/v", t)}});
  CHECK_FALSE(c4.complete());
  CHECK_FALSE(c4.witnesses[0].map_ok);
  CHECK(c4.conclusion.empty());
}

TEST_CASE("Shioda-type maps") {
  std::vector<VarId> a{var_id("X"), var_id("Y"), var_id("Z")};
  std::vector<VarId> b{var_id("X'"), var_id("Y'"), var_id("Z'")};
  std::vector<VarId> tgt{var_id("s0"), var_id("s1"), var_id("s2"), var_id("s3")};
  auto run = [&](const TowerPtr& t, unsigned n, const std::string& root) {
    const std::string e = std::to_string(n);
    sym::RelationSet rels({sym::CurveRelation(P("X^" + e + "+Y^" + e + "+Z^" + e, t), var_id("Z")),
                           sym::CurveRelation(P("X'^" + e + "+Y'^" + e + "+Z'^" + e, t), var_id("Z'"))});
    std::vector<MPoly> comps{P("X*Z'", t), P("Y*Z'", t), P(root + "*X'*Z", t), P(root + "*Y'*Z", t)};
    auto G = P("s0^" + e + "+s1^" + e + "+s2^" + e + "+s3^" + e, t);
    return verify_shioda_trick(rels, a, b, comps, tgt, G);
  };
  auto ti = Tower::rational()->extended("i", "i^2+1", "-i");
  auto tz = Tower::rational()->extended("z", "z^4+1", "-z^3");
  auto s6 = run(ti, 6, "i");
  CHECK(s6.passed());
  CHECK(s6.id == "shioda");
  CHECK(run(tz, 4, "z").passed());
  CHECK_FALSE(run(ti, 6, "1").passed());
  sym::RelationSet none;
  CHECK_THROWS_AS(verify_shioda_trick(none, a, b, {P("X*Z'", ti), P("X", ti)}, {tgt[0], tgt[1]}, P("s0", ti)),
                  DomainError);
}

TEST_CASE("property: pullback is contravariant") {
  // (phi o g)^* = g^* phi^* for automorphisms g of the sextic and phi = f or h
  const auto& c = c6();
  std::vector<sym::KMatrix> mats;
  for (const auto& a : c.autos) mats.push_back(action_matrix(c.curve, a));
  std::mt19937_64 rng(53);
  int cases = 0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t i = rng() % c.autos.size(), j = rng() % c.autos.size();
    // gg = g_j o g_i, so gg^* = g_i^* g_j^*
    CurveMap gg = compose(c.autos[i], c.curve, c.autos[j]);
    const bool use_f = rng() % 2;
    const auto& target = use_f ? c.E : c.cubic;
    const auto& phi = use_f ? c.f : c.h;
    auto eta = R(use_f ? "1/v" : "1/eta^2", c.t);
    auto lhs = classify(c.curve, pullback(c.curve, target, compose(gg, c.curve, phi), eta));
    auto inner = pullback(c.curve, target, phi, eta);
    auto rhs = (mats[i] * mats[j]).apply(classify(c.curve, inner));
    CHECK(lhs == rhs);
    ++cases;
  }
  CHECK(cases >= 100);
}

TEST_CASE("property: pullback is linear in the form") {
  const auto& c = c6();
  std::mt19937_64 rng(59);
  auto rnd = [&] { return static_cast<long>(rng() % 13) - 6; };
  auto e1 = R("1/v", c.t), e2 = R("u/v", c.t);
  auto p1 = pullback(c.curve, c.E, c.f, e1), p2 = pullback(c.curve, c.E, c.f, e2);
  int cases = 0;
  for (int k = 0; k < 100; ++k) {
    auto a = R(std::to_string(rnd()) + "+(" + std::to_string(rnd()) + ")*w", c.t);
    auto b = R(std::to_string(rnd()) + "*c", c.t);
    auto lhs = pullback(c.curve, c.E, c.f, a * e1 + b * e2);
    CHECK(sym::residual(lhs, a * p1 + b * p2, c.curve.relations()).is_zero());
    ++cases;
  }
  CHECK(cases >= 100);
}

TEST_CASE("property: decomposition summands are stable under every element") {
  const auto& c = c6();
  auto G = group_closure(action_from_automorphisms(c.curve, c.autos));
  std::mt19937_64 rng(61);
  auto summands = c.summands();
  int cases = 0;
  for (int k = 0; k < 120; ++k) {
    const auto& g = G[rng() % G.size()];
    const auto& s = summands[rng() % summands.size()];
    const auto& v = s.basis[rng() % s.basis.size()];
    CHECK(sym::solve_in_span(c.t, s.basis, g.apply(v)).has_value());
    ++cases;
  }
  CHECK(cases >= 100);
}

namespace {

// Evaluates a rational function at a point mod p; nullopt on a pole.
std::optional<std::uint64_t> eval_rf(const RationalFunction& r, const std::map<VarId, std::uint64_t>& pt,
                                     const sym::TowerSpecialization& spec) {
  const std::uint64_t d = sym::eval_mod_p(r.denominator(), pt, spec);
  if (d == 0) return std::nullopt;
  const std::uint64_t n = sym::eval_mod_p(r.numerator(), pt, spec);
  return exact::mul_mod(n, exact::pow_mod(d, spec.prime() - 2, spec.prime()), spec.prime());
}

}  // namespace

TEST_CASE("property: verified maps send F_p points onto the target") {
  struct Case {
    const AffineCurve* source;
    const AffineCurve* target;
    CurveMap map;
  };
  const auto& c = c6();
  auto tl = tower_wl();
  static const auto H = AffineCurve::hyperelliptic(P("x*(x^6+1)", tl), var_id("x"), var_id("y"));
  static const auto E4 = AffineCurve::bare(P("v^2-u^3-u", tl), var_id("u"), var_id("v"));
  std::vector<Case> cases_{{&c.curve, &c.E, c.f}, {&c.curve, &c.E, c.g}, {&c.curve, &c.cubic, c.h},
                           {&H, &E4, M("l^2*(x+1/x)", "l^3*y/x^2", tl)}};
  std::mt19937_64 rng(67);
  int cases = 0;
  for (const auto& k : cases_) {
    REQUIRE(verify_map(*k.source, *k.target, k.map).passed());
    int found = 0;
    for (std::uint64_t p : exact::primes_in_class(400, 12, {1})) {
      auto spec = sym::TowerSpecialization::resolve(k.source->tower(), p);
      if (!spec) continue;
      for (int tries = 0; tries < 40 && found < 30; ++tries) {
        std::uint64_t x0 = rng() % p;
        for (std::uint64_t y0 = 0; y0 < p; ++y0) {
          std::map<VarId, std::uint64_t> pt{{k.source->x(), x0}, {k.source->y(), y0}};
          if (sym::eval_mod_p(k.source->relation(), pt, *spec) != 0) continue;
          auto u = eval_rf(k.map.u, pt, *spec), v = eval_rf(k.map.v, pt, *spec);
          if (!u || !v) continue;
          CHECK(sym::eval_mod_p(k.target->relation(), {{k.target->x(), *u}, {k.target->y(), *v}}, *spec) == 0);
          ++found;
          ++cases;
        }
      }
      if (found >= 30) break;
    }
    CHECK(found >= 25);
  }
  CHECK(cases >= 100);
}
