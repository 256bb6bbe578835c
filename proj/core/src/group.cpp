#include "rhomax/group.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <unordered_set>

namespace rhomax::morph {

GroupAction action_from_automorphisms(const AffineCurve& c, const std::vector<CurveMap>& automorphisms) {
  GroupAction g{c.tower(), c.dimension(), {}};
  for (const auto& a : automorphisms) {
    auto check = verify_map(c, c, a);
    if (!check.passed()) throw DomainError("automorphism does not preserve the curve: " + check.evidence);
    g.generators.push_back(action_matrix(c, a));
  }
  return g;
}

std::vector<sym::KMatrix> group_closure(const GroupAction& g, std::size_t bound) {
  std::vector<sym::KMatrix> elements{sym::KMatrix::identity(g.tower, g.dimension)};
  std::unordered_set<std::string> seen{elements.front().key()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : g.generators) {
      sym::KMatrix h = elements[head] * gen;
      if (seen.insert(h.key()).second) {
        elements.push_back(std::move(h));
        if (elements.size() > bound)
          throw DomainError("group closure exceeds " + std::to_string(bound) + " elements");
      }
    }
  }
  return elements;
}

BigRational character_norm(const std::vector<sym::KMatrix>& elements) {
  if (elements.empty()) throw DomainError("character norm of an empty group");
  const auto& t = elements.front().tower();
  sym::TowerElement sum = t->zero();
  for (const auto& m : elements) {
    auto tr = m.trace();
    sum += tr * tr.conjugate();
  }
  if (!sum.is_rational()) throw DomainError("character norm is not rational: " + sum.to_string());
  BigRational r = sum.rational() / BigRational(static_cast<long>(elements.size()));
  r.canonicalize();
  return r;
}

std::optional<std::vector<sym::KMatrix>> restrict_to(const std::vector<sym::KMatrix>& elements,
                                                     const IsotypicSummand& s) {
  const std::size_t k = s.basis.size();
  if (elements.empty() || k == 0) return std::vector<sym::KMatrix>{};
  const auto& t = elements.front().tower();
  std::vector<sym::KMatrix> out;
  for (const auto& m : elements) {
    sym::KMatrix r(t, k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto coeffs = sym::solve_in_span(t, s.basis, m.apply(s.basis[j]));
      if (!coeffs) return std::nullopt;
      for (std::size_t i = 0; i < k; ++i) r(i, j) = (*coeffs)[i];
    }
    out.push_back(std::move(r));
  }
  return out;
}

CheckResult verify_decomposition(const std::vector<sym::KMatrix>& elements,
                                 const std::vector<IsotypicSummand>& summands) {
  if (elements.empty()) throw DomainError("empty group");
  const auto& t = elements.front().tower();
  const std::size_t n = elements.front().rows();
  std::vector<std::vector<sym::TowerElement>> all;
  std::ostringstream dims, norms;
  bool ok = true;
  std::string problem;
  for (const auto& s : summands) {
    for (const auto& v : s.basis) {
      if (v.size() != n) throw DomainError("summand " + s.label + " has vectors of the wrong length");
      all.push_back(v);
    }
    dims << (dims.tellp() > 0 ? "," : "") << s.basis.size();
    if (sym::rank(t, s.basis) != s.basis.size()) {
      ok = false;
      problem += " " + s.label + " has dependent generators;";
      norms << (norms.tellp() > 0 ? "," : "") << "?";
      continue;
    }
    auto restricted = restrict_to(elements, s);
    if (!restricted) {
      ok = false;
      problem += " " + s.label + " is not stable;";
      norms << (norms.tellp() > 0 ? "," : "") << "?";
      continue;
    }
    BigRational nrm = character_norm(*restricted);
    norms << (norms.tellp() > 0 ? "," : "") << nrm.get_str();
    if (nrm != 1) {
      ok = false;
      problem += " " + s.label + " is reducible (norm " + nrm.get_str() + ");";
    }
  }
  const std::size_t r = sym::rank(t, all);
  if (r != all.size()) {
    ok = false;
    problem += " summands overlap;";
  }
  if (r != n) {
    ok = false;
    problem += " summands span dimension " + std::to_string(r) + " of " + std::to_string(n) + ";";
  }
  std::string evidence = "|G| = " + std::to_string(elements.size()) + ", dims (" + dims.str() + "), norms (" +
                         norms.str() + ")" + (ok ? "" : ";" + problem);
  return make_check("decomposition", ok, evidence);
}

bool IrredCertificate::complete() const {
  for (const auto& w : witnesses)
    if (!w.complete()) return false;
  return true;
}

IrredCertificate lemma_irred_certificate(const AffineCurve& c, const std::vector<sym::KMatrix>& closure,
                                         const std::vector<IsotypicSummand>& summands,
                                         const std::vector<std::optional<SummandMap>>& maps) {
  if (maps.size() != summands.size()) throw DomainError("one map entry is needed per summand");
  const auto& t = c.tower();
  IrredCertificate cert;
  std::map<std::string, std::size_t> mult;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const auto& s = summands[i];
    SummandWitness w;
    w.summand = s.label;
    w.dimension = s.basis.size();
    if (!maps[i]) throw DomainError("no map supplied for summand " + s.label);
    const auto& sm = *maps[i];
    w.target = sm.target_label;
    auto vm = verify_map(c, *sm.target, sm.map);
    w.map_ok = vm.passed();
    if (!w.map_ok) {
      w.note = "map not well defined: " + vm.evidence;
      cert.witnesses.push_back(std::move(w));
      continue;
    }
    auto v = try_classify(c, pullback(c, *sm.target, sm.map, sm.eta));
    if (!v) {
      w.note = "pullback is not holomorphic";
      cert.witnesses.push_back(std::move(w));
      continue;
    }
    w.pullback = *v;
    auto with = s.basis;
    with.push_back(*v);
    bool nonzero = false;
    for (const auto& e : *v) nonzero = nonzero || !e.is_zero();
    w.contained = nonzero && sym::rank(t, with) == s.basis.size();
    if (!w.contained) {
      w.note = nonzero ? "pullback lies outside the summand" : "pullback is zero";
      cert.witnesses.push_back(std::move(w));
      continue;
    }
    std::vector<std::vector<sym::TowerElement>> chosen;
    for (std::size_t g = 0; g < closure.size() && chosen.size() < w.dimension; ++g) {
      auto img = closure[g].apply(*v);
      chosen.push_back(img);
      if (sym::rank(t, chosen) == chosen.size()) {
        w.translates.push_back(g);
      } else {
        chosen.pop_back();
      }
    }
    w.rank = chosen.size();
    if (w.rank < w.dimension) w.note = "translates span only " + std::to_string(w.rank) + " dimensions";
    if (w.complete()) mult[w.target] += w.dimension;
    cert.witnesses.push_back(std::move(w));
  }
  cert.conclusion.assign(mult.begin(), mult.end());
  return cert;
}

}  // namespace rhomax::morph
