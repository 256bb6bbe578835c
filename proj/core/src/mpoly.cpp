#include "rhomax/mpoly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace rhomax::sym {

namespace {

struct VarTable {
  std::mutex mu;
  std::unordered_map<std::string, VarId> ids;
  std::deque<std::string> names;  // deque: stable references
};

VarTable& table() {
  static VarTable t;
  return t;
}

}  // namespace

VarId var_id(const std::string& name) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  auto id = static_cast<VarId>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& var_name(VarId id) {
  auto& t = table();
  std::lock_guard lock(t.mu);
  return t.names.at(id);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(VarId v, unsigned e) {
  Monomial m;
  if (e > 0) m.powers_.emplace_back(v, e);
  return m;
}

unsigned Monomial::degree(VarId v) const {
  for (const auto& [id, e] : powers_)
    if (id == v) return e;
  return 0;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& pe : powers_) d += pe.second;
  return d;
}

unsigned Monomial::degree_in(const std::vector<VarId>& vars) const {
  unsigned d = 0;
  for (const auto& [id, e] : powers_)
    if (std::find(vars.begin(), vars.end(), id) != vars.end()) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.powers_.reserve(powers_.size() + o.powers_.size());
  auto a = powers_.begin();
  auto b = o.powers_.begin();
  while (a != powers_.end() || b != o.powers_.end()) {
    if (b == o.powers_.end() || (a != powers_.end() && a->first < b->first)) {
      r.powers_.push_back(*a++);
    } else if (a == powers_.end() || b->first < a->first) {
      r.powers_.push_back(*b++);
    } else {
      r.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (const auto& pe : powers_)
    if (pe.first != v) r.powers_.push_back(pe);
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r;
  for (const auto& [id, e] : powers_) {
    unsigned f = o.degree(id);
    if (f > 0) r.powers_.emplace_back(id, std::min(e, f));
  }
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (const auto& [id, e] : o.powers_)
    if (degree(id) < e) return false;
  return true;
}

Monomial Monomial::divided(const Monomial& o) const {
  if (!divisible_by(o)) throw DomainError("monomial division is not exact");
  Monomial r;
  for (const auto& [id, e] : powers_) {
    unsigned f = e - o.degree(id);
    if (f > 0) r.powers_.emplace_back(id, f);
  }
  return r;
}

std::string Monomial::to_string() const {
  std::vector<std::pair<std::string, unsigned>> named;
  for (const auto& [id, e] : powers_) named.emplace_back(var_name(id), e);
  std::sort(named.begin(), named.end());
  std::string s;
  for (const auto& [n, e] : named) {
    if (!s.empty()) s += "*";
    s += n;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(TowerPtr tower) : tower_(std::move(tower)) {}

MPoly::MPoly(TowerPtr tower, const BigRational& c) : tower_(std::move(tower)) {
  if (c != 0) terms_.emplace(Monomial{}, tower_->from_rational(c));
}

MPoly::MPoly(const TowerElement& c) : tower_(c.tower()) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(TowerPtr tower, const std::string& name) { return variable(std::move(tower), var_id(name)); }

MPoly MPoly::variable(TowerPtr tower, VarId v) {
  MPoly p(tower);
  p.terms_.emplace(Monomial::var(v), tower->one());
  return p;
}

MPoly MPoly::monomial(const TowerElement& c, const Monomial& m) {
  MPoly p(c.tower());
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

TowerElement MPoly::constant_value() const {
  if (!is_constant()) throw DomainError("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? tower_->zero() : terms_.begin()->second;
}

TowerElement MPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? tower_->zero() : it->second;
}

unsigned MPoly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(v));
  return d;
}

unsigned MPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

std::vector<VarId> MPoly::variables() const {
  std::vector<VarId> out;
  for (const auto& t : terms_)
    for (const auto& pe : t.first.powers())
      if (std::find(out.begin(), out.end(), pe.first) == out.end()) out.push_back(pe.first);
  std::sort(out.begin(), out.end());
  return out;
}

bool MPoly::involves(VarId v) const { return degree(v) > 0; }

bool MPoly::is_homogeneous(const std::vector<VarId>& vars, unsigned* degree_out) const {
  std::optional<unsigned> d;
  for (const auto& t : terms_) {
    unsigned td = t.first.degree_in(vars);
    if (d && *d != td) return false;
    d = td;
  }
  if (degree_out) *degree_out = d.value_or(0);
  return true;
}

std::vector<MPoly> MPoly::coefficients_in(VarId v) const {
  std::vector<MPoly> out(degree(v) + 1, MPoly(tower_));
  for (const auto& [m, c] : terms_) out[m.degree(v)].terms_.emplace(m.without(v), c);
  return out;
}

MPoly MPoly::from_coefficients(const std::vector<MPoly>& coeffs, VarId v, TowerPtr tower) {
  MPoly r(std::move(tower));
  for (unsigned k = 0; k < coeffs.size(); ++k) {
    Monomial vk = Monomial::var(v, k);
    for (const auto& [m, c] : coeffs[k].terms_) r.add_term(m * vk, c);
  }
  return r;
}

void MPoly::add_term(const Monomial& m, const TowerElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r(*this);
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r(*this);
  r -= o;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  require_same_tower(tower_, o.tower_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  require_same_tower(tower_, o.tower_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
  require_same_tower(tower_, o.tower_);
  MPoly r(tower_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

MPoly MPoly::scaled(const TowerElement& c) const {
  MPoly r(tower_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.add_term(m, k * c);
  return r;
}

MPoly MPoly::scaled(const BigRational& c) const {
  MPoly r(tower_);
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k.scaled(c));
  return r;
}

MPoly MPoly::times_monomial(const Monomial& mono) const {
  MPoly r(tower_);
  for (const auto& [m, k] : terms_) r.terms_.emplace(m * mono, k);
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly r(tower_, BigRational(1));
  MPoly b = *this;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

bool MPoly::operator==(const MPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || !(a->second == b->second)) return false;
  return true;
}

MPoly MPoly::derivative(VarId v) const {
  MPoly r(tower_);
  for (const auto& [m, c] : terms_) {
    unsigned e = m.degree(v);
    if (e == 0) continue;
    Monomial lowered = m.without(v) * Monomial::var(v, e - 1);
    r.add_term(lowered, c.scaled(BigRational(e)));
  }
  return r;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& images) const {
  MPoly r(tower_);
  // cache powers per variable
  std::map<VarId, std::vector<MPoly>> powers;
  auto power = [&](VarId v, unsigned e) -> const MPoly& {
    auto& vec = powers[v];
    if (vec.empty()) vec.push_back(MPoly(tower_, BigRational(1)));
    while (vec.size() <= e) vec.push_back(vec.back() * images.at(v));
    return vec[e];
  };
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    MPoly factor(c);
    for (const auto& [id, e] : m.powers()) {
      if (images.contains(id)) factor *= power(id, e);
      else kept = kept * Monomial::var(id, e);
    }
    r += factor.times_monomial(kept);
  }
  return r;
}

MPoly MPoly::substitute(VarId v, const MPoly& image) const { return substitute(std::map<VarId, MPoly>{{v, image}}); }

MPoly MPoly::map_coefficients(const std::function<TowerElement(const TowerElement&)>& f) const {
  MPoly r(tower_);
  for (const auto& [m, c] : terms_) r.add_term(m, f(c));
  return r;
}

Monomial MPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.begin()->first;
  for (const auto& t : terms_) g = g.gcd(t.first);
  return g;
}

MPoly MPoly::divided_by(const Monomial& mono) const {
  MPoly r(tower_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m.divided(mono), c);
  return r;
}

std::pair<Monomial, TowerElement> MPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return *terms_.rbegin();
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, const TowerElement*>> sorted;
  for (const auto& [m, c] : terms_) sorted.emplace_back(m, &c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = a.first.total_degree();
    unsigned db = b.first.total_degree();
    if (da != db) return da > db;
    return a.first.to_string() > b.first.to_string();
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, cptr] : sorted) {
    const TowerElement& c = *cptr;
    std::string mono = m.to_string();
    if (c.is_rational()) {
      BigRational q = c.rational();
      if (!first) os << (q < 0 ? " - " : " + ");
      else if (q < 0) os << "-";
      BigRational a = abs(q);
      if (mono.empty()) os << a.get_str();
      else if (a == 1) os << mono;
      else os << a.get_str() << "*" << mono;
    } else {
      if (!first) os << " + ";
      os << c.to_string();
      if (!mono.empty()) os << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace rhomax::sym
