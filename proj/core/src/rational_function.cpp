#include "rhomax/rational_function.hpp"

namespace rhomax::sym {

RationalFunction::RationalFunction(TowerPtr tower) : num_(tower), den_(tower, BigRational(1)) {}

RationalFunction::RationalFunction(MPoly numerator)
    : num_(std::move(numerator)), den_(num_.tower(), BigRational(1)) {}

RationalFunction::RationalFunction(MPoly numerator, MPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_tower(num_.tower(), den_.tower());
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly(num_.tower(), BigRational(1));
    return;
  }
  Monomial g = num_.monomial_content().gcd(den_.monomial_content());
  if (!g.is_one()) {
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
  }
  TowerElement lead = den_.is_constant() ? den_.constant_value() : den_.leading_term().second;
  if (!lead.is_one()) {
    TowerElement inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

MPoly RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw DomainError("not a polynomial: " + to_string());
  return num_;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return {num_ + o.num_, den_};
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const { return *this * o.inverse(); }

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DivisionByZero("inverse of zero rational function");
  return {den_, num_};
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e))};
}

RationalFunction RationalFunction::derivative(VarId v) const {
  if (den_.is_constant()) return RationalFunction(num_.derivative(v), den_);
  return {num_.derivative(v) * den_ - num_ * den_.derivative(v), den_ * den_};
}

RationalFunction compose(const MPoly& p, const std::map<VarId, RationalFunction>& images) {
  // Common denominator prod_v den_v^{deg_v p}.
  const TowerPtr& tower = p.tower();
  std::map<VarId, unsigned> degs;
  for (const auto& [v, img] : images) degs[v] = p.degree(v);
  std::map<VarId, std::vector<MPoly>> num_pows, den_pows;
  auto powers_of = [&](const MPoly& base, unsigned n) {
    std::vector<MPoly> out{MPoly(tower, BigRational(1))};
    for (unsigned k = 0; k < n; ++k) out.push_back(out.back() * base);
    return out;
  };
  for (const auto& [v, img] : images) {
    num_pows[v] = powers_of(img.numerator(), degs[v]);
    den_pows[v] = powers_of(img.denominator(), degs[v]);
  }
  MPoly num(tower);
  for (const auto& [m, c] : p.terms()) {
    MPoly term(c);
    Monomial kept;
    for (const auto& [v, img] : images) {
      unsigned e = m.degree(v);
      if (degs[v] == 0) continue;
      term *= num_pows[v][e];
      if (!img.denominator().is_constant() || !img.denominator().constant_value().is_one())
        term *= den_pows[v][degs[v] - e];
    }
    for (const auto& [id, e] : m.powers())
      if (!images.contains(id)) kept = kept * Monomial::var(id, e);
    num += term.times_monomial(kept);
  }
  MPoly den(tower, BigRational(1));
  for (const auto& [v, img] : images)
    if (degs[v] > 0) den *= den_pows[v][degs[v]];
  return {num, den};
}

RationalFunction RationalFunction::compose(const std::map<VarId, RationalFunction>& images) const {
  return sym::compose(num_, images) / sym::compose(den_, images);
}

bool RationalFunction::equals(const RationalFunction& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace rhomax::sym
