#include "rhomax/tower.hpp"

#include <sstream>

#include "rhomax/linalg.hpp"
#include "rhomax/mpoly.hpp"
#include "rhomax/parser.hpp"

namespace rhomax::sym {

namespace {

void add_into(std::vector<BigRational>& acc, const std::vector<BigRational>& v, std::size_t offset) {
  for (std::size_t i = 0; i < v.size(); ++i) acc[offset + i] += v[i];
}

}  // namespace

// ---------------------------------------------------------------- Tower

Tower::Tower() : dims_{1} {}

TowerPtr Tower::rational() {
  static const TowerPtr q{new Tower()};
  return q;
}

std::optional<std::size_t> Tower::symbol_index(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

TowerElement Tower::zero() const { return TowerElement(shared_from_this()); }
TowerElement Tower::one() const { return TowerElement(shared_from_this(), BigRational(1)); }
TowerElement Tower::from_rational(const BigRational& q) const { return TowerElement(shared_from_this(), q); }

TowerElement Tower::symbol(const std::string& name) const {
  auto idx = symbol_index(name);
  if (!idx) throw DomainError("unknown constant symbol " + name);
  std::vector<BigRational> c(dimension());
  c[dims_[*idx]] = 1;  // exponent 1 on symbol idx, 0 elsewhere
  return TowerElement(shared_from_this(), std::move(c));
}

bool Tower::same_as(const Tower& o) const {
  if (this == &o) return true;
  if (symbols_.size() != o.symbols_.size()) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].name != o.symbols_[i].name || symbols_[i].relation != o.symbols_[i].relation) return false;
  }
  return true;
}

std::vector<unsigned> Tower::exponents_of(std::size_t index) const {
  std::vector<unsigned> e(symbols_.size());
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    e[k] = static_cast<unsigned>(index % symbols_[k].degree);
    index /= symbols_[k].degree;
  }
  return e;
}

std::vector<BigRational> Tower::multiply(const std::vector<BigRational>& a, const std::vector<BigRational>& b,
                                         std::size_t level) const {
  if (level == 0) return {a[0] * b[0]};
  const auto& sym = symbols_[level - 1];
  const std::size_t d = sym.degree;
  const std::size_t sub = dims_[level - 1];
  auto block = [sub](const std::vector<BigRational>& v, std::size_t j) {
    return std::vector<BigRational>(v.begin() + static_cast<std::ptrdiff_t>(j * sub),
                                    v.begin() + static_cast<std::ptrdiff_t>((j + 1) * sub));
  };
  auto is_zero_block = [sub](const std::vector<BigRational>& v, std::size_t j) {
    for (std::size_t i = 0; i < sub; ++i)
      if (v[j * sub + i] != 0) return false;
    return true;
  };
  std::vector<BigRational> prod((2 * d - 1) * sub);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero_block(a, i)) continue;
    auto ai = block(a, i);
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero_block(b, j)) continue;
      add_into(prod, multiply(ai, block(b, j), level - 1), (i + j) * sub);
    }
  }
  for (std::size_t e = 2 * d - 2; e >= d; --e) {
    if (is_zero_block(prod, e)) continue;
    auto top = block(prod, e);
    for (std::size_t i = 0; i < sub; ++i) prod[e * sub + i] = 0;
    for (std::size_t j = 0; j < d; ++j) {
      auto t = multiply(top, sym.relation[j], level - 1);
      for (std::size_t i = 0; i < sub; ++i) prod[(e - d + j) * sub + i] -= t[i];
    }
  }
  prod.resize(d * sub);
  return prod;
}

std::vector<BigRational> Tower::apply_conjugation(const std::vector<BigRational>& a) const {
  const std::size_t full = dimension();
  const std::size_t top = symbols_.size();
  std::vector<std::vector<BigRational>> images(top);
  auto image = [&](std::size_t k) -> const std::vector<BigRational>& {
    if (images[k].empty()) {
      if (!symbols_[k].conjugate) throw DomainError("no conjugate declared for symbol " + symbols_[k].name);
      images[k] = *symbols_[k].conjugate;
      images[k].resize(full);
    }
    return images[k];
  };
  // Horner evaluation level by level.
  auto rec = [&](auto&& self, std::size_t level, std::size_t offset) -> std::vector<BigRational> {
    std::vector<BigRational> out(full);
    if (level == 0) {
      out[0] = a[offset];
      return out;
    }
    const std::size_t d = symbols_[level - 1].degree;
    const std::size_t sub = dims_[level - 1];
    bool any = false;
    for (std::size_t i = 0; i < d * sub; ++i) any = any || a[offset + i] != 0;
    if (!any) return out;
    bool started = false;
    for (std::size_t j = d; j-- > 0;) {
      if (started) out = multiply(out, image(level - 1), top);
      auto part = self(self, level - 1, offset + j * sub);
      for (std::size_t i = 0; i < full; ++i) {
        out[i] += part[i];
        started = started || out[i] != 0;
      }
    }
    return out;
  };
  return rec(rec, top, 0);
}

TowerPtr Tower::extended(const std::string& name, const std::string& relation,
                         const std::optional<std::string>& conjugate) const {
  if (has_symbol(name)) throw DomainError("duplicate constant symbol " + name);
  TowerPtr self = shared_from_this();
  MPoly rel = parse_polynomial(relation, self);
  VarId v = var_id(name);
  unsigned d = rel.degree(v);
  if (d == 0) throw DomainError("relation for " + name + " does not involve it");
  auto coeffs = rel.coefficients_in(v);
  for (const auto& c : coeffs)
    if (!c.is_constant()) throw DomainError("relation for " + name + " has non-constant coefficients");
  TowerElement lead = coeffs[d].constant_value();
  TowerElement inv = lead.inverse();

  ConstantSymbol sym;
  sym.name = name;
  sym.degree = d;
  sym.relation_text = relation;
  for (unsigned j = 0; j < d; ++j) sym.relation.push_back((coeffs[j].constant_value() * inv).coeffs());

  std::shared_ptr<Tower> next(new Tower(*this));
  next->symbols_.push_back(std::move(sym));
  next->dims_.push_back(dims_.back() * d);
  if (conjugate) {
    TowerPtr frozen = next;
    MPoly img = parse_polynomial(*conjugate, frozen);
    if (!img.is_constant()) throw DomainError("conjugate of " + name + " must be a constant");
    next->symbols_.back().conjugate = img.constant_value().coeffs();
  }
  return next;
}

void require_same_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same_as(*b)) throw DomainError("mixing elements of different coefficient towers");
}

// ---------------------------------------------------------------- TowerElement

TowerElement::TowerElement(TowerPtr tower) : tower_(std::move(tower)) { coeffs_.resize(tower_->dimension()); }

TowerElement::TowerElement(TowerPtr tower, const BigRational& q) : TowerElement(std::move(tower)) {
  coeffs_[0] = q;
  coeffs_[0].canonicalize();
}

TowerElement::TowerElement(TowerPtr tower, std::vector<BigRational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() > tower_->dimension()) throw DomainError("tower element has too many coefficients");
  coeffs_.resize(tower_->dimension());
}

bool TowerElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool TowerElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool TowerElement::is_one() const { return is_rational() && coeffs_[0] == 1; }

BigRational TowerElement::rational() const {
  if (!is_rational()) throw DomainError("tower element " + to_string() + " is not rational");
  return coeffs_[0];
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
  TowerElement r(*this);
  r += o;
  return r;
}

TowerElement TowerElement::operator-(const TowerElement& o) const {
  TowerElement r(*this);
  r -= o;
  return r;
}

TowerElement TowerElement::operator*(const TowerElement& o) const {
  require_same_tower(tower_, o.tower_);
  if (is_rational()) return o.scaled(coeffs_[0]);
  if (o.is_rational()) return scaled(o.coeffs_[0]);
  return TowerElement(tower_, tower_->multiply(coeffs_, o.coeffs_, tower_->symbols().size()));
}

TowerElement TowerElement::operator-() const {
  TowerElement r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  require_same_tower(tower_, o.tower_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  require_same_tower(tower_, o.tower_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TowerElement& TowerElement::operator*=(const TowerElement& o) { return *this = *this * o; }

TowerElement TowerElement::scaled(const BigRational& q) const {
  TowerElement r(*this);
  BigRational k = q;
  k.canonicalize();
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

TowerElement TowerElement::pow(unsigned e) const {
  TowerElement r = tower_->one();
  TowerElement b = *this;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

TowerElement TowerElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + std::string("the coefficient tower"));
  if (is_rational()) return TowerElement(tower_, BigRational(1) / coeffs_[0]);
  // Solve (multiplication by this) * x = 1 over Q.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<BigRational> basis(n);
    basis[j] = 1;
    auto col = tower_->multiply(coeffs_, basis, tower_->symbols().size());
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  std::vector<BigRational> rhs(n);
  rhs[0] = 1;
  auto sol = solve_rational(m, rhs);
  if (!sol) throw ReducibleTower("element " + to_string() + " is a zero divisor: some tower relation is reducible");
  return TowerElement(tower_, std::move(*sol));
}

TowerElement TowerElement::conjugate() const {
  if (is_rational()) return *this;
  return TowerElement(tower_, tower_->apply_conjugation(coeffs_));
}

bool TowerElement::operator==(const TowerElement& o) const {
  require_same_tower(tower_, o.tower_);
  return coeffs_ == o.coeffs_;
}

bool TowerElement::operator<(const TowerElement& o) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i];
  }
  return false;
}

std::string TowerElement::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  const auto& syms = tower_->symbols();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    auto e = tower_->exponents_of(i);
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += syms[k].name;
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    BigRational c = coeffs_[i];
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    BigRational a = abs(c);
    if (mono.empty()) os << a.get_str();
    else if (a == 1) os << mono;
    else os << a.get_str() << "*" << mono;
    first = false;
  }
  return "(" + os.str() + ")";
}

}  // namespace rhomax::sym
