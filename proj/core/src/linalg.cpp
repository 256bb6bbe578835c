#include "rhomax/linalg.hpp"

#include <sstream>

namespace rhomax::sym {

std::optional<std::vector<BigRational>> solve_rational(RationalMatrix m, std::vector<BigRational> rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    BigRational inv = 1 / m[col][col];
    for (std::size_t j = col; j < n; ++j) m[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      BigRational f = m[r][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::size_t rank_rational(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      BigRational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

KMatrix::KMatrix(TowerPtr tower, std::size_t rows, std::size_t cols)
    : tower_(std::move(tower)), rows_(rows), cols_(cols), data_(rows * cols, tower_->zero()) {}

KMatrix KMatrix::identity(TowerPtr tower, std::size_t n) {
  KMatrix m(tower, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = tower->one();
  return m;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch");
  KMatrix r(tower_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const auto& b = o(k, j);
        if (b.is_zero()) continue;
        r(i, j) += a * b;
      }
    }
  }
  return r;
}

std::vector<TowerElement> KMatrix::apply(const std::vector<TowerElement>& v) const {
  if (v.size() != cols_) throw DomainError("vector length mismatch");
  std::vector<TowerElement> out(rows_, tower_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (!(*this)(i, k).is_zero() && !v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool KMatrix::operator==(const KMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

TowerElement KMatrix::trace() const {
  TowerElement t = tower_->zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool KMatrix::is_identity() const { return *this == identity(tower_, rows_); }

std::string KMatrix::key() const {
  std::ostringstream os;
  for (const auto& e : data_) {
    for (const auto& c : e.coeffs()) os << c.get_str() << ',';
    os << ';';
  }
  return os.str();
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<TowerElement>>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    TowerElement inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      TowerElement f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j)
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const TowerPtr& /*tower*/, std::vector<std::vector<TowerElement>> rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows[0].size()).size();
}

std::optional<std::vector<TowerElement>> solve_in_span(const TowerPtr& tower,
                                                       const std::vector<std::vector<TowerElement>>& columns,
                                                       const std::vector<TowerElement>& rhs) {
  const std::size_t n = columns.size();
  const std::size_t m = rhs.size();
  for (const auto& c : columns)
    if (c.size() != m) throw DomainError("solve_in_span: column length mismatch");
  std::vector<std::vector<TowerElement>> aug(m, std::vector<TowerElement>(n + 1, tower->zero()));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) aug[i][k] = columns[k][i];
    aug[i][n] = rhs[i];
  }
  auto pivots = rref(aug, n + 1);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<TowerElement> x(n, tower->zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][n];
  return x;
}

}  // namespace rhomax::sym
