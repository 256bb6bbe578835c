#pragma once

// Dense exact linear algebra: over Q for tower inversion and quadric ranks,
// over a tower field K for form classification and group actions.

#include <optional>
#include <string>
#include <vector>

#include "rhomax/exactmath.hpp"
#include "rhomax/tower.hpp"

namespace rhomax::sym {

using RationalMatrix = std::vector<std::vector<BigRational>>;

/// Unique solution of m*x = rhs, or nullopt when m is singular.
std::optional<std::vector<BigRational>> solve_rational(RationalMatrix m, std::vector<BigRational> rhs);
std::size_t rank_rational(RationalMatrix m);

/// Row-major matrix over a tower field.
class KMatrix {
 public:
  KMatrix(TowerPtr tower, std::size_t rows, std::size_t cols);
  static KMatrix identity(TowerPtr tower, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const TowerPtr& tower() const { return tower_; }

  TowerElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const TowerElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  KMatrix operator*(const KMatrix& o) const;
  std::vector<TowerElement> apply(const std::vector<TowerElement>& v) const;
  bool operator==(const KMatrix& o) const;
  TowerElement trace() const;
  bool is_identity() const;
  /// Stable textual key (used to deduplicate group elements).
  std::string key() const;

 private:
  TowerPtr tower_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TowerElement> data_;
};

/// Rank of the vectors (as rows) over K.
std::size_t rank(const TowerPtr& tower, std::vector<std::vector<TowerElement>> rows);

/// Some solution x of sum_k x_k * columns[k] = rhs over K, or nullopt if rhs
/// is outside the span. `columns[k]` and rhs all have equal length.
std::optional<std::vector<TowerElement>> solve_in_span(const TowerPtr& tower,
                                                       const std::vector<std::vector<TowerElement>>& columns,
                                                       const std::vector<TowerElement>& rhs);

}  // namespace rhomax::sym
