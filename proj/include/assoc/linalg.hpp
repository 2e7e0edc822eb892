#pragma once

#include "assoc/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace assoc {

using QMatrix = std::vector<QVector>;  // row-major

/// Reduced row echelon form. `pivots[k]` is the pivot column of row k; zero
/// rows are dropped.
struct RowEchelon {
  QMatrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon reduced_row_echelon(QMatrix m, std::size_t cols);
std::size_t rank(const QMatrix& m, std::size_t cols);
/// Basis of {x : m x = 0}.
QMatrix nullspace(const QMatrix& m, std::size_t cols);
Rational determinant(QMatrix m);
/// Unique solution of a square system, or nullopt when singular.
std::optional<QVector> solve_square(QMatrix a, QVector b);

/// Affine subspace {x : E x = e} parametrized by the non-pivot coordinates of
/// the reduced echelon form of E. Projection keeps the free coordinates;
/// lifting recovers the pivot coordinates.
class AffineChart {
 public:
  /// Whole space.
  explicit AffineChart(std::size_t ambient_dim);
  /// Throws InfeasibleError when the system is inconsistent.
  AffineChart(std::size_t ambient_dim, const QMatrix& normals, const QVector& rhs);

  /// Affine hull of a nonempty point set.
  static AffineChart affine_hull(const std::vector<QPoint>& points);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return free_.size(); }
  const std::vector<std::size_t>& free_coordinates() const { return free_; }
  const std::vector<std::size_t>& pivot_coordinates() const { return pivots_; }

  /// Reduced equalities: row k reads x[pivot_k] + sum_f coeff[f] x[f] = rhs[k].
  const QMatrix& equality_normals() const { return normals_; }
  const QVector& equality_rhs() const { return rhs_; }

  QVector project(const QPoint& x) const;
  QPoint lift(const QVector& y) const;
  bool contains(const QPoint& x) const;

  /// Rewrites <a, x> >= b on the subspace as <a', y> >= b' in chart coordinates.
  std::pair<QVector, Rational> pull_back(const QVector& a, const Rational& b) const;
  /// Inverse of pull_back for a chart functional: zero weight on pivot coordinates.
  QVector push_forward(const QVector& a_chart) const;

 private:
  std::size_t ambient_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
  QMatrix normals_;
  QVector rhs_;
};

}  // namespace assoc
