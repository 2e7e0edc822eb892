#include "assoc/linalg.hpp"

#include "assoc/errors.hpp"

#include <algorithm>

namespace assoc {

RowEchelon reduced_row_echelon(QMatrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][col];
    for (auto& q : m[row]) q *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) {
        if (m[row][c] != 0) m[r][c] -= f * m[row][c];
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const QMatrix& m, std::size_t cols) { return reduced_row_echelon(m, cols).pivots.size(); }

QMatrix nullspace(const QMatrix& m, std::size_t cols) {
  RowEchelon e = reduced_row_echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVector v = zeros(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(m[sel], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

std::optional<QVector> solve_square(QMatrix a, QVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  RowEchelon e = reduced_row_echelon(std::move(a), n);
  if (e.pivots.size() < n) return std::nullopt;
  QVector x(n);
  for (std::size_t k = 0; k < n; ++k) x[e.pivots[k]] = e.rows[k][n];
  return x;
}

AffineChart::AffineChart(std::size_t ambient_dim) : ambient_(ambient_dim) {
  for (std::size_t i = 0; i < ambient_dim; ++i) free_.push_back(i);
}

AffineChart::AffineChart(std::size_t ambient_dim, const QMatrix& normals, const QVector& rhs)
    : ambient_(ambient_dim) {
  QMatrix aug;
  aug.reserve(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() != ambient_dim) throw DimensionMismatchError("equality normal has wrong dimension");
    QVector row = normals[i];
    row.push_back(rhs[i]);
    aug.push_back(std::move(row));
  }
  RowEchelon e = reduced_row_echelon(std::move(aug), ambient_dim + 1);
  if (!e.pivots.empty() && e.pivots.back() == ambient_dim) throw InfeasibleError("inconsistent equalities");
  pivots_ = e.pivots;
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : pivots_) is_pivot[p] = true;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    if (!is_pivot[i]) free_.push_back(i);
  }
  for (auto& row : e.rows) {
    rhs_.push_back(row.back());
    row.pop_back();
    normals_.push_back(std::move(row));
  }
}

AffineChart AffineChart::affine_hull(const std::vector<QPoint>& points) {
  if (points.empty()) throw InfeasibleError("affine hull of an empty set");
  const std::size_t d = points.front().size();
  QMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points.front()));
  QMatrix normals = nullspace(diffs, d);
  QVector rhs;
  for (const auto& a : normals) rhs.push_back(dot(a, points.front()));
  return AffineChart(d, normals, rhs);
}

QVector AffineChart::project(const QPoint& x) const {
  QVector y;
  y.reserve(free_.size());
  for (auto f : free_) y.push_back(x.at(f));
  return y;
}

QPoint AffineChart::lift(const QVector& y) const {
  QPoint x = zeros(ambient_);
  for (std::size_t k = 0; k < free_.size(); ++k) x[free_[k]] = y.at(k);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational v = rhs_[k];
    for (auto f : free_) {
      if (normals_[k][f] != 0) v -= normals_[k][f] * x[f];
    }
    x[pivots_[k]] = v;
  }
  return x;
}

bool AffineChart::contains(const QPoint& x) const {
  if (x.size() != ambient_) return false;
  for (std::size_t k = 0; k < normals_.size(); ++k) {
    if (dot(normals_[k], x) != rhs_[k]) return false;
  }
  return true;
}

std::pair<QVector, Rational> AffineChart::pull_back(const QVector& a, const Rational& b) const {
  // Substitute x[p_k] = rhs_k - sum_f normals_k[f] x[f].
  QVector full = a;
  Rational rhs = b;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    Rational c = full[pivots_[k]];
    if (c == 0) continue;
    rhs -= c * rhs_[k];
    for (auto f : free_) {
      if (normals_[k][f] != 0) full[f] -= c * normals_[k][f];
    }
    full[pivots_[k]] = 0;
  }
  return {project(full), rhs};
}

QVector AffineChart::push_forward(const QVector& a_chart) const {
  QVector a = zeros(ambient_);
  for (std::size_t k = 0; k < free_.size(); ++k) a[free_[k]] = a_chart.at(k);
  return a;
}

}  // namespace assoc
