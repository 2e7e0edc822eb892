#include "assoc/classics.hpp"

#include "assoc/errors.hpp"

#include <algorithm>

namespace assoc {

OrientedPolytope simplex_polytope(std::size_t n) {
  OrientedPolytope p;
  p.halfspaces.dim = n;
  if (n > 0) {
    p.halfspaces.inequalities.push_back({negate(unit_vector(n, 0)), -1, "z1<=1"});
    for (std::size_t i = 0; i + 1 < n; ++i) {
      p.halfspaces.inequalities.push_back({sub(unit_vector(n, i), unit_vector(n, i + 1)), 0,
                                           "z" + std::to_string(i + 1) + ">=z" + std::to_string(i + 2)});
    }
    p.halfspaces.inequalities.push_back({unit_vector(n, n - 1), 0, "z" + std::to_string(n) + ">=0"});
  }
  for (std::size_t i = 0; i <= n; ++i) {
    QPoint v(n);
    for (std::size_t k = 0; k < i; ++k) v[k] = 1;
    p.vertices.push_back(std::move(v));
  }
  p.orientation = QVector(n, Rational(1));
  return p;
}

OrientedPolytope cube_polytope(std::size_t n) {
  OrientedPolytope p;
  p.halfspaces.dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    p.halfspaces.inequalities.push_back({unit_vector(n, i), 0, "z" + std::to_string(i + 1) + ">=0"});
    p.halfspaces.inequalities.push_back({negate(unit_vector(n, i)), -1, "z" + std::to_string(i + 1) + "<=1"});
  }
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    QPoint v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = (mask >> (n - 1 - k)) & 1;
    p.vertices.push_back(std::move(v));
  }
  p.orientation = QVector(n, Rational(1));
  return p;
}

std::pair<QPoint, QPoint> aw_diagonal(std::size_t n, const QPoint& z) {
  if (z.size() != n) throw DimensionMismatchError("aw_diagonal: point has wrong dimension");
  if (!simplex_polytope(n).halfspaces.contains(z)) throw OutsidePolytopeError("aw_diagonal: z is not in the simplex");
  const Rational half(1, 2);
  std::size_t i = std::count_if(z.begin(), z.end(), [&](const Rational& x) { return x >= half; });
  QPoint lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k < i) {
      lo[k] = 2 * z[k] - 1;
      hi[k] = 1;
    } else {
      lo[k] = 0;
      hi[k] = 2 * z[k];
    }
  }
  return {lo, hi};
}

std::vector<ProductCell> aw_cells(std::size_t n) {
  std::vector<ProductCell> out;
  for (std::size_t i = 0; i <= n; ++i) {
    ProductCell c;
    for (std::size_t k = 0; k <= i; ++k) c.first.push_back(k);
    for (std::size_t k = i; k <= n; ++k) c.second.push_back(k);
    c.tight = true;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<QPoint, QPoint> cube_diagonal(std::size_t n, const QPoint& z) {
  if (z.size() != n) throw DimensionMismatchError("cube_diagonal: point has wrong dimension");
  if (!cube_polytope(n).halfspaces.contains(z)) throw OutsidePolytopeError("cube_diagonal: z is not in the cube");
  QPoint lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] = std::max(Rational(0), Rational(2 * z[k] - 1));
    hi[k] = std::min(Rational(1), Rational(2 * z[k]));
  }
  return {lo, hi};
}

std::vector<ProductCell> cube_cells(std::size_t n) {
  std::vector<ProductCell> out;
  for (std::size_t choice = 0; choice < (std::size_t{1} << n); ++choice) {
    // Coordinate k uses ({0}, [0,1]) when bit k is clear and ([0,1], {1}) when set.
    ProductCell c;
    c.tight = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      bool in_first = true, in_second = true;
      for (std::size_t k = 0; k < n; ++k) {
        bool bit = (mask >> (n - 1 - k)) & 1;
        bool upper = (choice >> k) & 1;
        if (!upper && bit) in_first = false;
        if (upper && !bit) in_second = false;
      }
      if (in_first) c.first.push_back(mask);
      if (in_second) c.second.push_back(mask);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace assoc
