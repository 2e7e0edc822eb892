#pragma once

#include "assoc/linalg.hpp"
#include "assoc/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace assoc {

/// <normal, x> >= rhs for inequalities, <normal, x> = rhs for equalities.
struct LinearConstraint {
  QVector normal;
  Rational rhs;
  std::string label;

  bool satisfied_by(const QPoint& x) const { return dot(normal, x) >= rhs; }
  bool tight_at(const QPoint& x) const { return dot(normal, x) == rhs; }
};

/// Halfspace representation.
struct HPolytope {
  std::size_t dim = 0;
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;

  bool contains(const QPoint& x) const;
  /// Indices of the inequalities tight at x.
  std::vector<std::size_t> active_set(const QPoint& x) const;
  AffineChart equality_chart() const;
};

/// Vertex representation. `labels` is either empty or parallel to `vertices`.
struct VPolytope {
  std::size_t dim = 0;
  std::vector<QPoint> vertices;
  std::vector<std::string> labels;
};

enum class EnumerationMethod {
  kDoubleDescription,
  /// Solves every square subsystem of inequalities. Only for cross-checks.
  kBruteForce,
};

/// Exact vertex set, sorted lexicographically. Throws InfeasibleError or
/// UnboundedError.
VPolytope vertex_enumeration(const HPolytope& h, EnumerationMethod method = EnumerationMethod::kDoubleDescription);

/// Irredundant H-representation of conv(V): the reduced affine-hull equalities
/// plus one primitive-integer inequality per facet.
HPolytope facet_recovery(const VPolytope& v);

/// Constraint concatenation; redundancy is kept.
HPolytope intersect(const HPolytope& a, const HPolytope& b);

/// H-representation of 2z - P.
HPolytope reflect(const HPolytope& p, const QPoint& z);

/// Unique vertex minimizing <c, x>. Throws NonUniqueOptimumError when the
/// minimum is attained at two or more vertices.
QPoint argmin_vertex(const HPolytope& p, const QVector& c);
QPoint argmax_vertex(const HPolytope& p, const QVector& c);
/// Same as above over an explicit vertex list.
QPoint argmin_vertex(const std::vector<QPoint>& vertices, const QVector& c);

/// Maximum of <c, x> over a bounded polytope.
Rational maximize(const HPolytope& p, const QVector& c);

std::size_t affine_dimension(const std::vector<QPoint>& points);

/// Extreme points of conv(points), sorted lexicographically.
std::vector<QPoint> extreme_points(const std::vector<QPoint>& points);

/// Exact volume of conv(points), measured in the coordinates of `chart`
/// (which must contain every point). Zero when conv(points) has lower
/// dimension than the chart.
Rational volume(const std::vector<QPoint>& points, const AffineChart& chart);

/// Simplices of a pulling triangulation of conv(points); each simplex lists
/// indices into `points`.
std::vector<std::vector<std::size_t>> pulling_triangulation(const std::vector<QPoint>& points);

bool lex_less(const QVector& a, const QVector& b);

namespace detail {

using IntVector = std::vector<Integer>;

struct ConeGenerators {
  std::vector<IntVector> rays;
  std::vector<IntVector> lines;
};

/// Generators of {x : <a_i, x> >= 0 for all i} by the double description
/// method with lineality handled explicitly.
ConeGenerators double_description(const std::vector<QVector>& inequalities, std::size_t dim);

}  // namespace detail

}  // namespace assoc
