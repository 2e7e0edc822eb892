#pragma once

#include "assoc/cone.hpp"
#include "assoc/loday.hpp"
#include "assoc/polytope.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace assoc {

/// A polytope with an orientation vector, given by both representations.
struct OrientedPolytope {
  HPolytope halfspaces;
  std::vector<QPoint> vertices;
  QVector orientation;
};

OrientedPolytope oriented(const LodayRealization& k);
OrientedPolytope oriented(const ProductRealization& p);

/// Δ(z) = (bm, tp) of P ∩ (2z - P) with the active inequality sets of both points.
struct PointDiagonal {
  QPoint z;
  QPoint lo;
  QPoint hi;
  std::vector<std::size_t> lo_active;
  std::vector<std::size_t> hi_active;
};

/// Throws OutsidePolytopeError when z is not in P and NonUniqueOptimumError
/// when the orientation is perpendicular to an edge of P ∩ (2z - P).
PointDiagonal pointwise_diagonal(const OrientedPolytope& p, const QPoint& z);

/// Pointwise diagonal with the minimal faces of both components as labels.
struct DiagonalResult {
  QPoint z;
  QPoint lo;
  QPoint hi;
  Forest lo_face;
  Forest hi_face;
};

DiagonalResult pointwise_diagonal(const ProductRealization& p, const QPoint& z);
DiagonalResult pointwise_diagonal(const LodayRealization& k, const QPoint& z);

/// Faces (F, G) with dim F + dim G = dim P and tp F <= bm G.
struct MatchingPair {
  Forest F;
  Forest G;

  std::size_t dim_f() const { return F.dimension(); }
  std::size_t dim_g() const { return G.dimension(); }
  friend bool operator==(const MatchingPair&, const MatchingPair&) = default;
  friend auto operator<=>(const MatchingPair&, const MatchingPair&) = default;
};

/// Pairs of faces of K_n selected by the Tamari criterion, sorted.
std::vector<MatchingPair> magical_pairs(std::size_t n);
/// Same criterion on a product, with the componentwise order on forests.
std::vector<MatchingPair> magical_pairs(const ProductRealization& p);

/// Normal cone N_P(F) = cone(outer facet normals active on F) + span(equality normals).
Cone normal_cone(const HPolytope& h, const std::vector<std::size_t>& active);

/// Pairs of faces of matching dimensions for which no w with <v, w> > 0 lies in
/// -N(F)* ∩ N(G)*. Depends only on the geometry, not on the Tamari order.
std::vector<MatchingPair> normal_cone_pairs(const ProductRealization& p);
std::vector<MatchingPair> normal_cone_pairs(const LodayRealization& k);

/// Rational points of P: alternately a convex combination of all vertices and
/// of a random subset of dim+1 vertices, with integer weights in [0, denominator]
/// normalized to sum one.
std::vector<QPoint> sample_points(const std::vector<QPoint>& vertices, std::size_t dim, std::size_t count,
                                  std::uint64_t seed, int denominator = 97);

/// Diagonals of sampled points.
std::vector<DiagonalResult> sample_diagonals(const ProductRealization& p, std::size_t trials, std::uint64_t seed);

/// Top-dimensional cell pairs (lo_face, hi_face) hit by sampled points, sorted.
std::vector<MatchingPair> sample_oracle(const ProductRealization& p, std::size_t trials, std::uint64_t seed);
std::vector<MatchingPair> sample_oracle(const LodayRealization& k, std::size_t trials, std::uint64_t seed);

/// Top-dimensional cell pairs hit by the diagonals of the given points, sorted.
std::vector<MatchingPair> hit_pairs(const ProductRealization& p, const std::vector<QPoint>& points);

/// (b_F + b_G)/2 for every pair of faces with dim F + dim G = dim P, where b is
/// the vertex barycenter. If (F, G) is a cell of the diagonal the point lies in
/// the interior of β(F × G), so these points reach every cell however small.
std::vector<QPoint> face_pair_midpoints(const ProductRealization& p);

/// hit_pairs over face_pair_midpoints.
std::vector<MatchingPair> barycenter_oracle(const ProductRealization& p);
std::vector<MatchingPair> barycenter_oracle(const LodayRealization& k);

/// β(F × G) = (F + G)/2 for every matching pair, validated to tile P.
struct SubdivisionComplex {
  std::vector<MatchingPair> pairs;
  /// Extreme points of each cell.
  std::vector<std::vector<QPoint>> cells;
  std::vector<Rational> volumes;
  Rational total_volume;
  Rational polytope_volume;
};

/// Throws ValidationError when the cells fail to cover P exactly, overlap in
/// full dimension, or have the wrong dimension.
SubdivisionComplex subdivision(const ProductRealization& p, bool check_disjoint = true);
SubdivisionComplex subdivision(const LodayRealization& k, bool check_disjoint = true);

struct AffineMap {
  QMatrix linear;  // rows = target coordinates
  QVector offset;

  QPoint apply(const QPoint& x) const;
};

/// A maximal cell of the coherent collection F^ψ: the vertices of P mapped to a
/// lower facet of conv{(π(v), ψ(v))}.
struct LowerCell {
  std::vector<std::size_t> vertices;
  std::size_t dim = 0;
  std::size_t projected_dim = 0;

  bool tight() const { return dim == projected_dim; }
};

/// Maximal cells of F^ψ, sorted by vertex index lists.
std::vector<LowerCell> lower_faces(const VPolytope& p, const AffineMap& pi, const QVector& psi);
std::vector<LowerCell> lower_faces(const HPolytope& p, const AffineMap& pi, const QVector& psi);

/// Lower cells of P × P under β(x, y) = (x + y)/2 and ψ(x, y) = <x - y, v>,
/// each written as a pair of vertex index sets (F, G) with cell = F × G.
/// Throws ValidationError if a cell is not a product.
struct ProductCell {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  bool tight = false;

  friend bool operator==(const ProductCell&, const ProductCell&) = default;
  friend auto operator<=>(const ProductCell&, const ProductCell&) = default;
};

std::vector<ProductCell> diagonal_lower_cells(const std::vector<QPoint>& vertices, const QVector& orientation);

/// The same cells labeled by faces of a product of realizations.
std::vector<MatchingPair> lower_face_pairs(const ProductRealization& p);

/// Unsigned cellular diagonal Δ(c_n) = Σ F ⊗ G over the matching pairs.
struct DgTerm {
  PlanarTree left;
  PlanarTree right;
};

std::vector<DgTerm> dg_formula(std::size_t n);
std::string dg_formula_text(const std::vector<DgTerm>& terms);

}  // namespace assoc
