#pragma once

#include "assoc/polytope.hpp"
#include "assoc/rational.hpp"
#include "assoc/trees.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace assoc {

/// Positive integer leaf weights.
using Weight = std::vector<std::int64_t>;

Weight standard_weight(std::size_t n);
/// Throws std::invalid_argument unless nonempty with all entries >= 1.
void validate_weight(const Weight& w);

/// Sum of w_k w_l over first <= k < l <= last (1-based, inclusive).
Rational pair_sum(const Weight& w, std::size_t first, std::size_t last);

/// M(t, w) = (a_1 b_1, ..., a_{n-1} b_{n-1}) where a_i, b_i are the weights
/// under the left and right inputs of the i-th internal vertex in left-to-right order.
QPoint loday_point(const PlanarTree& t, const Weight& w);

/// (n-1, n-2, ..., 1).
QVector default_orientation(std::size_t arity);
bool is_strictly_decreasing(const QVector& v);

/// K_w with both representations. Vertices follow enumerate_binary_trees(n);
/// facets are indexed by (p, q, r) with p + q + r = n and 2 <= q <= n-1.
struct LodayRealization {
  Weight weight;
  std::vector<PlanarTree> vertex_trees;
  VPolytope vertices;
  std::vector<PlanarTree> facet_trees;
  /// Leaf span [p+1, p+q] of the inner vertex of each facet tree.
  std::vector<LeafSpan> facet_spans;
  HPolytope halfspaces;
  QVector orientation;

  std::size_t arity() const { return weight.size(); }
  std::size_t ambient_dim() const { return arity() - 1; }
  std::size_t dim() const { return arity() >= 2 ? arity() - 2 : 0; }
  const QPoint& vertex(const PlanarTree& t) const;

  /// Facets containing the face labeled t.
  std::vector<std::size_t> active_facets(const PlanarTree& t) const;
  /// Smallest face containing every point whose active facet set is `active`.
  PlanarTree face_from_active(const std::vector<std::size_t>& active) const;

 private:
  std::map<std::string, std::size_t> vertex_index_;
  friend LodayRealization build_realization(const Weight&, std::optional<QVector>);
};

/// Builds K_w and checks that the vertex set equals the vertex enumeration of
/// the H-representation. Throws std::invalid_argument for a bad weight or an
/// orientation that is not strictly decreasing.
LodayRealization build_realization(const Weight& w, std::optional<QVector> orientation = std::nullopt);

/// A face is stored by its label; geometry is derived from the owner.
struct Face {
  PlanarTree label;
  std::vector<PlanarTree> vertex_trees;
  std::vector<QPoint> vertices;

  std::size_t dimension() const { return label.dimension(); }
};

Face face_of_tree(const LodayRealization& k, const PlanarTree& t);

/// (bm F, tp F) by comb resolution, checked against argmin/argmax of the
/// orientation over the face's vertices.
std::pair<PlanarTree, PlanarTree> face_min_max(const LodayRealization& k, const Face& f);

/// The face labeled t is the product over internal vertices v of K_{w_v}, where
/// w_v lists the weights below the children of v. Block coordinate j of v is the
/// global coordinate sitting between its children j and j+1.
struct FaceBlock {
  Weight weight;
  /// 0-based global coordinate of each block coordinate.
  std::vector<std::size_t> coordinates;
};

/// One block per internal vertex, in preorder.
std::vector<FaceBlock> face_blocks(const PlanarTree& t, const Weight& w);

/// Block permutation Θ : R^{p+r} x R^{q-1} -> R^{n-1} identifying
/// K_outer x K_inner with the facet c_{p+1+r} ∘_{p+1} c_q of K_w.
struct ThetaEmbedding {
  std::size_t p = 0, q = 0, r = 0;
  Weight outer;
  Weight inner;
  /// permutation[k] is the index in the concatenation (x, y) sent to coordinate k.
  std::vector<std::size_t> permutation;

  QPoint apply(const QPoint& x, const QPoint& y) const;
  std::pair<QPoint, QPoint> split(const QPoint& z) const;
  PlanarTree facet() const { return two_vertex_tree(p, q, r); }
};

ThetaEmbedding theta_embedding(std::size_t p, std::size_t q, std::size_t r, const Weight& w);

/// K_{w_1} x ... x K_{w_k} with forest-labeled faces and block-diagonal H-representation.
struct ProductRealization {
  std::vector<LodayRealization> factors;
  /// First coordinate of each factor.
  std::vector<std::size_t> offsets;
  /// First facet index of each factor.
  std::vector<std::size_t> facet_offsets;
  std::vector<Forest> vertex_forests;
  VPolytope vertices;
  HPolytope halfspaces;
  QVector orientation;

  std::size_t ambient_dim() const { return halfspaces.dim; }
  std::size_t dim() const;
  std::vector<QPoint> split(const QPoint& z) const;
  QPoint join(const std::vector<QPoint>& parts) const;

  std::vector<std::size_t> active_facets(const Forest& f) const;
  Forest face_from_active(const std::vector<std::size_t>& active) const;
  std::vector<QPoint> face_vertices(const Forest& f) const;
  std::pair<Forest, Forest> face_min_max(const Forest& f) const;
  /// All faces, sorted.
  std::vector<Forest> faces() const;
  Forest top_face() const;
};

/// Orientation defaults to the concatenation of the factors' orientations.
ProductRealization product_realization(std::vector<LodayRealization> ks,
                                       std::optional<QVector> orientation = std::nullopt);

}  // namespace assoc
