#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace assoc {

/// Rooted planar tree without unary vertices. A leaf has no children.
///
/// Encoding: a leaf is "|", an internal vertex is "(" followed by the
/// encodings of its children and ")". The left comb with 3 leaves is
/// "((||)|)". Equality and ordering are those of the encoding.
class PlanarTree {
 public:
  /// The trivial tree.
  PlanarTree();
  /// Throws std::invalid_argument for fewer than two children.
  explicit PlanarTree(std::vector<PlanarTree> children);

  static PlanarTree leaf() { return PlanarTree(); }
  static PlanarTree corolla(std::size_t n);
  static PlanarTree left_comb(std::size_t n);
  static PlanarTree right_comb(std::size_t n);
  static PlanarTree parse(std::string_view encoding);

  bool is_leaf() const { return children_.empty(); }
  const std::vector<PlanarTree>& children() const { return children_; }
  std::size_t arity() const { return arity_; }
  std::size_t internal_vertex_count() const { return vertices_; }
  /// Edges between two internal vertices; equals the codimension of the face.
  std::size_t internal_edge_count() const { return vertices_ == 0 ? 0 : vertices_ - 1; }
  /// Dimension of the associahedron face labeled by this tree.
  std::size_t dimension() const { return arity_ - vertices_ - 1; }
  bool is_binary() const { return binary_; }
  const std::string& encoding() const { return encoding_; }

  friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.encoding_ == b.encoding_; }
  friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
    return a.encoding_ <=> b.encoding_;
  }

 private:
  std::vector<PlanarTree> children_;
  std::string encoding_;
  std::size_t arity_ = 1;
  std::size_t vertices_ = 0;
  bool binary_ = true;
};

/// Ordered list of trees labeling a face of a product of associahedra.
struct Forest {
  std::vector<PlanarTree> trees;

  std::size_t arity() const;
  std::size_t dimension() const;
  std::string encoding() const;

  friend bool operator==(const Forest&, const Forest&) = default;
  friend auto operator<=>(const Forest&, const Forest&) = default;
};

enum class ChildSide { kLeft, kRight };

/// Leaf interval [first, last] (1-based, inclusive).
using LeafSpan = std::pair<std::size_t, std::size_t>;

/// An internal vertex with the leaf spans of its children.
struct VertexSpan {
  LeafSpan span;
  std::vector<LeafSpan> children;
};

/// All binary trees with n leaves, sorted by encoding.
std::vector<PlanarTree> enumerate_binary_trees(std::size_t n);
/// All planar trees with n leaves, sorted by encoding.
std::vector<PlanarTree> enumerate_planar_trees(std::size_t n);

/// For each leaf i, the leaf count of the largest subtree whose leftmost leaf is i.
std::vector<std::size_t> bracketing_vector(const PlanarTree& t);

/// Tamari order, by componentwise comparison of bracketing vectors.
bool tamari_leq(const PlanarTree& s, const PlanarTree& t);
/// Tamari order, by search along right rotations. Exponential; for cross-checks.
bool tamari_leq_by_rotations(const PlanarTree& s, const PlanarTree& t);
/// Componentwise Tamari order on forests of equal shape.
bool tamari_leq(const Forest& s, const Forest& t);

/// Trees obtained from t by one right rotation ((A B) C) -> (A (B C)), sorted.
std::vector<PlanarTree> covers(const PlanarTree& t);

/// s ∘_i t: t grafted on the i-th leaf of s (1-based).
PlanarTree graft(const PlanarTree& s, std::size_t i, const PlanarTree& t);

/// Entry i (1..n-2) is 1 when leaf i+1 leans right (it is a left child) and 0
/// when it leans left (it is a right child).
std::vector<int> leaf_vector(const PlanarTree& t);

/// Contracts every internal edge whose lower vertex is a `side` child.
/// Contracting the right-child edges gives the largest face with top vertex t;
/// contracting the left-child edges gives the largest face with bottom vertex t.
PlanarTree collapse_edges(const PlanarTree& t, ChildSide side);

/// Internal vertices in preorder (root first).
std::vector<VertexSpan> internal_vertices(const PlanarTree& t);

/// Leaf spans of the non-root internal vertices.
std::set<LeafSpan> brackets(const PlanarTree& t);
/// Inverse of `brackets`. Throws std::invalid_argument for a non-laminar family.
PlanarTree tree_from_brackets(std::size_t n, const std::set<LeafSpan>& spans);

/// s ⊂ t: t is obtained from s by contracting internal edges.
bool refines(const PlanarTree& s, const PlanarTree& t);
/// Binary trees refining t, sorted.
std::vector<PlanarTree> binary_refinements(const PlanarTree& t);

/// Every corolla replaced by a left comb (bottom vertex of the face).
PlanarTree bottom_resolution(const PlanarTree& t);
/// Every corolla replaced by a right comb (top vertex of the face).
PlanarTree top_resolution(const PlanarTree& t);

/// Replaces the leaves of `shape`, left to right, by `subtrees`.
PlanarTree substitute_leaves(const PlanarTree& shape, const std::vector<PlanarTree>& subtrees);

/// The tree c_{p+1+r} ∘_{p+1} c_q labeling the facet indexed by (p, q, r).
PlanarTree two_vertex_tree(std::size_t p, std::size_t q, std::size_t r);

}  // namespace assoc
