#include "assoc/loday.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace assoc {

Weight standard_weight(std::size_t n) { return Weight(n, 1); }

void validate_weight(const Weight& w) {
  if (w.empty()) throw std::invalid_argument("weight must be nonempty");
  for (auto x : w) {
    if (x < 1) throw std::invalid_argument("weights must be positive integers");
  }
}

Rational pair_sum(const Weight& w, std::size_t first, std::size_t last) {
  Integer s = 0, sq = 0;
  for (std::size_t k = first; k <= last; ++k) {
    s += w[k - 1];
    sq += Integer(w[k - 1]) * w[k - 1];
  }
  return Rational((s * s - sq) / 2);
}

QPoint loday_point(const PlanarTree& t, const Weight& w) {
  if (!t.is_binary()) throw std::invalid_argument("loday_point: tree is not binary");
  if (t.arity() != w.size()) throw DimensionMismatchError("loday_point: arity does not match weight length");
  QPoint out;
  out.reserve(w.size() - 1);
  std::size_t next_leaf = 0;
  // Returns the weight below u, appending coordinates in in-order.
  std::function<Integer(const PlanarTree&)> rec = [&](const PlanarTree& u) -> Integer {
    if (u.is_leaf()) return Integer(w[next_leaf++]);
    Integer a = rec(u.children()[0]);
    std::size_t slot = out.size();
    out.emplace_back();
    Integer b = rec(u.children()[1]);
    out[slot] = Rational(a * b);
    return a + b;
  };
  rec(t);
  return out;
}

QVector default_orientation(std::size_t arity) {
  QVector v;
  for (std::size_t k = arity; k-- > 1;) v.push_back(Rational(k));
  return v;
}

bool is_strictly_decreasing(const QVector& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i - 1] > v[i])) return false;
  }
  return true;
}

const QPoint& LodayRealization::vertex(const PlanarTree& t) const {
  auto it = vertex_index_.find(t.encoding());
  if (it == vertex_index_.end()) throw std::invalid_argument("not a vertex label of this realization: " + t.encoding());
  return vertices.vertices[it->second];
}

std::vector<std::size_t> LodayRealization::active_facets(const PlanarTree& t) const {
  if (t.arity() != arity()) throw DimensionMismatchError("face label arity does not match");
  auto bs = brackets(t);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < facet_spans.size(); ++j) {
    if (bs.count(facet_spans[j])) out.push_back(j);
  }
  return out;
}

PlanarTree LodayRealization::face_from_active(const std::vector<std::size_t>& active) const {
  std::set<LeafSpan> spans;
  for (auto j : active) spans.insert(facet_spans.at(j));
  return tree_from_brackets(arity(), spans);
}

LodayRealization build_realization(const Weight& w, std::optional<QVector> orientation) {
  validate_weight(w);
  const std::size_t n = w.size();
  LodayRealization k;
  k.weight = w;
  k.orientation = orientation ? *orientation : default_orientation(n);
  if (k.orientation.size() != n - 1) throw DimensionMismatchError("orientation vector must have length n-1");
  if (!is_strictly_decreasing(k.orientation)) {
    throw std::invalid_argument("orientation vector must have strictly decreasing coordinates");
  }

  k.vertex_trees = enumerate_binary_trees(n);
  k.vertices.dim = n - 1;
  for (std::size_t i = 0; i < k.vertex_trees.size(); ++i) {
    const auto& t = k.vertex_trees[i];
    k.vertices.vertices.push_back(t.is_leaf() ? QPoint{} : loday_point(t, w));
    k.vertices.labels.push_back(t.encoding());
    k.vertex_index_[t.encoding()] = i;
  }

  k.halfspaces.dim = n - 1;
  if (n >= 2) {
    k.halfspaces.equalities.push_back({QVector(n - 1, Rational(1)), pair_sum(w, 1, n), "sum"});
  }
  for (std::size_t q = 2; q + 1 <= n; ++q) {
    for (std::size_t p = 0; p + q <= n; ++p) {
      std::size_t r = n - p - q;
      QVector a(n - 1);
      for (std::size_t c = p; c + 1 < p + q; ++c) a[c] = 1;
      PlanarTree label = two_vertex_tree(p, q, r);
      k.halfspaces.inequalities.push_back({a, pair_sum(w, p + 1, p + q), label.encoding()});
      k.facet_trees.push_back(label);
      k.facet_spans.push_back({p + 1, p + q});
    }
  }

  std::set<QPoint> expected(k.vertices.vertices.begin(), k.vertices.vertices.end());
  auto found = vertex_enumeration(k.halfspaces).vertices;
  if (std::set<QPoint>(found.begin(), found.end()) != expected || expected.size() != k.vertex_trees.size()) {
    throw ValidationError("Loday realization: V- and H-representations disagree");
  }
  return k;
}

Face face_of_tree(const LodayRealization& k, const PlanarTree& t) {
  if (t.arity() != k.arity()) throw DimensionMismatchError("face_of_tree: arity mismatch");
  Face f{t, binary_refinements(t), {}};
  for (const auto& s : f.vertex_trees) f.vertices.push_back(k.vertex(s));
  return f;
}

std::pair<PlanarTree, PlanarTree> face_min_max(const LodayRealization& k, const Face& f) {
  PlanarTree bm = bottom_resolution(f.label);
  PlanarTree tp = top_resolution(f.label);
  if (k.arity() >= 2) {
    if (argmin_vertex(f.vertices, k.orientation) != k.vertex(bm) ||
        argmin_vertex(f.vertices, negate(k.orientation)) != k.vertex(tp)) {
      throw ValidationError("face_min_max: comb resolution disagrees with the orientation");
    }
  }
  return {bm, tp};
}

std::vector<FaceBlock> face_blocks(const PlanarTree& t, const Weight& w) {
  if (t.arity() != w.size()) throw DimensionMismatchError("face_blocks: arity mismatch");
  std::vector<FaceBlock> out;
  for (const auto& v : internal_vertices(t)) {
    FaceBlock b;
    for (std::size_t j = 0; j < v.children.size(); ++j) {
      auto [a, z] = v.children[j];
      std::int64_t s = 0;
      for (std::size_t k = a; k <= z; ++k) s += w[k - 1];
      b.weight.push_back(s);
      if (j + 1 < v.children.size()) b.coordinates.push_back(z - 1);
    }
    out.push_back(std::move(b));
  }
  return out;
}

QPoint ThetaEmbedding::apply(const QPoint& x, const QPoint& y) const {
  if (x.size() != p + r || y.size() != q - 1) throw DimensionMismatchError("Θ: argument dimensions");
  QPoint xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  QPoint out(permutation.size());
  for (std::size_t k = 0; k < permutation.size(); ++k) out[k] = xy[permutation[k]];
  return out;
}

std::pair<QPoint, QPoint> ThetaEmbedding::split(const QPoint& z) const {
  if (z.size() != permutation.size()) throw DimensionMismatchError("Θ inverse: argument dimension");
  QPoint xy(z.size());
  for (std::size_t k = 0; k < permutation.size(); ++k) xy[permutation[k]] = z[k];
  return {QPoint(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(p + r)),
          QPoint(xy.begin() + static_cast<std::ptrdiff_t>(p + r), xy.end())};
}

ThetaEmbedding theta_embedding(std::size_t p, std::size_t q, std::size_t r, const Weight& w) {
  const std::size_t n = p + q + r;
  if (w.size() != n) throw DimensionMismatchError("theta_embedding: p + q + r must equal the weight length");
  if (q < 2 || q + 1 > n) throw std::out_of_range("theta_embedding: need 2 <= q <= n-1");
  validate_weight(w);
  ThetaEmbedding th;
  th.p = p;
  th.q = q;
  th.r = r;
  th.outer.assign(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  std::int64_t merged = 0;
  for (std::size_t k = p; k < p + q; ++k) merged += w[k];
  th.outer.push_back(merged);
  th.outer.insert(th.outer.end(), w.begin() + static_cast<std::ptrdiff_t>(p + q), w.end());
  th.inner.assign(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + q));
  // (x_1..x_p, y_1..y_{q-1}, x_{p+1}..x_{p+r}); y_j sits at index p + r + j - 1 of (x, y).
  for (std::size_t k = 0; k < p; ++k) th.permutation.push_back(k);
  for (std::size_t j = 0; j + 1 < q; ++j) th.permutation.push_back(p + r + j);
  for (std::size_t k = p; k < p + r; ++k) th.permutation.push_back(k);
  return th;
}

std::size_t ProductRealization::dim() const {
  std::size_t d = 0;
  for (const auto& k : factors) d += k.dim();
  return d;
}

std::vector<QPoint> ProductRealization::split(const QPoint& z) const {
  if (z.size() != ambient_dim()) throw DimensionMismatchError("product split: wrong dimension");
  std::vector<QPoint> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    auto first = z.begin() + static_cast<std::ptrdiff_t>(offsets[i]);
    out.emplace_back(first, first + static_cast<std::ptrdiff_t>(factors[i].ambient_dim()));
  }
  return out;
}

QPoint ProductRealization::join(const std::vector<QPoint>& parts) const {
  if (parts.size() != factors.size()) throw DimensionMismatchError("product join: wrong number of parts");
  QPoint out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != factors[i].ambient_dim()) throw DimensionMismatchError("product join: wrong part dimension");
    out.insert(out.end(), parts[i].begin(), parts[i].end());
  }
  return out;
}

std::vector<std::size_t> ProductRealization::active_facets(const Forest& f) const {
  if (f.trees.size() != factors.size()) throw DimensionMismatchError("forest shape does not match product");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (auto j : factors[i].active_facets(f.trees[i])) out.push_back(facet_offsets[i] + j);
  }
  return out;
}

Forest ProductRealization::face_from_active(const std::vector<std::size_t>& active) const {
  std::vector<std::vector<std::size_t>> local(factors.size());
  for (auto j : active) {
    std::size_t i = std::upper_bound(facet_offsets.begin(), facet_offsets.end(), j) - facet_offsets.begin() - 1;
    local[i].push_back(j - facet_offsets[i]);
  }
  Forest f;
  for (std::size_t i = 0; i < factors.size(); ++i) f.trees.push_back(factors[i].face_from_active(local[i]));
  return f;
}

std::vector<QPoint> ProductRealization::face_vertices(const Forest& f) const {
  if (f.trees.size() != factors.size()) throw DimensionMismatchError("forest shape does not match product");
  std::vector<QPoint> out{QPoint{}};
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<QPoint> next;
    for (const auto& s : binary_refinements(f.trees[i])) {
      const QPoint& v = factors[i].vertex(s);
      for (const auto& prefix : out) {
        QPoint p = prefix;
        p.insert(p.end(), v.begin(), v.end());
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::pair<Forest, Forest> ProductRealization::face_min_max(const Forest& f) const {
  Forest bm, tp;
  for (const auto& t : f.trees) {
    bm.trees.push_back(bottom_resolution(t));
    tp.trees.push_back(top_resolution(t));
  }
  return {bm, tp};
}

std::vector<Forest> ProductRealization::faces() const {
  std::vector<Forest> out{Forest{}};
  for (const auto& k : factors) {
    std::vector<Forest> next;
    for (const auto& prefix : out) {
      for (const auto& t : enumerate_planar_trees(k.arity())) {
        Forest f = prefix;
        f.trees.push_back(t);
        next.push_back(std::move(f));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Forest ProductRealization::top_face() const {
  Forest f;
  for (const auto& k : factors) f.trees.push_back(PlanarTree::corolla(k.arity()));
  return f;
}

ProductRealization product_realization(std::vector<LodayRealization> ks, std::optional<QVector> orientation) {
  if (ks.empty()) throw std::invalid_argument("product of an empty list");
  ProductRealization pr;
  pr.factors = std::move(ks);
  std::size_t coord = 0, facet = 0;
  pr.halfspaces.dim = 0;
  for (const auto& k : pr.factors) pr.halfspaces.dim += k.ambient_dim();
  const std::size_t dim = pr.halfspaces.dim;
  for (std::size_t i = 0; i < pr.factors.size(); ++i) {
    const auto& k = pr.factors[i];
    pr.offsets.push_back(coord);
    pr.facet_offsets.push_back(facet);
    auto embed = [&](const LinearConstraint& c, const std::string& label) {
      QVector a(dim);
      std::copy(c.normal.begin(), c.normal.end(), a.begin() + static_cast<std::ptrdiff_t>(coord));
      return LinearConstraint{a, c.rhs, label};
    };
    for (const auto& e : k.halfspaces.equalities) {
      pr.halfspaces.equalities.push_back(embed(e, std::to_string(i) + ":" + e.label));
    }
    for (std::size_t j = 0; j < k.halfspaces.inequalities.size(); ++j) {
      Forest label;
      for (std::size_t o = 0; o < pr.factors.size(); ++o) {
        label.trees.push_back(o == i ? k.facet_trees[j] : PlanarTree::corolla(pr.factors[o].arity()));
      }
      pr.halfspaces.inequalities.push_back(embed(k.halfspaces.inequalities[j], label.encoding()));
    }
    coord += k.ambient_dim();
    facet += k.halfspaces.inequalities.size();
  }

  if (orientation) {
    if (orientation->size() != dim) throw DimensionMismatchError("product orientation has wrong length");
    for (std::size_t i = 0; i < pr.factors.size(); ++i) {
      auto first = orientation->begin() + static_cast<std::ptrdiff_t>(pr.offsets[i]);
      QVector block(first, first + static_cast<std::ptrdiff_t>(pr.factors[i].ambient_dim()));
      if (!is_strictly_decreasing(block)) {
        throw std::invalid_argument("product orientation must be strictly decreasing on each block");
      }
    }
    pr.orientation = *orientation;
  } else {
    for (const auto& k : pr.factors) pr.orientation.insert(pr.orientation.end(), k.orientation.begin(), k.orientation.end());
  }

  pr.vertex_forests = {Forest{}};
  for (const auto& k : pr.factors) {
    std::vector<Forest> next;
    for (const auto& prefix : pr.vertex_forests) {
      for (const auto& t : k.vertex_trees) {
        Forest f = prefix;
        f.trees.push_back(t);
        next.push_back(std::move(f));
      }
    }
    pr.vertex_forests = std::move(next);
  }
  pr.vertices.dim = dim;
  for (const auto& f : pr.vertex_forests) {
    QPoint p;
    for (std::size_t i = 0; i < pr.factors.size(); ++i) {
      const auto& v = pr.factors[i].vertex(f.trees[i]);
      p.insert(p.end(), v.begin(), v.end());
    }
    pr.vertices.vertices.push_back(std::move(p));
    pr.vertices.labels.push_back(f.encoding());
  }
  return pr;
}

}  // namespace assoc
