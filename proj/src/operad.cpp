#include "assoc/operad.hpp"

#include "assoc/diagonal.hpp"
#include "assoc/errors.hpp"

#include <algorithm>

namespace assoc {

Rational sup_diameter(const std::vector<QPoint>& points) {
  Rational best = 0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) best = std::max(best, max_abs(sub(points[a], points[b])));
  }
  return best;
}

TransitionMap::TransitionMap(const Weight& source, const Weight& target) : source_(source), target_(target) {
  validate_weight(source_);
  validate_weight(target_);
  if (source_.size() != target_.size()) throw DimensionMismatchError("transition map: arities differ");
}

const LodayRealization& TransitionMap::realization(const Weight& w) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = realizations_.find(w);
  if (it == realizations_.end()) it = realizations_.emplace(w, build_realization(w)).first;
  return it->second;
}

const Rational& TransitionMap::diameter(const Weight& w) const {
  const LodayRealization& k = realization(w);
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = diameters_.find(w);
  if (it == diameters_.end()) it = diameters_.emplace(w, sup_diameter(k.vertices.vertices)).first;
  return it->second;
}

Rational TransitionMap::error_bound(std::size_t depth) const {
  return diameter(target_) / Rational(Integer(1) << depth);
}

TransitionResult TransitionMap::operator()(const QPoint& z, std::size_t depth) const {
  if (depth < 1) throw std::invalid_argument("transition map: depth must be at least 1");
  const LodayRealization& p = realization(source_);
  if (z.size() != p.ambient_dim()) throw DimensionMismatchError("transition map: point has wrong dimension");
  if (!p.halfspaces.contains(z)) throw OutsidePolytopeError("transition map: z is not in the source");
  TransitionResult r = eval(source_, target_, z, error_bound(depth));
  if (r.error_bound > error_bound(depth)) throw ValidationError("transition map: error bound exceeded");
  return r;
}

TransitionResult TransitionMap::eval(const Weight& src, const Weight& dst, const QPoint& z,
                                    const Rational& budget) const {
  const std::size_t n = src.size();
  const LodayRealization& q = realization(dst);
  if (n <= 2) return {q.vertices.vertices.front(), 0, true};
  const LodayRealization& p = realization(src);

  auto active = p.halfspaces.active_set(z);
  if (!active.empty()) {
    PlanarTree face = p.face_from_active(active);
    auto src_blocks = face_blocks(face, src);
    auto dst_blocks = face_blocks(face, dst);
    TransitionResult out{zeros(n - 1), 0, true};
    for (std::size_t b = 0; b < src_blocks.size(); ++b) {
      const auto& coords = src_blocks[b].coordinates;
      QPoint local(coords.size());
      for (std::size_t j = 0; j < coords.size(); ++j) local[j] = z[coords[j]];
      TransitionResult r = eval(src_blocks[b].weight, dst_blocks[b].weight, local, budget);
      for (std::size_t j = 0; j < coords.size(); ++j) out.point[coords[j]] = r.point[j];
      out.error_bound = std::max(out.error_bound, r.error_bound);
      out.exact = out.exact && r.exact;
    }
    return out;
  }

  const QPoint& bm_p = p.vertex(PlanarTree::left_comb(n));
  const QPoint& tp_p = p.vertex(PlanarTree::right_comb(n));
  const QPoint& bm_q = q.vertex(PlanarTree::left_comb(n));
  const QPoint& tp_q = q.vertex(PlanarTree::right_comb(n));
  QVector axis = sub(tp_p, bm_p);
  QVector offset = sub(z, bm_p);
  Rational lambda = dot(offset, axis) / dot(axis, axis);
  if (offset == scale(lambda, axis)) return {add(bm_q, scale(lambda, sub(tp_q, bm_q))), 0, true};
  const Rational& diam = diameter(dst);
  if (budget >= diam) {
    lambda = std::clamp(lambda, Rational(0), Rational(1));
    return {add(bm_q, scale(lambda, sub(tp_q, bm_q))), diam, false};
  }

  // At most one of lo, hi is interior. The boundary half gets a quarter of the
  // budget and the interior half absorbs whatever is left of twice the budget.
  PointDiagonal d = pointwise_diagonal(oriented(p), z);
  bool lo_inside = d.lo_active.empty();
  bool hi_inside = d.hi_active.empty();
  if (lo_inside && hi_inside) throw ValidationError("transition map: both diagonal components are interior");
  const QPoint& boundary = lo_inside ? d.hi : d.lo;
  const QPoint& other = lo_inside ? d.lo : d.hi;
  TransitionResult b = eval(src, dst, boundary, budget / 4);
  TransitionResult o = eval(src, dst, other, (lo_inside || hi_inside) ? Rational(2 * budget - b.error_bound) : budget);
  const TransitionResult& lo = lo_inside ? o : b;
  const TransitionResult& hi = lo_inside ? b : o;
  return {midpoint(lo.point, hi.point), (lo.error_bound + hi.error_bound) / 2, lo.exact && hi.exact};
}

TransitionResult transition_map(const LodayRealization& src, const LodayRealization& dst, const QPoint& z,
                                 std::size_t depth) {
  return TransitionMap(src.weight, dst.weight)(z, depth);
}

TransitionResult compose(std::size_t m, std::size_t i, std::size_t n, const QPoint& x, const QPoint& y,
                         std::size_t depth) {
  if (m == 0 || n == 0) throw std::invalid_argument("compose: arities must be positive");
  if (i < 1 || i > m) throw std::out_of_range("compose: index out of range");
  if (x.size() != m - 1 || y.size() != n - 1) throw DimensionMismatchError("compose: point dimensions");
  auto check = [](std::size_t arity, const QPoint& pt) {
    if (arity >= 2 && !build_realization(standard_weight(arity)).halfspaces.contains(pt)) {
      throw OutsidePolytopeError("compose: point is not in its associahedron");
    }
  };
  check(m, x);
  check(n, y);
  if (depth < 1) throw std::invalid_argument("compose: depth must be at least 1");
  if (m == 1) return {y, 0, true};
  if (n == 1) return {x, 0, true};
  Weight target = standard_weight(m);
  target[i - 1] = static_cast<std::int64_t>(n);
  TransitionResult t = TransitionMap(standard_weight(m), target)(x, depth);
  ThetaEmbedding th = theta_embedding(i - 1, n, m - i, standard_weight(m + n - 1));
  return {th.apply(t.point, y), t.error_bound, t.exact};
}

PlanarTree compose_cellular(std::size_t m, std::size_t i, std::size_t n, const PlanarTree& f, const PlanarTree& g) {
  if (f.arity() != m || g.arity() != n) throw DimensionMismatchError("compose_cellular: label arities");
  return graft(f, i, g);
}

}  // namespace assoc
