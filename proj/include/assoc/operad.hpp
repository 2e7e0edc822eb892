#pragma once

#include "assoc/loday.hpp"

#include <cstddef>
#include <map>
#include <mutex>

namespace assoc {

/// A point of the target together with a sup-norm bound on its distance to the
/// exact transition map value. `exact` means the bound is zero.
struct TransitionResult {
  QPoint point;
  Rational error_bound;
  bool exact = false;
};

/// Sup-norm diameter of a finite point set.
Rational sup_diameter(const std::vector<QPoint>& points);

/// The transition map K_src -> K_dst between two realizations of the same arity.
///
/// Vertices go to the vertices with the same label. A point on a proper face is
/// sent through the product decomposition of that face, block by block. An
/// interior point on the segment [bm, tp] is transported affinely; any other
/// interior point is split by the diagonal, both halves are mapped and the
/// results averaged. Once the error budget reaches diam(target) an interior
/// point is projected onto the segment instead. The outcome lies in the target
/// and is within diam(target) / 2^depth of the exact value.
class TransitionMap {
 public:
  /// Throws DimensionMismatchError for different arities.
  TransitionMap(const Weight& source, const Weight& target);

  const Weight& source() const { return source_; }
  const Weight& target() const { return target_; }

  /// Throws OutsidePolytopeError when z is not in the source and
  /// std::invalid_argument for depth 0.
  TransitionResult operator()(const QPoint& z, std::size_t depth) const;

  /// diam(target) / 2^depth.
  Rational error_bound(std::size_t depth) const;

 private:
  const LodayRealization& realization(const Weight& w) const;
  const Rational& diameter(const Weight& w) const;
  TransitionResult eval(const Weight& src, const Weight& dst, const QPoint& z, const Rational& budget) const;

  Weight source_;
  Weight target_;
  mutable std::mutex mutex_;
  mutable std::map<Weight, LodayRealization> realizations_;
  mutable std::map<Weight, Rational> diameters_;
};

TransitionResult transition_map(const LodayRealization& src, const LodayRealization& dst, const QPoint& z,
                                 std::size_t depth);

/// x ∘_i y for x in K_m and y in K_n (standard weights): the transition map
/// K_m -> K_{(1,..,n,..,1)} followed by Θ into the facet c_m ∘_i c_n of K_{m+n-1}.
TransitionResult compose(std::size_t m, std::size_t i, std::size_t n, const QPoint& x, const QPoint& y,
                         std::size_t depth = 8);

/// Face-level composition: the face labeled F ∘_i G.
PlanarTree compose_cellular(std::size_t m, std::size_t i, std::size_t n, const PlanarTree& f, const PlanarTree& g);

}  // namespace assoc
