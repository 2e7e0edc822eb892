#pragma once

#include "assoc/rational.hpp"

#include <cstddef>
#include <vector>

namespace assoc {

/// Polyhedral cone at the origin, stored either by generators
/// (cone(rays) + span(lines)) or by halfspaces ({w : <a, w> >= 0, <e, w> = 0}).
class Cone {
 public:
  enum class Representation { kGenerators, kHalfspaces };

  static Cone from_generators(std::size_t dim, std::vector<QVector> rays, std::vector<QVector> lines = {});
  static Cone from_halfspaces(std::size_t dim, std::vector<QVector> normals, std::vector<QVector> equalities = {});

  std::size_t dim() const { return dim_; }
  Representation representation() const { return rep_; }

  /// Rays/lines for a generator cone; inequality/equality normals for a halfspace cone.
  const std::vector<QVector>& primary() const { return primary_; }
  const std::vector<QVector>& linear() const { return linear_; }

  /// C* = {y : <x, y> <= 0 for all x in C}.
  Cone polar() const;
  Cone negated() const;
  Cone to_halfspaces() const;
  Cone to_generators() const;
  bool contains(const QVector& w) const;

 private:
  Cone(std::size_t dim, Representation rep, std::vector<QVector> primary, std::vector<QVector> linear);

  std::size_t dim_;
  Representation rep_;
  std::vector<QVector> primary_;
  std::vector<QVector> linear_;
};

/// Whether some w satisfies <v, w> > 0 and w in -NF* ∩ NG*. Decided exactly by
/// maximizing <v, w> over that cone intersected with the box |w_i| <= 1.
bool cone_feasible(const QVector& v, const Cone& nf, const Cone& ng);

}  // namespace assoc
