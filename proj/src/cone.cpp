#include "assoc/cone.hpp"

#include "assoc/errors.hpp"
#include "assoc/polytope.hpp"

namespace assoc {

namespace {

void check_dims(std::size_t dim, const std::vector<QVector>& vs) {
  for (const auto& v : vs) {
    if (v.size() != dim) throw DimensionMismatchError("cone vector has wrong dimension");
  }
}

std::vector<QVector> negate_all(const std::vector<QVector>& vs) {
  std::vector<QVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(negate(v));
  return out;
}

QVector to_rational(const detail::IntVector& v) {
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

}  // namespace

Cone::Cone(std::size_t dim, Representation rep, std::vector<QVector> primary, std::vector<QVector> linear)
    : dim_(dim), rep_(rep), primary_(std::move(primary)), linear_(std::move(linear)) {
  check_dims(dim_, primary_);
  check_dims(dim_, linear_);
}

Cone Cone::from_generators(std::size_t dim, std::vector<QVector> rays, std::vector<QVector> lines) {
  return Cone(dim, Representation::kGenerators, std::move(rays), std::move(lines));
}

Cone Cone::from_halfspaces(std::size_t dim, std::vector<QVector> normals, std::vector<QVector> equalities) {
  return Cone(dim, Representation::kHalfspaces, std::move(normals), std::move(equalities));
}

Cone Cone::polar() const {
  if (rep_ == Representation::kGenerators) {
    // <r, y> <= 0 for every ray, <l, y> = 0 for every line.
    return from_halfspaces(dim_, negate_all(primary_), linear_);
  }
  // Polar of {<a, w> >= 0, <e, w> = 0} is cone(-a) + span(e).
  return from_generators(dim_, negate_all(primary_), linear_);
}

Cone Cone::negated() const { return Cone(dim_, rep_, negate_all(primary_), linear_); }

Cone Cone::to_generators() const {
  if (rep_ == Representation::kGenerators) return *this;
  std::vector<QVector> constraints = primary_;
  for (const auto& e : linear_) {
    constraints.push_back(e);
    constraints.push_back(negate(e));
  }
  detail::ConeGenerators g = detail::double_description(constraints, dim_);
  std::vector<QVector> rays, lines;
  for (const auto& r : g.rays) rays.push_back(to_rational(r));
  for (const auto& l : g.lines) lines.push_back(to_rational(l));
  return from_generators(dim_, std::move(rays), std::move(lines));
}

Cone Cone::to_halfspaces() const {
  if (rep_ == Representation::kHalfspaces) return *this;
  return polar().to_generators().polar();
}

bool Cone::contains(const QVector& w) const {
  if (w.size() != dim_) throw DimensionMismatchError("cone membership: wrong dimension");
  Cone h = to_halfspaces();
  for (const auto& a : h.primary_) {
    if (dot(a, w) < 0) return false;
  }
  for (const auto& e : h.linear_) {
    if (dot(e, w) != 0) return false;
  }
  return true;
}

bool cone_feasible(const QVector& v, const Cone& nf, const Cone& ng) {
  const std::size_t d = v.size();
  if (nf.dim() != d || ng.dim() != d) throw DimensionMismatchError("cone_feasible: dimension mismatch");
  Cone a = nf.to_generators().polar().negated();
  Cone b = ng.to_generators().polar();

  HPolytope box;
  box.dim = d;
  for (const Cone* c : {&a, &b}) {
    for (const auto& n : c->primary()) box.inequalities.push_back({n, 0, {}});
    for (const auto& e : c->linear()) box.equalities.push_back({e, 0, {}});
  }
  for (std::size_t i = 0; i < d; ++i) {
    box.inequalities.push_back({unit_vector(d, i), -1, {}});
    box.inequalities.push_back({negate(unit_vector(d, i)), -1, {}});
  }
  return maximize(box, v) > 0;
}

}  // namespace assoc
