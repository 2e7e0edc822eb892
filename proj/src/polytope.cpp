#include "assoc/polytope.hpp"

#include "assoc/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <numeric>

namespace assoc {

namespace detail {

namespace {

IntVector to_integers(const QVector& a) {
  QVector p = primitive(a);
  IntVector out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = numerator(p[i]);
  return out;
}

Integer idot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

void reduce(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// a * u - b * w
IntVector combine(const Integer& a, const IntVector& u, const Integer& b, const IntVector& w) {
  IntVector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = a * u[i] - b * w[i];
  reduce(r);
  return r;
}

struct Ray {
  IntVector v;
  boost::dynamic_bitset<> zero_set;
};

}  // namespace

ConeGenerators double_description(const std::vector<QVector>& inequalities, std::size_t dim) {
  const std::size_t m = inequalities.size();
  std::vector<IntVector> hs;
  hs.reserve(m);
  for (const auto& a : inequalities) {
    if (a.size() != dim) throw DimensionMismatchError("cone constraint has wrong dimension");
    hs.push_back(to_integers(a));
  }

  std::vector<IntVector> lines;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t c = 0; c < m; ++c) {
    const IntVector& h = hs[c];
    if (std::all_of(h.begin(), h.end(), [](const Integer& x) { return x == 0; })) {
      for (auto& r : rays) r.zero_set.set(c);
      continue;
    }

    std::size_t pivot = lines.size();
    for (std::size_t j = 0; j < lines.size(); ++j) {
      if (idot(h, lines[j]) != 0) {
        pivot = j;
        break;
      }
    }

    if (pivot < lines.size()) {
      IntVector l = lines[pivot];
      Integer hl = idot(h, l);
      if (hl < 0) {
        for (auto& x : l) x = -x;
        hl = -hl;
      }
      lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (auto& other : lines) {
        Integer s = idot(h, other);
        if (s != 0) other = combine(hl, other, s, l);
      }
      for (auto& r : rays) {
        Integer s = idot(h, r.v);
        if (s != 0) r.v = combine(hl, r.v, s, l);
        r.zero_set.set(c);
      }
      Ray fresh{l, boost::dynamic_bitset<>(m)};
      for (std::size_t k = 0; k < c; ++k) fresh.zero_set.set(k);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> value(rays.size());
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      value[i] = idot(h, rays[i].v);
      if (value[i] > 0) plus.push_back(i);
      if (value[i] < 0) minus.push_back(i);
    }
    if (minus.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (value[i] == 0) rays[i].zero_set.set(c);
      }
      continue;
    }

    std::vector<Ray> next;
    for (std::size_t p : plus) {
      for (std::size_t n : minus) {
        boost::dynamic_bitset<> common = rays[p].zero_set & rays[n].zero_set;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == n) continue;
          if (common.is_subset_of(rays[o].zero_set)) adjacent = false;
        }
        if (!adjacent) continue;
        // value[p] > 0 > value[n]; both coefficients positive.
        Ray r{combine(value[p], rays[n].v, value[n], rays[p].v), common};
        r.zero_set.set(c);
        next.push_back(std::move(r));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] > 0) {
        next.push_back(std::move(rays[i]));
      } else if (value[i] == 0) {
        rays[i].zero_set.set(c);
        next.push_back(std::move(rays[i]));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  out.lines = std::move(lines);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

}  // namespace detail

bool lex_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool HPolytope::contains(const QPoint& x) const {
  if (x.size() != dim) return false;
  for (const auto& e : equalities) {
    if (!e.tight_at(x)) return false;
  }
  for (const auto& c : inequalities) {
    if (!c.satisfied_by(x)) return false;
  }
  return true;
}

std::vector<std::size_t> HPolytope::active_set(const QPoint& x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    if (inequalities[i].tight_at(x)) out.push_back(i);
  }
  return out;
}

AffineChart HPolytope::equality_chart() const {
  QMatrix normals;
  QVector rhs;
  for (const auto& e : equalities) {
    if (e.normal.size() != dim) throw DimensionMismatchError("equality normal has wrong dimension");
    normals.push_back(e.normal);
    rhs.push_back(e.rhs);
  }
  return AffineChart(dim, normals, rhs);
}

namespace {

struct ChartInequalities {
  AffineChart chart;
  std::vector<QVector> normals;
  QVector rhs;
};

ChartInequalities pull_back_inequalities(const HPolytope& h) {
  ChartInequalities out{h.equality_chart(), {}, {}};
  for (const auto& c : h.inequalities) {
    if (c.normal.size() != h.dim) throw DimensionMismatchError("inequality normal has wrong dimension");
    auto [a, b] = out.chart.pull_back(c.normal, c.rhs);
    out.normals.push_back(std::move(a));
    out.rhs.push_back(std::move(b));
  }
  return out;
}

std::vector<QPoint> sorted_unique(std::vector<QPoint> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

VPolytope enumerate_double_description(const HPolytope& h) {
  ChartInequalities ci = pull_back_inequalities(h);
  const std::size_t k = ci.chart.dim();
  std::vector<QVector> cone;
  cone.push_back(unit_vector(k + 1, k));  // t >= 0
  for (std::size_t i = 0; i < ci.normals.size(); ++i) {
    QVector row = ci.normals[i];
    row.push_back(-ci.rhs[i]);
    cone.push_back(std::move(row));
  }
  detail::ConeGenerators gens = detail::double_description(cone, k + 1);

  std::vector<QPoint> verts;
  bool recession = !gens.lines.empty();
  for (const auto& r : gens.rays) {
    if (r[k] == 0) {
      recession = true;
      continue;
    }
    QVector y(k);
    for (std::size_t i = 0; i < k; ++i) y[i] = Rational(r[i], r[k]);
    verts.push_back(ci.chart.lift(y));
  }
  if (verts.empty()) throw InfeasibleError();
  if (recession) throw UnboundedError();
  return VPolytope{h.dim, sorted_unique(std::move(verts)), {}};
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

VPolytope enumerate_brute_force(const HPolytope& h) {
  ChartInequalities ci = pull_back_inequalities(h);
  const std::size_t k = ci.chart.dim();
  auto feasible = [&](const QVector& y) {
    for (std::size_t i = 0; i < ci.normals.size(); ++i) {
      if (dot(ci.normals[i], y) < ci.rhs[i]) return false;
    }
    return true;
  };
  std::vector<QPoint> verts;
  if (k == 0) {
    if (feasible(QVector{})) verts.push_back(ci.chart.lift(QVector{}));
  } else {
    for_each_subset(ci.normals.size(), k, [&](const std::vector<std::size_t>& s) {
      QMatrix a;
      QVector b;
      for (auto i : s) {
        a.push_back(ci.normals[i]);
        b.push_back(ci.rhs[i]);
      }
      auto y = solve_square(std::move(a), std::move(b));
      if (y && feasible(*y)) verts.push_back(ci.chart.lift(*y));
    });
  }
  if (verts.empty()) throw InfeasibleError();
  return VPolytope{h.dim, sorted_unique(std::move(verts)), {}};
}

}  // namespace

VPolytope vertex_enumeration(const HPolytope& h, EnumerationMethod method) {
  return method == EnumerationMethod::kBruteForce ? enumerate_brute_force(h) : enumerate_double_description(h);
}

HPolytope facet_recovery(const VPolytope& v) {
  if (v.vertices.empty()) throw InfeasibleError("facet recovery of an empty vertex list");
  AffineChart chart = AffineChart::affine_hull(v.vertices);
  HPolytope out;
  out.dim = v.dim;
  for (std::size_t k = 0; k < chart.equality_normals().size(); ++k) {
    QVector row = chart.equality_normals()[k];
    row.push_back(chart.equality_rhs()[k]);
    row = primitive(row);
    Rational rhs = row.back();
    row.pop_back();
    out.equalities.push_back({std::move(row), rhs, {}});
  }
  const std::size_t k = chart.dim();
  if (k == 0) return out;

  std::vector<QVector> cone;
  for (const auto& p : v.vertices) {
    QVector row = chart.project(p);
    row.push_back(Rational(-1));
    cone.push_back(std::move(row));
  }
  detail::ConeGenerators gens = detail::double_description(cone, k + 1);
  if (!gens.lines.empty()) throw ValidationError("facet cone has lineality for a full-dimensional point set");
  for (const auto& r : gens.rays) {
    QVector a(k);
    bool nonzero = false;
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = Rational(r[i]);
      nonzero = nonzero || r[i] != 0;
    }
    if (!nonzero) continue;
    QVector row = chart.push_forward(a);
    row.push_back(Rational(r[k]));
    row = primitive(row);
    Rational rhs = row.back();
    row.pop_back();
    out.inequalities.push_back({std::move(row), rhs, {}});
  }
  std::sort(out.inequalities.begin(), out.inequalities.end(), [](const auto& x, const auto& y) {
    if (x.normal != y.normal) return lex_less(x.normal, y.normal);
    return x.rhs < y.rhs;
  });
  return out;
}

HPolytope intersect(const HPolytope& a, const HPolytope& b) {
  if (a.dim != b.dim) throw DimensionMismatchError("intersect: ambient dimensions differ");
  HPolytope out = a;
  out.equalities.insert(out.equalities.end(), b.equalities.begin(), b.equalities.end());
  out.inequalities.insert(out.inequalities.end(), b.inequalities.begin(), b.inequalities.end());
  return out;
}

HPolytope reflect(const HPolytope& p, const QPoint& z) {
  if (z.size() != p.dim) throw DimensionMismatchError("reflect: point has wrong dimension");
  auto mirror = [&](const LinearConstraint& c) {
    return LinearConstraint{negate(c.normal), c.rhs - 2 * dot(c.normal, z),
                            c.label.empty() ? std::string{} : "reflect:" + c.label};
  };
  HPolytope out;
  out.dim = p.dim;
  for (const auto& e : p.equalities) out.equalities.push_back(mirror(e));
  for (const auto& c : p.inequalities) out.inequalities.push_back(mirror(c));
  return out;
}

QPoint argmin_vertex(const std::vector<QPoint>& vertices, const QVector& c) {
  if (vertices.empty()) throw InfeasibleError();
  std::size_t best = 0;
  Rational best_value = dot(c, vertices[0]);
  bool tie = false;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    Rational val = dot(c, vertices[i]);
    if (val < best_value) {
      best = i;
      best_value = val;
      tie = false;
    } else if (val == best_value) {
      tie = true;
    }
  }
  if (tie) throw NonUniqueOptimumError();
  return vertices[best];
}

QPoint argmin_vertex(const HPolytope& p, const QVector& c) {
  if (c.size() != p.dim) throw DimensionMismatchError("argmin_vertex: objective has wrong dimension");
  return argmin_vertex(vertex_enumeration(p).vertices, c);
}

QPoint argmax_vertex(const HPolytope& p, const QVector& c) { return argmin_vertex(p, negate(c)); }

Rational maximize(const HPolytope& p, const QVector& c) {
  VPolytope v = vertex_enumeration(p);
  Rational best = dot(c, v.vertices.front());
  for (const auto& x : v.vertices) best = std::max(best, dot(c, x));
  return best;
}

std::size_t affine_dimension(const std::vector<QPoint>& points) {
  if (points.empty()) throw InfeasibleError("affine dimension of an empty set");
  QMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points.front()));
  return rank(diffs, points.front().size());
}

std::vector<QPoint> extreme_points(const std::vector<QPoint>& points) {
  if (points.empty()) return {};
  VPolytope v{points.front().size(), sorted_unique(points), {}};
  if (v.vertices.size() == 1) return v.vertices;
  return vertex_enumeration(facet_recovery(v)).vertices;
}

namespace {

void triangulate(const std::vector<QPoint>& pts, const std::vector<std::size_t>& idx,
                 std::vector<std::vector<std::size_t>>& out, std::vector<std::size_t>& prefix) {
  std::vector<QPoint> sub_pts;
  for (auto i : idx) sub_pts.push_back(pts[i]);
  if (affine_dimension(sub_pts) == 0) {
    prefix.push_back(idx.front());
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  const std::size_t apex = idx.front();
  HPolytope h = facet_recovery(VPolytope{pts.front().size(), sub_pts, {}});
  prefix.push_back(apex);
  for (const auto& f : h.inequalities) {
    if (f.tight_at(pts[apex])) continue;
    std::vector<std::size_t> on_facet;
    for (auto i : idx) {
      if (f.tight_at(pts[i])) on_facet.push_back(i);
    }
    triangulate(pts, on_facet, out, prefix);
  }
  prefix.pop_back();
}

}  // namespace

std::vector<std::vector<std::size_t>> pulling_triangulation(const std::vector<QPoint>& points) {
  std::vector<std::vector<std::size_t>> out;
  if (points.empty()) return out;
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> prefix;
  triangulate(points, idx, out, prefix);
  return out;
}

Rational volume(const std::vector<QPoint>& points, const AffineChart& chart) {
  if (points.empty()) return 0;
  std::vector<QPoint> ys;
  for (const auto& p : points) {
    if (!chart.contains(p)) throw DimensionMismatchError("volume: point outside the chart");
    ys.push_back(chart.project(p));
  }
  const std::size_t k = chart.dim();
  if (k == 0) return 1;
  if (affine_dimension(ys) < k) return 0;
  Rational factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) factorial *= i;
  Rational total = 0;
  for (const auto& simplex : pulling_triangulation(ys)) {
    if (simplex.size() != k + 1) continue;
    QMatrix m;
    for (std::size_t i = 1; i <= k; ++i) m.push_back(sub(ys[simplex[i]], ys[simplex[0]]));
    total += abs(determinant(m));
  }
  return total / factorial;
}

}  // namespace assoc
