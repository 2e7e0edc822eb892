#include "assoc/diagonal.hpp"

#include "assoc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace assoc {

OrientedPolytope oriented(const LodayRealization& k) {
  return {k.halfspaces, k.vertices.vertices, k.orientation};
}

OrientedPolytope oriented(const ProductRealization& p) {
  return {p.halfspaces, p.vertices.vertices, p.orientation};
}

PointDiagonal pointwise_diagonal(const OrientedPolytope& p, const QPoint& z) {
  if (z.size() != p.halfspaces.dim) throw DimensionMismatchError("diagonal: point has wrong dimension");
  if (!p.halfspaces.contains(z)) throw OutsidePolytopeError("diagonal: z is not in the polytope");
  HPolytope both = intersect(p.halfspaces, reflect(p.halfspaces, z));
  auto verts = vertex_enumeration(both).vertices;
  PointDiagonal d;
  d.z = z;
  d.lo = argmin_vertex(verts, p.orientation);
  d.hi = argmin_vertex(verts, negate(p.orientation));
  if (d.hi != sub(scale(2, z), d.lo)) throw ValidationError("diagonal: components are not symmetric about z");
  d.lo_active = p.halfspaces.active_set(d.lo);
  d.hi_active = p.halfspaces.active_set(d.hi);
  return d;
}

DiagonalResult pointwise_diagonal(const ProductRealization& p, const QPoint& z) {
  PointDiagonal d = pointwise_diagonal(oriented(p), z);
  return {d.z, d.lo, d.hi, p.face_from_active(d.lo_active), p.face_from_active(d.hi_active)};
}

DiagonalResult pointwise_diagonal(const LodayRealization& k, const QPoint& z) {
  PointDiagonal d = pointwise_diagonal(oriented(k), z);
  return {d.z, d.lo, d.hi, Forest{{k.face_from_active(d.lo_active)}}, Forest{{k.face_from_active(d.hi_active)}}};
}

namespace {

std::vector<MatchingPair> tamari_pairs(const std::vector<Forest>& faces, std::size_t dim) {
  std::vector<MatchingPair> out;
  for (const auto& f : faces) {
    Forest tp;
    for (const auto& t : f.trees) tp.trees.push_back(top_resolution(t));
    for (const auto& g : faces) {
      if (f.dimension() + g.dimension() != dim) continue;
      Forest bm;
      for (const auto& t : g.trees) bm.trees.push_back(bottom_resolution(t));
      if (tamari_leq(tp, bm)) out.push_back({f, g});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<MatchingPair> magical_pairs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("arity must be positive");
  std::vector<Forest> faces;
  for (const auto& t : enumerate_planar_trees(n)) faces.push_back(Forest{{t}});
  return tamari_pairs(faces, n >= 2 ? n - 2 : 0);
}

std::vector<MatchingPair> magical_pairs(const ProductRealization& p) { return tamari_pairs(p.faces(), p.dim()); }

Cone normal_cone(const HPolytope& h, const std::vector<std::size_t>& active) {
  std::vector<QVector> rays, lines;
  for (auto j : active) rays.push_back(negate(h.inequalities.at(j).normal));
  for (const auto& e : h.equalities) lines.push_back(e.normal);
  return Cone::from_generators(h.dim, std::move(rays), std::move(lines));
}

std::vector<MatchingPair> normal_cone_pairs(const ProductRealization& p) {
  auto faces = p.faces();
  std::vector<Cone> cones;
  cones.reserve(faces.size());
  for (const auto& f : faces) cones.push_back(normal_cone(p.halfspaces, p.active_facets(f)));
  std::vector<MatchingPair> out;
  for (std::size_t a = 0; a < faces.size(); ++a) {
    for (std::size_t b = 0; b < faces.size(); ++b) {
      if (faces[a].dimension() + faces[b].dimension() != p.dim()) continue;
      if (!cone_feasible(p.orientation, cones[a], cones[b])) out.push_back({faces[a], faces[b]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MatchingPair> normal_cone_pairs(const LodayRealization& k) {
  return normal_cone_pairs(product_realization({k}));
}

std::vector<QPoint> sample_points(const std::vector<QPoint>& vertices, std::size_t dim, std::size_t count,
                                  std::uint64_t seed, int denominator) {
  if (vertices.empty()) throw InfeasibleError("sampling from an empty vertex list");
  if (denominator < 1) throw std::invalid_argument("sampling denominator must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(0, denominator);
  std::vector<QPoint> out;
  out.reserve(count);
  std::vector<std::size_t> order(vertices.size());
  for (std::size_t trial = 0; trial < count; ++trial) {
    std::iota(order.begin(), order.end(), 0);
    std::size_t used = vertices.size();
    if (trial % 2 == 1) {
      used = std::min(vertices.size(), dim + 1);
      for (std::size_t i = 0; i < used; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
        std::swap(order[i], order[pick(rng)]);
      }
    }
    std::vector<Integer> w(used);
    Integer total = 0;
    for (auto& x : w) {
      x = coef(rng);
      total += x;
    }
    if (total == 0) {
      w[0] = 1;
      total = 1;
    }
    QPoint z = zeros(vertices.front().size());
    for (std::size_t i = 0; i < used; ++i) {
      if (w[i] != 0) z = add(z, scale(Rational(w[i], total), vertices[order[i]]));
    }
    out.push_back(std::move(z));
  }
  return out;
}

std::vector<DiagonalResult> sample_diagonals(const ProductRealization& p, std::size_t trials, std::uint64_t seed) {
  std::vector<DiagonalResult> out;
  for (const auto& z : sample_points(p.vertices.vertices, p.dim(), trials, seed)) out.push_back(pointwise_diagonal(p, z));
  return out;
}

std::vector<MatchingPair> sample_oracle(const ProductRealization& p, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("sample_oracle: trials must be positive");
  return hit_pairs(p, sample_points(p.vertices.vertices, p.dim(), trials, seed));
}

std::vector<MatchingPair> sample_oracle(const LodayRealization& k, std::size_t trials, std::uint64_t seed) {
  return sample_oracle(product_realization({k}), trials, seed);
}

std::vector<MatchingPair> hit_pairs(const ProductRealization& p, const std::vector<QPoint>& points) {
  std::set<MatchingPair> hits;
  for (const auto& z : points) {
    DiagonalResult d = pointwise_diagonal(p, z);
    if (d.lo_face.dimension() + d.hi_face.dimension() == p.dim()) hits.insert({d.lo_face, d.hi_face});
  }
  return {hits.begin(), hits.end()};
}

std::vector<QPoint> face_pair_midpoints(const ProductRealization& p) {
  std::vector<std::pair<Forest, QPoint>> centers;
  for (const auto& f : p.faces()) {
    auto vs = p.face_vertices(f);
    QPoint c = zeros(p.ambient_dim());
    for (const auto& v : vs) c = add(c, v);
    centers.emplace_back(f, scale(Rational(1, static_cast<long>(vs.size())), c));
  }
  std::vector<QPoint> out;
  for (const auto& [f, bf] : centers) {
    for (const auto& [g, bg] : centers) {
      if (f.dimension() + g.dimension() == p.dim()) out.push_back(midpoint(bf, bg));
    }
  }
  return out;
}

std::vector<MatchingPair> barycenter_oracle(const ProductRealization& p) { return hit_pairs(p, face_pair_midpoints(p)); }

std::vector<MatchingPair> barycenter_oracle(const LodayRealization& k) {
  return barycenter_oracle(product_realization({k}));
}

SubdivisionComplex subdivision(const ProductRealization& p, bool check_disjoint) {
  SubdivisionComplex sc;
  sc.pairs = magical_pairs(p);
  const std::size_t d = p.dim();
  AffineChart chart = AffineChart::affine_hull(p.vertices.vertices);
  sc.polytope_volume = volume(p.vertices.vertices, chart);
  sc.total_volume = 0;
  std::vector<HPolytope> cell_h;
  for (const auto& pair : sc.pairs) {
    std::vector<QPoint> pts;
    for (const auto& f : p.face_vertices(pair.F)) {
      for (const auto& g : p.face_vertices(pair.G)) pts.push_back(midpoint(f, g));
    }
    std::vector<QPoint> ext = extreme_points(pts);
    if (affine_dimension(ext) != d) throw ValidationError("subdivision: cell of wrong dimension");
    Rational vol = volume(ext, chart);
    sc.total_volume += vol;
    sc.volumes.push_back(vol);
    if (check_disjoint) cell_h.push_back(facet_recovery(VPolytope{p.ambient_dim(), ext, {}}));
    sc.cells.push_back(std::move(ext));
  }
  if (sc.total_volume != sc.polytope_volume) throw ValidationError("subdivision: cell volumes do not add up");
  for (std::size_t i = 0; i < cell_h.size(); ++i) {
    for (std::size_t j = i + 1; j < cell_h.size(); ++j) {
      try {
        auto common = vertex_enumeration(intersect(cell_h[i], cell_h[j])).vertices;
        if (affine_dimension(common) >= d) throw ValidationError("subdivision: two cells overlap");
      } catch (const InfeasibleError&) {
      }
    }
  }
  return sc;
}

SubdivisionComplex subdivision(const LodayRealization& k, bool check_disjoint) {
  return subdivision(product_realization({k}), check_disjoint);
}

QPoint AffineMap::apply(const QPoint& x) const {
  QPoint out = offset;
  for (std::size_t i = 0; i < linear.size(); ++i) {
    if (linear[i].size() != x.size()) throw DimensionMismatchError("affine map: argument dimension");
    out[i] += dot(linear[i], x);
  }
  return out;
}

std::vector<LowerCell> lower_faces(const VPolytope& p, const AffineMap& pi, const QVector& psi) {
  if (p.vertices.empty()) throw InfeasibleError("lower_faces of an empty polytope");
  if (psi.size() != p.dim || pi.offset.size() != pi.linear.size()) {
    throw DimensionMismatchError("lower_faces: map dimensions");
  }
  const std::size_t m = pi.offset.size();
  std::vector<QPoint> lifted;
  for (const auto& v : p.vertices) {
    QPoint q = pi.apply(v);
    q.push_back(dot(psi, v));
    lifted.push_back(std::move(q));
  }
  auto make_cell = [&](std::vector<std::size_t> idx) {
    LowerCell c;
    c.vertices = std::move(idx);
    std::vector<QPoint> src, img;
    for (auto i : c.vertices) {
      src.push_back(p.vertices[i]);
      img.push_back(pi.apply(p.vertices[i]));
    }
    c.dim = affine_dimension(src);
    c.projected_dim = affine_dimension(img);
    return c;
  };

  AffineChart hull = AffineChart::affine_hull(lifted);
  bool vertical = true;
  for (const auto& row : hull.equality_normals()) vertical = vertical && row[m] == 0;
  std::vector<LowerCell> out;
  if (!vertical || hull.dim() == 0) {
    // ψ is affine along the fibres of π: the whole polytope is lower.
    std::vector<std::size_t> all(p.vertices.size());
    std::iota(all.begin(), all.end(), 0);
    out.push_back(make_cell(std::move(all)));
    return out;
  }
  HPolytope h = facet_recovery(VPolytope{m + 1, lifted, {}});
  for (const auto& f : h.inequalities) {
    if (f.normal[m] <= 0) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      if (f.tight_at(lifted[i])) idx.push_back(i);
    }
    out.push_back(make_cell(std::move(idx)));
  }
  std::sort(out.begin(), out.end(), [](const LowerCell& a, const LowerCell& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<LowerCell> lower_faces(const HPolytope& p, const AffineMap& pi, const QVector& psi) {
  return lower_faces(vertex_enumeration(p), pi, psi);
}

std::vector<ProductCell> diagonal_lower_cells(const std::vector<QPoint>& vertices, const QVector& orientation) {
  if (vertices.empty()) throw InfeasibleError("diagonal cells of an empty polytope");
  const std::size_t m = vertices.front().size();
  const std::size_t k = vertices.size();
  if (orientation.size() != m) throw DimensionMismatchError("orientation has wrong dimension");
  VPolytope square;
  square.dim = 2 * m;
  for (const auto& x : vertices) {
    for (const auto& y : vertices) {
      QPoint xy = x;
      xy.insert(xy.end(), y.begin(), y.end());
      square.vertices.push_back(std::move(xy));
    }
  }
  AffineMap beta;
  beta.offset = zeros(m);
  for (std::size_t i = 0; i < m; ++i) {
    QVector row(2 * m);
    row[i] = Rational(1, 2);
    row[m + i] = Rational(1, 2);
    beta.linear.push_back(std::move(row));
  }
  QVector psi = orientation;
  for (const auto& c : orientation) psi.push_back(-c);

  std::vector<ProductCell> out;
  for (const auto& cell : lower_faces(square, beta, psi)) {
    std::set<std::size_t> a, b;
    for (auto idx : cell.vertices) {
      a.insert(idx / k);
      b.insert(idx % k);
    }
    if (a.size() * b.size() != cell.vertices.size()) throw ValidationError("lower cell is not a product of faces");
    out.push_back({{a.begin(), a.end()}, {b.begin(), b.end()}, cell.tight()});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MatchingPair> lower_face_pairs(const ProductRealization& p) {
  const auto& verts = p.vertices.vertices;
  auto label = [&](const std::vector<std::size_t>& idx) {
    std::vector<std::size_t> common = p.halfspaces.active_set(verts[idx.front()]);
    for (auto i : idx) {
      auto act = p.halfspaces.active_set(verts[i]);
      std::vector<std::size_t> keep;
      std::set_intersection(common.begin(), common.end(), act.begin(), act.end(), std::back_inserter(keep));
      common = std::move(keep);
    }
    Forest f = p.face_from_active(common);
    std::vector<QPoint> mine;
    for (auto i : idx) mine.push_back(verts[i]);
    std::sort(mine.begin(), mine.end(), lex_less);
    if (mine != p.face_vertices(f)) throw ValidationError("lower cell factor is not a face");
    return f;
  };
  std::vector<MatchingPair> out;
  for (const auto& c : diagonal_lower_cells(verts, p.orientation)) {
    if (!c.tight) throw ValidationError("diagonal lower cell is not tight");
    out.push_back({label(c.first), label(c.second)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DgTerm> dg_formula(std::size_t n) {
  std::vector<DgTerm> out;
  for (const auto& pair : magical_pairs(n)) out.push_back({pair.F.trees.front(), pair.G.trees.front()});
  return out;
}

std::string dg_formula_text(const std::vector<DgTerm>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) s += " + ";
    s += terms[i].left.encoding() + " ⊗ " + terms[i].right.encoding();
  }
  return s;
}

}  // namespace assoc
