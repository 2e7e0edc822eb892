#include "assoc/diagonal.hpp"
#include "assoc/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <map>

using namespace assoc;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }
Forest F1(const PlanarTree& t) { return Forest{{t}}; }
Forest F1(const char* s) { return Forest{{T(s)}}; }
Rational q(long n, long d = 1) { return Rational(n, d); }

// Pair counts per arity, frozen after the first verified enumeration.
const std::map<std::size_t, std::size_t> kPairCounts{{2, 1}, {3, 2}, {4, 6}, {5, 22}, {6, 91}};

QVector steep_orientation(std::size_t n) {
  QVector v(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) v[i] = Rational(Integer(1) << (n - 1 - i));
  return v;
}

Weight random_weight(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(1, 9);
  Weight w(n);
  for (auto& x : w) x = d(rng);
  return w;
}

OrientedPolytope unit_interval() {
  HPolytope h;
  h.dim = 1;
  h.inequalities.push_back({{1}, 0, {}});
  h.inequalities.push_back({{-1}, -1, {}});
  return {h, {{0}, {1}}, {1}};
}

}  // namespace

TEST_CASE("cone feasibility") {
  Cone top = Cone::from_generators(2, {});
  CHECK(cone_feasible({1, 0}, top, top));
  CHECK_FALSE(cone_feasible({0, 0}, top, top));
  // Bottom vertex of [0, 1]: outer normal -1.
  Cone bottom = Cone::from_generators(1, {{-1}});
  CHECK_FALSE(cone_feasible({1}, bottom, bottom));
  CHECK(bottom.polar().contains({1}));
  CHECK_FALSE(bottom.polar().contains({-1}));
  CHECK(bottom.to_halfspaces().contains({-3}));
  // Pointwise check on the interval: (bottom, top) and (bottom, edge) are in the image, (top, bottom) is not.
  Cone upper = Cone::from_generators(1, {{1}});
  Cone edge = Cone::from_generators(1, {});
  CHECK_FALSE(cone_feasible({1}, bottom, upper));
  CHECK_FALSE(cone_feasible({1}, bottom, edge));
  CHECK_FALSE(cone_feasible({1}, edge, upper));
  CHECK(cone_feasible({1}, upper, bottom));
  CHECK(cone_feasible({1}, upper, edge));
  CHECK(cone_feasible({1}, edge, bottom));
  CHECK_THROWS_AS(cone_feasible({1, 1}, bottom, bottom), DimensionMismatchError);

  Cone quadrant = Cone::from_halfspaces(2, {{1, 0}, {0, 1}});
  Cone gen = quadrant.to_generators();
  CHECK(gen.representation() == Cone::Representation::kGenerators);
  CHECK(gen.contains({2, 3}));
  CHECK_FALSE(gen.contains({-1, 3}));
  CHECK(quadrant.negated().contains({-1, -1}));
}

TEST_CASE("pointwise diagonal examples") {
  auto iv = unit_interval();
  auto d = pointwise_diagonal(iv, {q(1, 3)});
  CHECK(d.lo == QPoint{0});
  CHECK(d.hi == QPoint{q(2, 3)});
  CHECK_THROWS_AS(pointwise_diagonal(iv, {2}), OutsidePolytopeError);

  auto k4 = build_realization(standard_weight(4));
  for (const auto& t : k4.vertex_trees) {
    auto r = pointwise_diagonal(k4, k4.vertex(t));
    CHECK(r.lo == k4.vertex(t));
    CHECK(r.hi == k4.vertex(t));
    CHECK(r.lo_face == F1(t));
    CHECK(r.hi_face == F1(t));
  }
  CHECK_THROWS_AS(pointwise_diagonal(k4, QPoint{1, 1, 1}), OutsidePolytopeError);

  // An orientation perpendicular to an edge of the square is reported.
  HPolytope sq;
  sq.dim = 2;
  for (std::size_t i = 0; i < 2; ++i) {
    sq.inequalities.push_back({unit_vector(2, i), 0, {}});
    sq.inequalities.push_back({negate(unit_vector(2, i)), -1, {}});
  }
  OrientedPolytope flat{sq, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {1, 0}};
  CHECK_THROWS_AS(pointwise_diagonal(flat, {q(1, 2), q(1, 3)}), NonUniqueOptimumError);
}

TEST_CASE("magical pairs") {
  for (const auto& [n, count] : kPairCounts) CHECK(magical_pairs(n).size() == count);
  CHECK(magical_pairs(2) == std::vector<MatchingPair>{{F1("(||)"), F1("(||)")}});
  CHECK(magical_pairs(3) == std::vector<MatchingPair>{{F1("((||)|)"), F1("(|||)")}, {F1("(|||)"), F1("(|(||))")}});
  std::vector<MatchingPair> k4{
      {F1("(((||)|)|)"), F1("(||||)")}, {F1("((||)||)"), F1("(||(||))")}, {F1("((|||)|)"), F1("(|(||)|)")},
      {F1("((|||)|)"), F1("(|(|||))")}, {F1("(|(||)|)"), F1("(|(|||))")}, {F1("(||||)"), F1("(|(|(||)))")},
  };
  CHECK(magical_pairs(4) == k4);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& p : magical_pairs(n)) {
      CHECK(p.dim_f() + p.dim_g() == n - 2);
      CHECK(tamari_leq(top_resolution(p.F.trees[0]), bottom_resolution(p.G.trees[0])));
    }
  }
}

TEST_CASE("normal cone oracle equals the magical formula") {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto k = build_realization(standard_weight(n));
    CHECK(normal_cone_pairs(k) == magical_pairs(n));
  }
  // Interval: (top vertex, edge) is rejected.
  auto k3 = build_realization(standard_weight(3));
  auto pairs = normal_cone_pairs(k3);
  CHECK(std::find(pairs.begin(), pairs.end(), MatchingPair{F1("(|(||))"), F1("(|||)")}) == pairs.end());
}

TEST_CASE("square K_3 x K_3") {
  auto k3 = build_realization(standard_weight(3));
  auto sq = product_realization({k3, k3});
  std::vector<MatchingPair> products;
  for (const auto& a : magical_pairs(3)) {
    for (const auto& b : magical_pairs(3)) {
      products.push_back({Forest{{a.F.trees[0], b.F.trees[0]}}, Forest{{a.G.trees[0], b.G.trees[0]}}});
    }
  }
  std::sort(products.begin(), products.end());
  CHECK(normal_cone_pairs(sq) == products);
  CHECK(magical_pairs(sq) == products);
  CHECK(subdivision(sq).pairs.size() == 4);
}

TEST_CASE("products of associahedra: cone oracle against the forest criterion") {
  auto k3 = build_realization(standard_weight(3));
  auto k4 = build_realization(standard_weight(4));
  for (const auto& p : {product_realization({k4, k3}), product_realization({k3, k4}),
                        product_realization({k3, build_realization({2, 1, 3})})}) {
    CHECK(normal_cone_pairs(p) == magical_pairs(p));
    CHECK(lower_face_pairs(p) == magical_pairs(p));
  }
}

TEST_CASE("sampling oracle") {
  auto k4 = build_realization(standard_weight(4));
  auto pairs = magical_pairs(4);
  QPoint bary = zeros(3);
  for (const auto& v : k4.vertices.vertices) bary = add(bary, scale(Rational(1, 5), v));
  auto d = pointwise_diagonal(k4, bary);
  CHECK(midpoint(d.lo, d.hi) == bary);
  bool inside = false;
  for (const auto& p : pairs) inside = inside || (refines(p.F.trees[0], d.lo_face.trees[0]) || p.F == d.lo_face);
  CHECK(inside);
  CHECK(sample_oracle(k4, 1000, 17) == pairs);
  CHECK(sample_points(k4.vertices.vertices, 2, 5, 3) == sample_points(k4.vertices.vertices, 2, 5, 3));
  CHECK_THROWS(sample_oracle(k4, 0, 1));
}

TEST_CASE("barycenter oracle") {
  auto k3 = product_realization({build_realization(standard_weight(3))});
  CHECK(face_pair_midpoints(k3).size() == 4);
  for (const auto& [n, count] : kPairCounts) {
    auto hit = barycenter_oracle(build_realization(standard_weight(n)));
    CHECK(hit.size() == count);
    CHECK(hit == magical_pairs(n));
  }
  auto square = product_realization({build_realization(standard_weight(3)), build_realization(standard_weight(3))});
  CHECK(barycenter_oracle(square) == magical_pairs(square));
}

TEST_CASE("diagonal invariants on samples") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto k = build_realization(standard_weight(n));
    auto pr = product_realization({k});
    auto steep = product_realization({build_realization(standard_weight(n), steep_orientation(n))});
    auto pairs = magical_pairs(n);
    std::set<MatchingPair> closure(pairs.begin(), pairs.end());
    const std::size_t d = k.dim();
    const PlanarTree top = PlanarTree::corolla(n);
    auto samples = sample_points(k.vertices.vertices, d, 300, 100 + n);
    for (const auto& z : samples) {
      auto r = pointwise_diagonal(pr, z);
      // Section.
      CHECK(midpoint(r.lo, r.hi) == z);
      // Skeleton bound.
      CHECK(r.lo_face.dimension() + r.hi_face.dimension() <= d);
      // The cell pair lies in some matching pair.
      bool covered = false;
      for (const auto& p : pairs) {
        covered = covered || (refines(r.lo_face.trees[0], p.F.trees[0]) && refines(r.hi_face.trees[0], p.G.trees[0]));
      }
      CHECK(covered);
      // Interior rule.
      if (n >= 3 && r.lo_face.trees[0] == top) CHECK(r.hi == k.vertex(PlanarTree::right_comb(n)));
      if (n >= 3 && r.hi_face.trees[0] == top) CHECK(r.lo == k.vertex(PlanarTree::left_comb(n)));
      // No hit in a top-dimensional pair violating L(tp F) <= L(bm G).
      if (n >= 2 && r.lo_face.dimension() + r.hi_face.dimension() == d) {
        auto lf = leaf_vector(top_resolution(r.lo_face.trees[0]));
        auto lg = leaf_vector(bottom_resolution(r.hi_face.trees[0]));
        for (std::size_t i = 0; i < lf.size(); ++i) CHECK(lf[i] <= lg[i]);
        CHECK(closure.count({r.lo_face, r.hi_face}) == 1);
      }
      // Orientation independence.
      auto s = pointwise_diagonal(steep, z);
      CHECK(s.lo == r.lo);
      CHECK(s.hi == r.hi);
    }
  }
}

TEST_CASE("diagonal restricts to faces") {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto k = build_realization(standard_weight(n));
    auto op = oriented(k);
    std::uint64_t seed = 1;
    for (const auto& t : enumerate_planar_trees(n)) {
      Face f = face_of_tree(k, t);
      OrientedPolytope face = op;
      for (auto j : k.active_facets(t)) face.halfspaces.equalities.push_back(face.halfspaces.inequalities[j]);
      face.vertices = f.vertices;
      for (const auto& z : sample_points(f.vertices, t.dimension(), 6, seed++)) {
        auto a = pointwise_diagonal(op, z);
        auto b = pointwise_diagonal(face, z);
        CHECK(a.lo == b.lo);
        CHECK(a.hi == b.hi);
      }
    }
  }
}

TEST_CASE("orientation and weight independence of the cells") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 2; n <= 5; ++n) {
    auto expected = magical_pairs(n);
    CHECK(normal_cone_pairs(build_realization(standard_weight(n), steep_orientation(n))) == expected);
    for (int trial = 0; trial < 10; ++trial) {
      CHECK(normal_cone_pairs(build_realization(random_weight(rng, n))) == expected);
    }
  }
}

TEST_CASE("subdivision") {
  auto k3 = build_realization(standard_weight(3));
  auto sc3 = subdivision(k3);
  REQUIRE(sc3.cells.size() == 2);
  CHECK(assoc::testing::as_set(sc3.cells[0]) == std::set<QPoint>{{1, 2}, {q(3, 2), q(3, 2)}});
  CHECK(assoc::testing::as_set(sc3.cells[1]) == std::set<QPoint>{{q(3, 2), q(3, 2)}, {2, 1}});
  for (std::size_t n = 2; n <= 5; ++n) {
    auto sc = subdivision(build_realization(standard_weight(n)));
    CHECK(sc.cells.size() == kPairCounts.at(n));
    CHECK(sc.total_volume == sc.polytope_volume);
    for (const auto& v : sc.volumes) CHECK(v > 0);
  }
  std::mt19937_64 rng(8);
  auto weighted = subdivision(build_realization(random_weight(rng, 5)));
  CHECK(weighted.total_volume == weighted.polytope_volume);
}

TEST_CASE("lower faces") {
  VPolytope square{2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {}};
  AffineMap first{{{1, 0}}, {0}};
  auto cells = lower_faces(square, first, {0, 1});
  REQUIRE(cells.size() == 1);
  CHECK(cells[0].vertices == std::vector<std::size_t>{0, 1});
  CHECK(cells[0].tight());
  // A ψ constant on fibres keeps the whole polytope.
  auto whole = lower_faces(square, AffineMap{{{1, 0}, {0, 1}}, {0, 0}}, {1, 1});
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].vertices.size() == 4);
  // A non-tight example: the square projected to a point.
  auto flat = lower_faces(square, AffineMap{{{0, 0}}, {0}}, {1, 2});
  REQUIRE(flat.size() == 1);
  CHECK(flat[0].vertices == std::vector<std::size_t>{0});

  for (std::size_t n = 2; n <= 5; ++n) {
    auto pr = product_realization({build_realization(standard_weight(n))});
    CHECK(lower_face_pairs(pr) == magical_pairs(n));
    for (const auto& c : diagonal_lower_cells(pr.vertices.vertices, pr.orientation)) CHECK(c.tight);
  }
}

TEST_CASE("dg formula") {
  CHECK(dg_formula_text(dg_formula(2)) == "(||) ⊗ (||)");
  CHECK(dg_formula_text(dg_formula(3)) == "((||)|) ⊗ (|||) + (|||) ⊗ (|(||))");
  CHECK(dg_formula(4).size() == 6);
  for (std::size_t n = 2; n <= 6; ++n) CHECK(dg_formula(n).size() == kPairCounts.at(n));
}
