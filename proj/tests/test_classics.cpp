#include "assoc/classics.hpp"
#include "assoc/errors.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace assoc;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Sorted decreasing coordinates in [0, 1]: a uniform point of the simplex.
QPoint random_simplex_point(std::mt19937_64& rng, std::size_t n, int den) {
  std::uniform_int_distribution<int> d(0, den);
  QPoint z(n);
  for (auto& x : z) x = Rational(d(rng), den);
  std::sort(z.begin(), z.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return z;
}

}  // namespace

TEST_CASE("simplex and cube realizations") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto s = simplex_polytope(n);
    CHECK(assoc::testing::as_set(vertex_enumeration(s.halfspaces).vertices) == assoc::testing::as_set(s.vertices));
    auto c = cube_polytope(n);
    CHECK(assoc::testing::as_set(vertex_enumeration(c.halfspaces).vertices) == assoc::testing::as_set(c.vertices));
    CHECK(c.vertices.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("Alexander-Whitney diagonal") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& v : simplex_polytope(n).vertices) CHECK(aw_diagonal(n, v) == std::pair{v, v});
  }
  CHECK(aw_diagonal(1, {q(1, 3)}) == std::pair{QPoint{0}, QPoint{q(2, 3)}});
  CHECK(aw_diagonal(2, {q(3, 4), q(1, 4)}) == std::pair{QPoint{q(1, 2), 0}, QPoint{1, q(1, 2)}});
  CHECK_THROWS_AS(aw_diagonal(2, {q(1, 4), q(3, 4)}), OutsidePolytopeError);
  CHECK_THROWS_AS(aw_diagonal(2, {q(1, 4)}), DimensionMismatchError);

  std::mt19937_64 rng(12);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto s = simplex_polytope(n);
    for (int trial = 0; trial < 500; ++trial) {
      // Small denominators make ties at 1/2 frequent.
      QPoint z = random_simplex_point(rng, n, trial % 2 == 0 ? 4 : 97);
      auto d = pointwise_diagonal(s, z);
      CHECK(aw_diagonal(n, z) == std::pair{d.lo, d.hi});
    }
  }
}

TEST_CASE("Alexander-Whitney cells") {
  CHECK(aw_cells(0).size() == 1);
  CHECK(aw_cells(2).size() == 3);
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& c : aw_cells(n)) CHECK((c.first.size() - 1) + (c.second.size() - 1) == n);
    auto s = simplex_polytope(n);
    CHECK(diagonal_lower_cells(s.vertices, s.orientation) == aw_cells(n));
  }
}

TEST_CASE("Serre cube diagonal") {
  CHECK(cube_diagonal(2, {0, 0}) == std::pair{QPoint{0, 0}, QPoint{0, 0}});
  CHECK(cube_diagonal(1, {q(1, 3)}) == std::pair{QPoint{0}, QPoint{q(2, 3)}});
  CHECK(cube_diagonal(2, {q(1, 3), q(3, 4)}) == std::pair{QPoint{0, q(1, 2)}, QPoint{q(2, 3), 1}});
  CHECK_THROWS_AS(cube_diagonal(1, {2}), OutsidePolytopeError);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> d(0, 12);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto c = cube_polytope(n);
    for (int trial = 0; trial < 200; ++trial) {
      QPoint z(n);
      for (auto& x : z) x = Rational(d(rng), 12);
      auto g = pointwise_diagonal(c, z);
      CHECK(cube_diagonal(n, z) == std::pair{g.lo, g.hi});
    }
  }
  for (std::size_t n = 0; n <= 3; ++n) {
    auto c = cube_polytope(n);
    CHECK(cube_cells(n).size() == (std::size_t{1} << n));
    CHECK(diagonal_lower_cells(c.vertices, c.orientation) == cube_cells(n));
  }
}
