#include "assoc/trees.hpp"

#include <doctest.h>

#include <map>

using namespace assoc;

namespace {

PlanarTree T(const char* s) { return PlanarTree::parse(s); }
const PlanarTree c2 = PlanarTree::corolla(2);

std::size_t catalan(std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// Little Schröder numbers by their standard recurrence, independent of tree code.
std::size_t schroeder(std::size_t n) {
  std::vector<std::size_t> s{0, 1, 1};
  for (std::size_t k = 3; k <= n; ++k) s.push_back(((6 * k - 9) * s[k - 1] - (k - 3) * s[k - 2]) / k);
  return s[n];
}

}  // namespace

TEST_CASE("encoding and parsing") {
  CHECK(PlanarTree::leaf().encoding() == "|");
  CHECK(PlanarTree::left_comb(3).encoding() == "((||)|)");
  CHECK(PlanarTree::right_comb(3).encoding() == "(|(||))");
  CHECK(PlanarTree::corolla(3).encoding() == "(|||)");
  CHECK(T("((||)|(|||))").arity() == 6);
  CHECK(T("((||)|(|||))").internal_vertex_count() == 3);
  CHECK(T("((||)|(|||))").dimension() == 2);
  CHECK_THROWS(T("(|)"));
  CHECK_THROWS(T("(||"));
  CHECK_THROWS(T("||"));
  CHECK_THROWS(PlanarTree(std::vector<PlanarTree>{PlanarTree::leaf()}));
}

TEST_CASE("binary tree enumeration") {
  CHECK(enumerate_binary_trees(1) == std::vector<PlanarTree>{PlanarTree::leaf()});
  CHECK(enumerate_binary_trees(4).size() == 5);
  CHECK(enumerate_binary_trees(6).size() == 42);
  for (std::size_t n = 1; n <= 10; ++n) {
    auto ts = enumerate_binary_trees(n);
    CHECK(ts.size() == catalan(n - 1));
    CHECK(std::is_sorted(ts.begin(), ts.end()));
    CHECK(std::adjacent_find(ts.begin(), ts.end()) == ts.end());
    for (const auto& t : ts) CHECK(t.is_binary());
  }
  CHECK_THROWS(enumerate_binary_trees(0));
}

TEST_CASE("planar tree enumeration") {
  CHECK(enumerate_planar_trees(2) == std::vector<PlanarTree>{c2});
  CHECK(enumerate_planar_trees(3).size() == 3);
  CHECK(enumerate_planar_trees(4).size() == 11);
  for (std::size_t n = 2; n <= 8; ++n) CHECK(enumerate_planar_trees(n).size() == schroeder(n));
  // Pentagon: 5 vertices, 5 edges, 1 cell.
  std::map<std::size_t, int> by_dim;
  for (const auto& t : enumerate_planar_trees(4)) ++by_dim[t.dimension()];
  CHECK(by_dim == std::map<std::size_t, int>{{0, 5}, {1, 5}, {2, 1}});
}

TEST_CASE("tamari order examples") {
  auto l4 = PlanarTree::left_comb(4), r4 = PlanarTree::right_comb(4);
  CHECK(tamari_leq(l4, l4));
  CHECK(tamari_leq(l4, r4));
  CHECK_FALSE(tamari_leq(r4, l4));
  CHECK_THROWS(tamari_leq(l4, PlanarTree::left_comb(3)));
  CHECK_THROWS(tamari_leq(PlanarTree::corolla(4), l4));
  CHECK(bracketing_vector(PlanarTree::left_comb(3)) == std::vector<std::size_t>{3, 1, 1});
  CHECK(bracketing_vector(PlanarTree::right_comb(3)) == std::vector<std::size_t>{3, 2, 1});
}

TEST_CASE("covers") {
  CHECK(covers(PlanarTree::left_comb(3)) == std::vector<PlanarTree>{PlanarTree::right_comb(3)});
  for (std::size_t n = 1; n <= 7; ++n) CHECK(covers(PlanarTree::right_comb(n)).empty());
  CHECK(covers(PlanarTree::left_comb(4)).size() == 2);
  // Each binary tree with n leaves has n-1 incident Tamari edges in total.
  for (std::size_t n = 2; n <= 7; ++n) {
    auto ts = enumerate_binary_trees(n);
    std::map<PlanarTree, std::size_t> degree;
    for (const auto& t : ts) {
      for (const auto& u : covers(t)) {
        ++degree[t];
        ++degree[u];
      }
    }
    for (const auto& t : ts) CHECK(degree[t] == n - 2);
  }
}

TEST_CASE("tamari order is a lattice order and both criteria agree") {
  for (std::size_t n = 2; n <= 7; ++n) {
    auto ts = enumerate_binary_trees(n);
    const std::size_t m = ts.size();
    std::vector<std::vector<char>> leq(m, std::vector<char>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) leq[a][b] = tamari_leq(ts[a], ts[b]);
    }
    if (n <= 6) {
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) CHECK(leq[a][b] == tamari_leq_by_rotations(ts[a], ts[b]));
      }
    } else {
      // Rotation closure from every tree via one BFS each.
      for (std::size_t a = 0; a < m; ++a) {
        std::set<PlanarTree> reach{ts[a]};
        std::vector<PlanarTree> stack{ts[a]};
        while (!stack.empty()) {
          auto u = stack.back();
          stack.pop_back();
          for (const auto& c : covers(u)) {
            if (reach.insert(c).second) stack.push_back(c);
          }
        }
        for (std::size_t b = 0; b < m; ++b) CHECK(static_cast<bool>(leq[a][b]) == (reach.count(ts[b]) == 1));
      }
    }
    std::size_t lc = std::find(ts.begin(), ts.end(), PlanarTree::left_comb(n)) - ts.begin();
    std::size_t rc = std::find(ts.begin(), ts.end(), PlanarTree::right_comb(n)) - ts.begin();
    for (std::size_t a = 0; a < m; ++a) {
      CHECK(leq[a][a]);
      CHECK(leq[lc][a]);
      CHECK(leq[a][rc]);
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b) CHECK_FALSE((leq[a][b] && leq[b][a]));
        if (!leq[a][b]) continue;
        for (std::size_t c = 0; c < m; ++c) {
          if (leq[b][c]) CHECK(leq[a][c]);
        }
      }
    }
  }
}

TEST_CASE("grafting") {
  auto t = T("((||)|)");
  CHECK(graft(PlanarTree::leaf(), 1, t) == t);
  for (std::size_t i = 1; i <= 3; ++i) CHECK(graft(t, i, PlanarTree::leaf()) == t);
  CHECK(graft(c2, 1, c2) == PlanarTree::left_comb(3));
  // Both evaluation orders of the two disjoint graftings on c_2.
  CHECK(graft(graft(c2, 1, c2), 3, c2) == graft(graft(c2, 2, c2), 1, c2));
  CHECK(graft(graft(c2, 1, c2), 3, c2) == T("((||)(||))"));
  CHECK(graft(c2, 1, graft(c2, 2, c2)) == T("((|(||))|)"));
  CHECK_THROWS(graft(c2, 3, c2));
  CHECK_THROWS(graft(c2, 0, c2));
  CHECK(graft(c2, 2, PlanarTree::corolla(3)).arity() == 4);
}

TEST_CASE("grafting satisfies the operad axioms on arities up to 4") {
  std::vector<PlanarTree> all;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ts = enumerate_planar_trees(n);
    all.insert(all.end(), ts.begin(), ts.end());
  }
  std::size_t checks = 0;
  for (const auto& s : all) {
    for (const auto& t : all) {
      for (const auto& u : all) {
        for (std::size_t i = 1; i <= s.arity(); ++i) {
          for (std::size_t j = 1; j <= t.arity(); ++j) {
            CHECK(graft(graft(s, i, t), i + j - 1, u) == graft(s, i, graft(t, j, u)));
            ++checks;
          }
          // Parallel: positions i < k of s.
          for (std::size_t k = i + 1; k <= s.arity(); ++k) {
            CHECK(graft(graft(s, i, t), k + t.arity() - 1, u) == graft(graft(s, k, u), i, t));
          }
        }
      }
    }
  }
  CHECK(checks > 1000);
}

TEST_CASE("leaf vector") {
  CHECK(leaf_vector(PlanarTree::left_comb(4)) == std::vector<int>{0, 0});
  CHECK(leaf_vector(PlanarTree::right_comb(4)) == std::vector<int>{1, 1});
  CHECK(leaf_vector(graft(c2, 2, c2)) == std::vector<int>{1});
  CHECK(leaf_vector(c2).empty());
  for (std::size_t n = 2; n <= 7; ++n) {
    auto ts = enumerate_binary_trees(n);
    for (const auto& s : ts) {
      CHECK(leaf_vector(s).size() == n - 2);
      for (const auto& t : ts) {
        if (!tamari_leq(s, t)) continue;
        auto a = leaf_vector(s), b = leaf_vector(t);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] <= b[i]);
      }
    }
  }
}

TEST_CASE("collapsing edges") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(collapse_edges(PlanarTree::right_comb(n), ChildSide::kRight) == PlanarTree::corolla(n));
    CHECK(collapse_edges(PlanarTree::right_comb(n), ChildSide::kLeft) == PlanarTree::right_comb(n));
    CHECK(collapse_edges(PlanarTree::left_comb(n), ChildSide::kLeft) == PlanarTree::corolla(n));
  }
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const auto& t : enumerate_binary_trees(n)) {
      auto f = collapse_edges(t, ChildSide::kRight);
      auto g = collapse_edges(t, ChildSide::kLeft);
      auto l = leaf_vector(t);
      std::size_t ones = std::count(l.begin(), l.end(), 1);
      CHECK(f.dimension() == ones);
      CHECK(g.dimension() == n - 2 - ones);
      CHECK(f.dimension() + g.dimension() == n - 2);
      CHECK(top_resolution(f) == t);
      CHECK(bottom_resolution(g) == t);
    }
  }
}

TEST_CASE("brackets, refinement and resolutions") {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_planar_trees(n)) {
      CHECK(tree_from_brackets(n, brackets(t)) == t);
      CHECK(brackets(t).size() == t.internal_edge_count());
      auto refs = binary_refinements(t);
      for (const auto& s : refs) CHECK(refines(s, t));
      std::size_t expected = 0;
      for (const auto& s : enumerate_binary_trees(n)) expected += refines(s, t) ? 1 : 0;
      CHECK(refs.size() == expected);
      CHECK(std::find(refs.begin(), refs.end(), bottom_resolution(t)) != refs.end());
      CHECK(std::find(refs.begin(), refs.end(), top_resolution(t)) != refs.end());
      for (const auto& s : refs) {
        CHECK(tamari_leq(bottom_resolution(t), s));
        CHECK(tamari_leq(s, top_resolution(t)));
      }
    }
  }
  CHECK_THROWS(tree_from_brackets(5, {{1, 3}, {2, 4}}));
  CHECK_THROWS(tree_from_brackets(3, {{1, 3}}));
  CHECK(two_vertex_tree(0, 2, 1) == PlanarTree::left_comb(3));
  CHECK(two_vertex_tree(1, 2, 0) == PlanarTree::right_comb(3));
}

TEST_CASE("forests") {
  Forest f{{PlanarTree::left_comb(3), PlanarTree::corolla(3)}};
  CHECK(f.arity() == 6);
  CHECK(f.dimension() == 1);
  CHECK(f.encoding() == "((||)|) (|||)");
  Forest lo{{PlanarTree::left_comb(3), PlanarTree::left_comb(3)}};
  Forest hi{{PlanarTree::right_comb(3), PlanarTree::left_comb(3)}};
  CHECK(tamari_leq(lo, hi));
  CHECK_FALSE(tamari_leq(hi, lo));
}
