#include "assoc/classics.hpp"
#include "assoc/errors.hpp"
#include "assoc/io.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace assoc;

namespace {

struct Off {
  std::size_t vertices = 0;
  std::vector<std::vector<std::size_t>> faces;
};

Off parse_off(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "OFF");
  do std::getline(in, line);
  while (line.rfind("#", 0) == 0);
  std::istringstream header(line);
  Off off;
  std::size_t nf = 0, ne = 0;
  header >> off.vertices >> nf >> ne;
  for (std::size_t i = 0; i < off.vertices; ++i) std::getline(in, line);
  for (std::size_t i = 0; i < nf; ++i) {
    std::size_t k = 0;
    in >> k;
    std::vector<std::size_t> f(k);
    for (auto& x : f) in >> x;
    off.faces.push_back(f);
  }
  return off;
}

}  // namespace

TEST_CASE("rationals and vectors") {
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(to_json(QVector{1, Rational(1, 2)}) == Json::array({"1", "1/2"}));
  CHECK(rational_from_json("7/21") == Rational(1, 3));
  CHECK(rational_from_json(Json(5)) == 5);
  CHECK_THROWS(rational_from_json(Json(0.5)));
  CHECK_THROWS(rational_from_json("0.5"));
}

TEST_CASE("tree encoding") {
  CHECK(to_json(PlanarTree::corolla(3)).dump() == "[[],[],[]]");
  CHECK(to_json(PlanarTree::leaf()).dump() == "[]");
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_planar_trees(n)) CHECK(tree_from_json(Json::parse(to_json(t).dump())) == t);
  }
  CHECK_THROWS_AS(tree_from_json(Json::parse("[[]]")), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_json(Json::parse("3")), std::invalid_argument);
}

TEST_CASE("polytope round trips") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    HPolytope h = testing::random_hpolytope(rng, 3, 4);
    CHECK(to_json(hpolytope_from_json(Json::parse(to_json(h).dump()))) == to_json(h));
    VPolytope v = vertex_enumeration(h);
    VPolytope back = vpolytope_from_json(Json::parse(to_json(v).dump()));
    CHECK(back.vertices == v.vertices);
    CHECK(back.dim == v.dim);
  }
  CHECK_THROWS_AS(vpolytope_from_json(Json::parse(R"({"dim":2,"vertices":[["1"]]})")), DimensionMismatchError);
}

TEST_CASE("realization schema") {
  auto k4 = build_realization({1, 2, 1, 3});
  Json j = to_json(k4);
  CHECK(j.at("weight") == Json::array({1, 2, 1, 3}));
  CHECK(j.at("vertices").size() == 5);
  CHECK(j.at("facets").size() == 5);
  CHECK(j.at("vertices")[0].contains("tree"));
  CHECK(j.at("vertices")[0].contains("coords"));
  LodayRealization back = realization_from_json(Json::parse(j.dump()));
  CHECK(to_json(back) == j);
  j["vertices"][0]["coords"][0] = "100";
  CHECK_THROWS_AS(realization_from_json(j), ValidationError);
}

TEST_CASE("pair schema") {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto pairs = magical_pairs(n);
    Json j = to_json(pairs);
    for (const auto& p : j) CHECK(p.at("dimF").get<std::size_t>() + p.at("dimG").get<std::size_t>() == n - 2);
    CHECK(pairs_from_json(Json::parse(j.dump())) == pairs);
  }
  Json bad = to_json(magical_pairs(3));
  bad[0]["dimF"] = 7;
  CHECK_THROWS_AS(pairs_from_json(bad), ValidationError);
}

TEST_CASE("OFF export") {
  auto k5 = build_realization(standard_weight(5));
  std::string text = to_off(k5.vertices.vertices);
  CHECK(text.find('.') == std::string::npos);
  Off off = parse_off(text);
  CHECK(off.vertices == 14);
  REQUIRE(off.faces.size() == 9);
  std::size_t pentagons = 0, squares = 0, incidences = 0;
  for (const auto& f : off.faces) {
    pentagons += f.size() == 5;
    squares += f.size() == 4;
    incidences += f.size();
  }
  CHECK(pentagons == 6);
  CHECK(squares == 3);
  // Consistent outward orientation: every directed edge appears once, reversed once.
  std::map<std::pair<std::size_t, std::size_t>, int> edges;
  for (const auto& f : off.faces) {
    for (std::size_t k = 0; k < f.size(); ++k) edges[{f[k], f[(k + 1) % f.size()]}]++;
  }
  CHECK(edges.size() == incidences);
  for (const auto& [e, count] : edges) CHECK(edges.count({e.second, e.first}) == 1);

  Off square = parse_off(to_off(cube_polytope(2).vertices));
  REQUIRE(square.faces.size() == 1);
  CHECK(square.faces[0].size() == 4);
  CHECK(to_off(build_realization(standard_weight(4)).vertices.vertices, true).find("decimal") != std::string::npos);
  CHECK_THROWS_AS(to_off(build_realization(standard_weight(6)).vertices.vertices), std::invalid_argument);
}
