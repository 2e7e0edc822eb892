// Python extension assoc._core. Rationals cross the boundary as "p/q" strings;
// the pure Python package turns them into fractions.Fraction.

#include "assoc/classics.hpp"
#include "assoc/diagonal.hpp"
#include "assoc/io.hpp"
#include "assoc/operad.hpp"
#include "assoc/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace assoc;

namespace {

using Strings = std::vector<std::string>;

QVector to_qvector(const Strings& v) {
  QVector out;
  for (const auto& s : v) out.push_back(parse_rational(s));
  return out;
}

py::tuple pair_tuple(const QPoint& lo, const QPoint& hi) { return py::make_tuple(to_strings(lo), to_strings(hi)); }

py::list pairs_list(const std::vector<MatchingPair>& pairs) {
  py::list out;
  for (const auto& p : pairs) out.append(py::make_tuple(p.F.encoding(), p.G.encoding(), p.dim_f(), p.dim_g()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Loday associahedra, their cellular diagonal and operad structure";

  m.def("binary_trees", [](std::size_t n) {
    Strings out;
    for (const auto& t : enumerate_binary_trees(n)) out.push_back(t.encoding());
    return out;
  }, py::arg("arity"));
  m.def("planar_trees", [](std::size_t n) {
    Strings out;
    for (const auto& t : enumerate_planar_trees(n)) out.push_back(t.encoding());
    return out;
  }, py::arg("arity"));
  m.def("tamari_leq", [](const std::string& s, const std::string& t) {
    return tamari_leq(PlanarTree::parse(s), PlanarTree::parse(t));
  });
  m.def("graft", [](const std::string& s, std::size_t i, const std::string& t) {
    return graft(PlanarTree::parse(s), i, PlanarTree::parse(t)).encoding();
  });
  m.def("tree_dimension", [](const std::string& t) { return PlanarTree::parse(t).dimension(); });

  m.def("loday_point", [](const std::string& t, const Weight& w) { return to_strings(loday_point(PlanarTree::parse(t), w)); });
  m.def("realization_json", [](const Weight& w) { return to_json(build_realization(w)).dump(); }, py::arg("weight"));
  m.def("off", [](const Weight& w, bool decimal) { return to_off(build_realization(w).vertices.vertices, decimal); },
        py::arg("weight"), py::arg("decimal") = false);

  m.def("magical_pairs", [](std::size_t n) { return pairs_list(magical_pairs(n)); }, py::arg("arity"));
  m.def("normal_cone_pairs", [](const Weight& w) { return pairs_list(normal_cone_pairs(build_realization(w))); },
        py::arg("weight"));
  m.def("sample_pairs", [](const Weight& w, std::size_t trials, std::uint64_t seed) {
    return pairs_list(sample_oracle(build_realization(w), trials, seed));
  }, py::arg("weight"), py::arg("trials"), py::arg("seed"));
  m.def("pointwise_diagonal", [](const Weight& w, const Strings& z) {
    DiagonalResult d = pointwise_diagonal(build_realization(w), to_qvector(z));
    return py::make_tuple(to_strings(d.lo), to_strings(d.hi), d.lo_face.encoding(), d.hi_face.encoding());
  }, py::arg("weight"), py::arg("z"));
  m.def("dg_formula", [](std::size_t n) { return dg_formula_text(dg_formula(n)); });
  m.def("subdivision_volumes", [](const Weight& w) {
    SubdivisionComplex sc = subdivision(build_realization(w));
    return py::make_tuple(to_strings(sc.volumes), to_string(sc.polytope_volume));
  });

  m.def("transition_map", [](const Weight& src, const Weight& dst, const Strings& z, std::size_t depth) {
    TransitionResult r = TransitionMap(src, dst)(to_qvector(z), depth);
    return py::make_tuple(to_strings(r.point), to_string(r.error_bound), r.exact);
  }, py::arg("source"), py::arg("target"), py::arg("z"), py::arg("depth") = 8);
  m.def("compose", [](std::size_t mm, std::size_t i, std::size_t n, const Strings& x, const Strings& y, std::size_t depth) {
    TransitionResult r = compose(mm, i, n, to_qvector(x), to_qvector(y), depth);
    return py::make_tuple(to_strings(r.point), to_string(r.error_bound), r.exact);
  }, py::arg("m"), py::arg("i"), py::arg("n"), py::arg("x"), py::arg("y"), py::arg("depth") = 8);

  m.def("aw_diagonal", [](std::size_t n, const Strings& z) {
    auto [lo, hi] = aw_diagonal(n, to_qvector(z));
    return pair_tuple(lo, hi);
  });
  m.def("cube_diagonal", [](std::size_t n, const Strings& z) {
    auto [lo, hi] = cube_diagonal(n, to_qvector(z));
    return pair_tuple(lo, hi);
  });

  m.def("verify", [](std::size_t max_arity, std::uint64_t seed, std::size_t samples) {
    VerifyOptions o;
    o.max_arity = max_arity;
    o.seed = seed;
    o.samples = samples;
    py::list out;
    for (const auto& r : run_verification(o)) {
      py::dict d;
      d["check"] = r.check;
      d["arity"] = r.arity;
      d["status"] = r.ok ? "OK" : "FAIL";
      d["counts"] = r.counts;
      out.append(d);
    }
    return out;
  }, py::arg("max_arity") = 4, py::arg("seed") = 1, py::arg("samples") = 100);
}
