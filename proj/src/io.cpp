#include "assoc/io.hpp"

#include "assoc/errors.hpp"
#include "assoc/linalg.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace assoc {

namespace {

Json constraint_to_json(const LinearConstraint& c) {
  return Json{{"normal", to_json(c.normal)}, {"rhs", to_json(c.rhs)}, {"label", c.label}};
}

LinearConstraint constraint_from_json(const Json& j) {
  return {qvector_from_json(j.at("normal")), rational_from_json(j.at("rhs")), j.value("label", "")};
}

QVector cross(const QVector& a, const QVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Indices of `points` listed counterclockwise around `normal`. All points lie on
// one plane orthogonal to `normal` and are in convex position.
std::vector<std::size_t> cyclic_order(const std::vector<QPoint>& points, std::vector<std::size_t> idx,
                                      const QVector& normal) {
  QPoint c = zeros(3);
  for (auto i : idx) c = add(c, points[i]);
  c = scale(Rational(1, static_cast<long>(idx.size())), c);
  QVector u = sub(points[idx[0]], c);
  QVector w = cross(normal, u);
  auto half = [&](const QPoint& p) {
    QVector d = sub(p, c);
    Rational s = dot(d, w);
    return s > 0 || (s == 0 && dot(d, u) > 0) ? 0 : 1;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    int ha = half(points[a]), hb = half(points[b]);
    if (ha != hb) return ha < hb;
    return dot(normal, cross(sub(points[a], c), sub(points[b], c))) > 0;
  });
  return idx;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw std::invalid_argument("rational must be a string \"p/q\"");
  return parse_rational(j.get<std::string>());
}

QVector qvector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  QVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json to_json(const PlanarTree& t) {
  Json out = Json::array();
  for (const auto& c : t.children()) out.push_back(to_json(c));
  return out;
}

PlanarTree tree_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("tree must be a nested array");
  if (j.empty()) return PlanarTree::leaf();
  std::vector<PlanarTree> children;
  for (const auto& c : j) children.push_back(tree_from_json(c));
  return PlanarTree(std::move(children));
}

Json to_json(const HPolytope& h) {
  Json eq = Json::array(), in = Json::array();
  for (const auto& c : h.equalities) eq.push_back(constraint_to_json(c));
  for (const auto& c : h.inequalities) in.push_back(constraint_to_json(c));
  return Json{{"dim", h.dim}, {"equalities", eq}, {"inequalities", in}};
}

HPolytope hpolytope_from_json(const Json& j) {
  HPolytope h;
  h.dim = j.at("dim").get<std::size_t>();
  for (const auto& c : j.at("equalities")) h.equalities.push_back(constraint_from_json(c));
  for (const auto& c : j.at("inequalities")) h.inequalities.push_back(constraint_from_json(c));
  for (const auto* list : {&h.equalities, &h.inequalities}) {
    for (const auto& c : *list) {
      if (c.normal.size() != h.dim) throw DimensionMismatchError("constraint normal has wrong length");
    }
  }
  return h;
}

Json to_json(const VPolytope& v) {
  Json vs = Json::array();
  for (const auto& p : v.vertices) vs.push_back(to_json(p));
  Json out{{"dim", v.dim}, {"vertices", vs}};
  if (!v.labels.empty()) out["labels"] = v.labels;
  return out;
}

VPolytope vpolytope_from_json(const Json& j) {
  VPolytope v;
  v.dim = j.at("dim").get<std::size_t>();
  for (const auto& p : j.at("vertices")) {
    v.vertices.push_back(qvector_from_json(p));
    if (v.vertices.back().size() != v.dim) throw DimensionMismatchError("vertex has wrong length");
  }
  if (j.contains("labels")) v.labels = j.at("labels").get<std::vector<std::string>>();
  return v;
}

Json to_json(const LodayRealization& k) {
  Json vs = Json::array(), fs = Json::array();
  for (std::size_t i = 0; i < k.vertex_trees.size(); ++i) {
    vs.push_back(Json{{"tree", to_json(k.vertex_trees[i])}, {"coords", to_json(k.vertex(k.vertex_trees[i]))}});
  }
  for (std::size_t i = 0; i < k.facet_trees.size(); ++i) {
    const auto& c = k.halfspaces.inequalities[i];
    fs.push_back(Json{{"tree", to_json(k.facet_trees[i])}, {"normal", to_json(c.normal)}, {"rhs", to_json(c.rhs)}});
  }
  return Json{{"weight", k.weight}, {"vertices", vs}, {"facets", fs}, {"orientation", to_json(k.orientation)}};
}

LodayRealization realization_from_json(const Json& j) {
  Weight w = j.at("weight").get<Weight>();
  std::optional<QVector> orientation;
  if (j.contains("orientation")) orientation = qvector_from_json(j.at("orientation"));
  LodayRealization k = build_realization(w, orientation);
  if (j.contains("vertices")) {
    if (j.at("vertices").size() != k.vertex_trees.size()) throw ValidationError("vertex count does not match weight");
    for (const auto& v : j.at("vertices")) {
      if (k.vertex(tree_from_json(v.at("tree"))) != qvector_from_json(v.at("coords"))) {
        throw ValidationError("stored vertex does not match weight");
      }
    }
  }
  if (j.contains("facets")) {
    const auto& fs = j.at("facets");
    if (fs.size() != k.facet_trees.size()) throw ValidationError("facet count does not match weight");
    for (std::size_t i = 0; i < fs.size(); ++i) {
      const auto& c = k.halfspaces.inequalities[i];
      if (tree_from_json(fs[i].at("tree")) != k.facet_trees[i] || qvector_from_json(fs[i].at("normal")) != c.normal ||
          rational_from_json(fs[i].at("rhs")) != c.rhs) {
        throw ValidationError("stored facet does not match weight");
      }
    }
  }
  return k;
}

Json to_json(const std::vector<MatchingPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) {
    if (p.F.trees.size() != 1 || p.G.trees.size() != 1) {
      throw std::invalid_argument("pair JSON holds faces of a single associahedron");
    }
    out.push_back(Json{{"F", to_json(p.F.trees[0])}, {"G", to_json(p.G.trees[0])}, {"dimF", p.dim_f()},
                       {"dimG", p.dim_g()}});
  }
  return out;
}

std::vector<MatchingPair> pairs_from_json(const Json& j) {
  std::vector<MatchingPair> out;
  for (const auto& p : j) {
    MatchingPair m{Forest{{tree_from_json(p.at("F"))}}, Forest{{tree_from_json(p.at("G"))}}};
    if (m.dim_f() != p.at("dimF").get<std::size_t>() || m.dim_g() != p.at("dimG").get<std::size_t>()) {
      throw ValidationError("pair dimensions do not match the trees");
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::string to_off(const std::vector<QPoint>& vertices, bool decimal) {
  if (vertices.empty()) throw std::invalid_argument("OFF export needs at least one vertex");
  AffineChart chart = AffineChart::affine_hull(vertices);
  const std::size_t d = chart.dim();
  if (d > 3) throw std::invalid_argument("OFF export is limited to dimension 3");
  std::vector<QPoint> pts;
  for (const auto& v : vertices) {
    QPoint y = chart.project(v);
    y.resize(3, Rational(0));
    pts.push_back(std::move(y));
  }

  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> all(pts.size());
  std::iota(all.begin(), all.end(), 0);
  if (d == 1) {
    faces.push_back(all);
  } else if (d == 2) {
    faces.push_back(cyclic_order(pts, all, {0, 0, 1}));
  } else if (d == 3) {
    HPolytope h = facet_recovery(VPolytope{3, pts, {}});
    for (const auto& c : h.inequalities) {
      std::vector<std::size_t> tight;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (c.tight_at(pts[i])) tight.push_back(i);
      }
      faces.push_back(cyclic_order(pts, tight, negate(c.normal)));
    }
  }

  std::ostringstream out;
  out << "OFF\n";
  out << (decimal ? "# decimal approximations of exact rational coordinates\n" : "# exact rational coordinates\n");
  out << pts.size() << ' ' << faces.size() << " 0\n";
  if (decimal) out << std::setprecision(17);
  for (const auto& p : pts) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (k) out << ' ';
      if (decimal) {
        out << to_double(p[k]);
      } else {
        out << to_string(p[k]);
      }
    }
    out << '\n';
  }
  for (const auto& f : faces) {
    out << f.size();
    for (auto i : f) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

}  // namespace assoc
