#include "assoc/verify.hpp"

#include "assoc/classics.hpp"
#include "assoc/diagonal.hpp"
#include "assoc/operad.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace assoc {

namespace {

using TreePair = std::pair<PlanarTree, PlanarTree>;

CheckResult timed(std::string name, std::size_t arity, const std::function<bool(std::string&)>& body) {
  CheckResult r{std::move(name), arity, false, "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    r.ok = body(r.counts);
  } catch (const std::exception& e) {
    r.ok = false;
    r.counts = std::string("error: ") + e.what();
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string pair_counts(std::size_t a, std::size_t b) {
  return std::to_string(a) + " = " + std::to_string(b) + " pairs";
}

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

std::set<TreePair> tree_pairs(const std::vector<MatchingPair>& pairs) {
  std::set<TreePair> out;
  for (const auto& p : pairs) out.emplace(p.F.trees.at(0), p.G.trees.at(0));
  return out;
}

std::vector<QPoint> samples_of(const LodayRealization& k, std::size_t count, std::uint64_t seed) {
  return sample_points(k.vertices.vertices, k.dim(), count, seed);
}

}  // namespace

std::string format_line(const CheckResult& r) {
  return r.check + ": " + r.counts + ", " + (r.ok ? "OK" : "FAIL");
}

CheckResult check_magical_vs_cones(std::size_t n) {
  return timed("magical_vs_cones", n, [&](std::string& counts) {
    auto magical = magical_pairs(n);
    auto cones = normal_cone_pairs(build_realization(standard_weight(n)));
    counts = pair_counts(magical.size(), cones.size());
    return magical == cones;
  });
}

CheckResult check_magical_vs_lower_faces(std::size_t n) {
  return timed("magical_vs_lower_faces", n, [&](std::string& counts) {
    auto magical = magical_pairs(n);
    auto lower = lower_face_pairs(product_realization({build_realization(standard_weight(n))}));
    counts = pair_counts(magical.size(), lower.size());
    return magical == lower;
  });
}

CheckResult check_magical_vs_samples(std::size_t n, std::size_t samples, std::uint64_t seed) {
  return timed("magical_vs_samples", n, [&](std::string& counts) {
    auto magical = magical_pairs(n);
    auto hit = sample_oracle(build_realization(standard_weight(n)), samples, seed);
    bool sound = std::includes(magical.begin(), magical.end(), hit.begin(), hit.end());
    counts = pair_counts(magical.size(), hit.size()) + " from " + std::to_string(samples) + " samples";
    // Beyond arity 5 the smallest cells are too thin for random sampling to reach.
    return n <= kFullSampleCoverage ? magical == hit : sound;
  });
}

CheckResult check_magical_vs_barycenters(std::size_t n) {
  return timed("magical_vs_barycenters", n, [&](std::string& counts) {
    auto magical = magical_pairs(n);
    auto hit = barycenter_oracle(build_realization(standard_weight(n)));
    counts = pair_counts(magical.size(), hit.size());
    return magical == hit;
  });
}

CheckResult check_section(std::size_t n, std::size_t samples, std::uint64_t seed) {
  return timed("section", n, [&](std::string& counts) {
    auto k = build_realization(standard_weight(n));
    auto pr = product_realization({k});
    auto pairs = tree_pairs(magical_pairs(n));
    std::size_t good = 0;
    auto points = samples_of(k, samples, seed);
    for (const auto& z : points) {
      auto d = pointwise_diagonal(pr, z);
      const PlanarTree& f = d.lo_face.trees[0];
      const PlanarTree& g = d.hi_face.trees[0];
      bool inside = false;
      for (const auto& [pf, pg] : pairs) inside = inside || (refines(f, pf) && refines(g, pg));
      bool top = f.dimension() + g.dimension() == k.dim();
      if (midpoint(d.lo, d.hi) == z && inside && (!top || pairs.count({f, g}) == 1)) ++good;
    }
    counts = std::to_string(good) + "/" + std::to_string(points.size()) + " samples";
    return good == points.size();
  });
}

CheckResult check_subdivision(std::size_t n) {
  return timed("subdivision", n, [&](std::string& counts) {
    auto sc = subdivision(build_realization(standard_weight(n)));
    counts = std::to_string(sc.cells.size()) + " cells, volume " + to_string(sc.total_volume) + " = " +
             to_string(sc.polytope_volume);
    return sc.total_volume == sc.polytope_volume;
  });
}

CheckResult check_orientation_independence(std::size_t n, std::size_t samples, std::uint64_t seed) {
  return timed("orientation_independence", n, [&](std::string& counts) {
    auto a = build_realization(standard_weight(n));
    auto b = build_realization(standard_weight(n), steep_orientation(n));
    auto cones_a = normal_cone_pairs(a);
    auto cones_b = normal_cone_pairs(b);
    auto pa = product_realization({a});
    auto pb = product_realization({b});
    std::size_t same = 0;
    auto points = samples_of(a, samples, seed);
    for (const auto& z : points) {
      auto da = pointwise_diagonal(pa, z);
      auto db = pointwise_diagonal(pb, z);
      same += da.lo == db.lo && da.hi == db.hi;
    }
    counts = pair_counts(cones_a.size(), cones_b.size()) + ", " + std::to_string(same) + "/" +
             std::to_string(points.size()) + " samples";
    return cones_a == cones_b && cones_a == magical_pairs(n) && same == points.size();
  });
}

CheckResult check_weight_independence(std::size_t n, std::size_t weights, std::uint64_t seed) {
  return timed("weight_independence", n, [&](std::string& counts) {
    std::mt19937_64 rng(seed);
    auto expected = magical_pairs(n);
    std::size_t same = 0;
    for (std::size_t t = 0; t < weights; ++t) same += normal_cone_pairs(build_realization(random_weight(rng, n))) == expected;
    counts = std::to_string(same) + "/" + std::to_string(weights) + " weights";
    return same == weights;
  });
}

CheckResult check_vh_agreement(std::size_t n, std::size_t weights, std::uint64_t seed) {
  return timed("vh_agreement", n, [&](std::string& counts) {
    std::mt19937_64 rng(seed);
    std::size_t good = 0;
    for (std::size_t t = 0; t < weights; ++t) {
      Weight w = random_weight(rng, n);
      auto k = build_realization(w);
      auto found = vertex_enumeration(k.halfspaces).vertices;
      std::set<QPoint> expected;
      for (const auto& tree : enumerate_binary_trees(n)) expected.insert(loday_point(tree, w));
      bool ok = std::set<QPoint>(found.begin(), found.end()) == expected && found.size() == expected.size();
      for (const auto& tree : k.vertex_trees) ok = ok && k.vertex(tree) == loday_point(tree, w);
      for (std::size_t j = 0; j < k.facet_trees.size(); ++j) {
        auto [a, b] = k.facet_spans[j];
        std::size_t p = a - 1, q = b - a + 1, r = n - p - q;
        std::set<PlanarTree> grafts, tight;
        for (const auto& u : enumerate_binary_trees(p + 1 + r)) {
          for (const auto& v : enumerate_binary_trees(q)) grafts.insert(graft(u, p + 1, v));
        }
        for (const auto& tree : k.vertex_trees) {
          if (k.halfspaces.inequalities[j].tight_at(k.vertex(tree))) tight.insert(tree);
        }
        ok = ok && tight == grafts;
      }
      good += ok;
    }
    counts = std::to_string(good) + "/" + std::to_string(weights) + " weights";
    return good == weights;
  });
}

CheckResult check_well_orientation(std::size_t n) {
  return timed("well_orientation", n, [&](std::string& counts) {
    bool ok = true;
    std::size_t edges = 0;
    for (const QVector& v : {default_orientation(n), steep_orientation(n)}) {
      auto k = build_realization(standard_weight(n), v);
      const auto& trees = k.vertex_trees;
      const std::size_t m = trees.size();
      std::vector<std::vector<std::size_t>> active(m);
      for (std::size_t i = 0; i < m; ++i) active[i] = k.halfspaces.active_set(k.vertex(trees[i]));
      // reach[i][j]: j is reachable from i along v-increasing edges.
      std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
      edges = 0;
      for (std::size_t i = 0; i < m; ++i) {
        reach[i][i] = true;
        for (std::size_t j = i + 1; j < m; ++j) {
          std::vector<std::size_t> common;
          std::set_intersection(active[i].begin(), active[i].end(), active[j].begin(), active[j].end(),
                                std::back_inserter(common));
          if (k.face_from_active(common).dimension() != 1) continue;
          ++edges;
          Rational s = dot(v, sub(k.vertex(trees[j]), k.vertex(trees[i])));
          if (s == 0) ok = false;
          if (s > 0) reach[i][j] = true;
          if (s < 0) reach[j][i] = true;
        }
      }
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t a = 0; a < m; ++a) {
          if (!reach[a][c]) continue;
          for (std::size_t b = 0; b < m; ++b) {
            if (reach[c][b]) reach[a][b] = true;
          }
        }
      }
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) ok = ok && reach[a][b] == tamari_leq(trees[a], trees[b]);
      }
    }
    counts = std::to_string(edges) + " edges, 2 orientations";
    return ok;
  });
}

CheckResult check_operad_axioms(std::size_t total) {
  return timed("operad_axioms", total, [&](std::string& counts) {
    std::map<std::size_t, std::vector<PlanarTree>> faces;
    auto faces_of = [&](std::size_t k) -> const std::vector<PlanarTree>& {
      auto it = faces.find(k);
      if (it == faces.end()) it = faces.emplace(k, enumerate_planar_trees(k)).first;
      return it->second;
    };
    std::size_t checked = 0, failed = 0;
    for (std::size_t m = 1; m <= total; ++m) {
      for (std::size_t n = 1; m + n <= total + 1; ++n) {
        std::size_t p = total + 2 - m - n;
        if (p < 1) continue;
        for (const auto& f : faces_of(m)) {
          for (const auto& g : faces_of(n)) {
            for (const auto& h : faces_of(p)) {
              for (std::size_t i = 1; i <= m; ++i) {
                for (std::size_t j = 1; j <= n; ++j) {
                  ++checked;
                  failed += compose_cellular(m + n - 1, i + j - 1, p, compose_cellular(m, i, n, f, g), h) !=
                            compose_cellular(m, i, n + p - 1, f, compose_cellular(n, j, p, g, h));
                }
                for (std::size_t j = i + 1; j <= m; ++j) {
                  ++checked;
                  failed += compose_cellular(m + n - 1, j + n - 1, p, compose_cellular(m, i, n, f, g), h) !=
                            compose_cellular(m + p - 1, i, n, compose_cellular(m, j, p, f, h), g);
                }
              }
            }
          }
        }
      }
    }
    counts = std::to_string(checked - failed) + "/" + std::to_string(checked) + " instances";
    return failed == 0;
  });
}

CheckResult check_compose_grafting(std::size_t total) {
  return timed("compose_grafting", total, [&](std::string& counts) {
    auto target = build_realization(standard_weight(total));
    std::size_t checked = 0, failed = 0;
    for (std::size_t m = 1; m <= total; ++m) {
      std::size_t n = total + 1 - m;
      for (std::size_t i = 1; i <= m; ++i) {
        for (const auto& s : enumerate_binary_trees(m)) {
          for (const auto& t : enumerate_binary_trees(n)) {
            ++checked;
            TransitionResult r = compose(m, i, n, loday_point(s, standard_weight(m)), loday_point(t, standard_weight(n)));
            failed += !(r.exact && r.point == target.vertex(graft(s, i, t)));
          }
        }
      }
    }
    counts = std::to_string(checked - failed) + "/" + std::to_string(checked) + " vertex compositions";
    return failed == 0;
  });
}

CheckResult check_diagonal_compatibility(std::size_t total) {
  return timed("diagonal_compatibility", total, [&](std::string& counts) {
    auto target_pairs = tree_pairs(magical_pairs(total));
    auto target_faces = enumerate_planar_trees(total);
    std::size_t facets = 0, failed = 0;
    for (std::size_t m = 2; m < total; ++m) {
      std::size_t n = total + 1 - m;
      auto outer = magical_pairs(m);
      auto inner = magical_pairs(n);
      for (std::size_t i = 1; i <= m; ++i) {
        ++facets;
        PlanarTree facet = two_vertex_tree(i - 1, n, m - i);
        std::set<TreePair> images;
        for (const auto& a : outer) {
          for (const auto& b : inner) {
            images.emplace(graft(a.F.trees[0], i, b.F.trees[0]), graft(a.G.trees[0], i, b.G.trees[0]));
          }
        }
        std::vector<PlanarTree> in_facet;
        for (const auto& t : target_faces) {
          if (refines(t, facet)) in_facet.push_back(t);
        }
        std::set<TreePair> cells;
        for (const auto& f : in_facet) {
          for (const auto& g : in_facet) {
            if (f.dimension() + g.dimension() == facet.dimension() &&
                tamari_leq(top_resolution(f), bottom_resolution(g))) {
              cells.emplace(f, g);
            }
          }
        }
        bool ok = images == cells;
        for (const auto& [f, g] : images) {
          bool inside = false;
          for (const auto& [pf, pg] : target_pairs) inside = inside || (refines(f, pf) && refines(g, pg));
          ok = ok && inside;
        }
        failed += !ok;
      }
    }
    counts = std::to_string(facets - failed) + "/" + std::to_string(facets) + " facets";
    return failed == 0;
  });
}

CheckResult check_transition_bound(std::size_t n, std::size_t samples, std::size_t depth, std::uint64_t seed) {
  return timed("transition_bound", n, [&](std::string& counts) {
    std::mt19937_64 rng(seed);
    auto src = build_realization(standard_weight(n));
    Weight w = random_weight(rng, n);
    auto dst = build_realization(w);
    TransitionMap tr(src.weight, w);
    TransitionMap id(src.weight, src.weight);
    std::size_t good = 0;
    auto points = samples_of(src, samples, seed);
    for (const auto& z : points) {
      TransitionResult a = tr(z, depth);
      TransitionResult b = tr(z, depth + 1);
      TransitionResult c = id(z, depth);
      bool ok = a.error_bound <= tr.error_bound(depth) && dst.halfspaces.contains(a.point) &&
                max_abs(sub(a.point, b.point)) <= a.error_bound + b.error_bound &&
                max_abs(sub(c.point, z)) <= id.error_bound(depth);
      good += ok;
    }
    counts = std::to_string(good) + "/" + std::to_string(points.size()) + " samples at depth " + std::to_string(depth);
    return good == points.size();
  });
}

CheckResult check_compose_facet(std::size_t total, std::size_t samples, std::size_t depth, std::uint64_t seed) {
  return timed("compose_facet", total, [&](std::string& counts) {
    auto target = build_realization(standard_weight(total));
    std::size_t checked = 0, good = 0;
    for (std::size_t m = 2; m < total; ++m) {
      std::size_t n = total + 1 - m;
      auto km = build_realization(standard_weight(m));
      auto kn = build_realization(standard_weight(n));
      auto xs = samples_of(km, samples, seed + m);
      auto ys = samples_of(kn, samples, seed + 100 + n);
      for (std::size_t i = 1; i <= m; ++i) {
        PlanarTree facet = two_vertex_tree(i - 1, n, m - i);
        std::size_t index = 0;
        while (target.facet_trees[index] != facet) ++index;
        for (std::size_t s = 0; s < xs.size(); ++s) {
          ++checked;
          QPoint z = compose(m, i, n, xs[s], ys[s], depth).point;
          good += target.halfspaces.contains(z) && target.halfspaces.inequalities[index].tight_at(z);
        }
      }
    }
    counts = std::to_string(good) + "/" + std::to_string(checked) + " compositions";
    return good == checked;
  });
}

CheckResult check_aw(std::size_t n, std::size_t samples, std::uint64_t seed) {
  return timed("aw_diagonal", n, [&](std::string& counts) {
    auto s = simplex_polytope(n);
    std::size_t good = 0;
    auto points = sample_points(s.vertices, n, samples, seed, 8);
    for (const auto& z : points) {
      auto d = pointwise_diagonal(s, z);
      good += aw_diagonal(n, z) == std::pair{d.lo, d.hi};
    }
    bool cells = diagonal_lower_cells(s.vertices, s.orientation) == aw_cells(n);
    counts = std::to_string(good) + "/" + std::to_string(points.size()) + " samples, " +
             std::to_string(aw_cells(n).size()) + " cells";
    return cells && good == points.size();
  });
}

CheckResult check_cube(std::size_t n, std::size_t samples, std::uint64_t seed) {
  return timed("cube_diagonal", n, [&](std::string& counts) {
    auto c = cube_polytope(n);
    std::size_t good = 0;
    auto points = sample_points(c.vertices, n, samples, seed, 8);
    for (const auto& z : points) {
      auto d = pointwise_diagonal(c, z);
      good += cube_diagonal(n, z) == std::pair{d.lo, d.hi};
    }
    bool cells = diagonal_lower_cells(c.vertices, c.orientation) == cube_cells(n);
    counts = std::to_string(good) + "/" + std::to_string(points.size()) + " samples, " +
             std::to_string(cube_cells(n).size()) + " cells";
    return cells && good == points.size();
  });
}

std::vector<CheckResult> diagonal_checks(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (std::size_t n = 2; n <= o.max_arity; ++n) {
    out.push_back(check_magical_vs_cones(n));
    out.push_back(check_magical_vs_lower_faces(n));
    out.push_back(check_magical_vs_barycenters(n));
    out.push_back(check_magical_vs_samples(n, std::max<std::size_t>(o.samples, 1000), o.seed));
    out.push_back(check_section(n, o.samples, o.seed));
    out.push_back(check_subdivision(n));
    out.push_back(check_orientation_independence(n, o.samples, o.seed));
    out.push_back(check_weight_independence(n, o.weights, o.seed));
  }
  return out;
}

std::vector<CheckResult> operad_checks(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (std::size_t n = 2; n <= o.max_arity; ++n) {
    out.push_back(check_operad_axioms(n));
    out.push_back(check_compose_grafting(n));
    if (n >= 3) {
      out.push_back(check_diagonal_compatibility(n));
      out.push_back(check_compose_facet(n, std::min<std::size_t>(o.samples, 5), o.depth, o.seed));
      out.push_back(check_transition_bound(n, std::min<std::size_t>(o.samples, 10), o.depth, o.seed));
    }
  }
  return out;
}

std::vector<CheckResult> run_verification(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  for (std::size_t n = 2; n <= o.max_arity; ++n) {
    out.push_back(check_vh_agreement(n, o.weights, o.seed));
    out.push_back(check_well_orientation(n));
  }
  for (auto& r : diagonal_checks(o)) out.push_back(std::move(r));
  for (auto& r : operad_checks(o)) out.push_back(std::move(r));
  for (std::size_t n = 1; n <= std::min<std::size_t>(o.max_arity, 4); ++n) {
    out.push_back(check_aw(n, o.samples, o.seed));
    out.push_back(check_cube(n, o.samples, o.seed));
  }
  return out;
}

}  // namespace assoc
