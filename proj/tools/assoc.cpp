// Command-line front end: build, query, verify and export.

#include "assoc/classics.hpp"
#include "assoc/diagonal.hpp"
#include "assoc/errors.hpp"
#include "assoc/io.hpp"
#include "assoc/operad.hpp"
#include "assoc/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace assoc;

namespace {

constexpr std::size_t kArityGuard = 8;

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t max_arity = 5;
  std::size_t depth = 8;
  std::string format = "json";
  std::string out;
  bool timing = false;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

void emit_json(const RunConfig& cfg, const Json& j) { emit(cfg, j.dump(2) + "\n"); }

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  throw UsageError("format " + cfg.format + " is not available for this command");
}

Weight weight_or_standard(const std::vector<std::int64_t>& weights, std::size_t arity) {
  if (weights.empty()) return standard_weight(arity);
  if (weights.size() != arity) throw UsageError("--weights must have --arity entries");
  return weights;
}

std::string pairs_text(const std::vector<MatchingPair>& pairs) {
  std::ostringstream s;
  for (const auto& p : pairs) s << p.F.encoding() << " x " << p.G.encoding() << "  (" << p.dim_f() << ", " << p.dim_g() << ")\n";
  return s.str();
}

int report(const RunConfig& cfg, const std::vector<CheckResult>& results) {
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok;
  if (cfg.format == "text") {
    std::ostringstream s;
    for (const auto& r : results) {
      s << "n=" << r.arity << "  " << format_line(r);
      if (cfg.timing) s << "  (" << r.elapsed_seconds << " s)";
      s << '\n';
    }
    s << (ok ? "all checks passed\n" : "some checks failed\n");
    emit(cfg, s.str());
  } else {
    require_format(cfg, {"json"});
    Json checks = Json::array();
    for (const auto& r : results) {
      Json c{{"check", r.check}, {"arity", r.arity}, {"status", r.ok ? "OK" : "FAIL"}, {"counts", r.counts}};
      if (cfg.timing) c["elapsed"] = r.elapsed_seconds;
      checks.push_back(c);
    }
    emit_json(cfg, Json{{"status", ok ? "OK" : "FAIL"}, {"checks", checks}});
  }
  return ok ? kOk : kVerificationFailed;
}

VerifyOptions verify_options(const RunConfig& cfg) {
  VerifyOptions o;
  o.max_arity = cfg.max_arity;
  o.seed = cfg.seed;
  o.samples = cfg.samples;
  o.depth = cfg.depth;
  return o;
}

Json point_pair_json(const QPoint& lo, const QPoint& hi) { return Json{{"lo", to_json(lo)}, {"hi", to_json(hi)}}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loday associahedra, their cellular diagonal and operad structure"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file using the long flag names; flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Sample count for randomized checks")->capture_default_str();
  app.add_option("--max-arity", cfg.max_arity, "Largest arity for verification")
      ->check(CLI::Range(std::size_t{2}, kArityGuard))
      ->capture_default_str();
  app.add_option("--depth", cfg.depth, "Transition map depth")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "text", "off"}))
      ->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default stdout)");
  app.add_flag("--timing", cfg.timing, "Include elapsed times in reports");

  std::size_t arity = 4;
  std::vector<std::int64_t> weights;
  std::string z_text, x_text, y_text;
  bool decimal = false;
  std::optional<std::function<int()>> action;
  auto run = [&](std::function<int()> f) { action = std::move(f); };

  // trees
  auto* trees = app.add_subcommand("trees", "Planar trees");
  trees->require_subcommand(1);
  auto* enumerate = trees->add_subcommand("enumerate", "List trees of a given arity");
  enumerate->add_option("--arity", arity)->required()->check(CLI::Range(std::size_t{1}, kArityGuard));
  bool binary = false, all = false;
  auto* binary_flag = enumerate->add_flag("--binary", binary, "Binary trees only (default)");
  enumerate->add_flag("--all", all, "All planar trees")->excludes(binary_flag);
  enumerate->callback([&] {
    run([&] {
      auto list = all ? enumerate_planar_trees(arity) : enumerate_binary_trees(arity);
      if (cfg.format == "text") {
        std::string s;
        for (const auto& t : list) s += t.encoding() + "\n";
        emit(cfg, s);
      } else {
        require_format(cfg, {"json"});
        Json j = Json::array();
        for (const auto& t : list) j.push_back(to_json(t));
        emit_json(cfg, j);
      }
      return kOk;
    });
  });

  // loday
  auto* loday = app.add_subcommand("loday", "Loday realizations");
  loday->require_subcommand(1);
  auto* build = loday->add_subcommand("build", "Vertices and facets of K_w");
  build->add_option("--weights", weights, "Comma separated positive integers")->required()->delimiter(',');
  build->add_flag("--decimal", decimal, "OFF coordinates as decimals");
  build->callback([&] {
    run([&] {
      if (weights.size() > kArityGuard) throw UsageError("arity above the guard of 8");
      auto k = build_realization(weights);
      if (cfg.format == "off") {
        emit(cfg, to_off(k.vertices.vertices, decimal));
      } else if (cfg.format == "text") {
        std::ostringstream s;
        for (const auto& t : k.vertex_trees) s << t.encoding() << "  " << to_string(k.vertex(t)) << '\n';
        for (std::size_t j = 0; j < k.facet_trees.size(); ++j) {
          const auto& c = k.halfspaces.inequalities[j];
          s << k.facet_trees[j].encoding() << "  <" << to_string(c.normal) << ", x> >= " << to_string(c.rhs) << '\n';
        }
        emit(cfg, s.str());
      } else {
        emit_json(cfg, to_json(k));
      }
      return kOk;
    });
  });

  // diag
  auto* diag = app.add_subcommand("diag", "Cellular diagonal");
  diag->require_subcommand(1);
  auto* cells = diag->add_subcommand("cells", "Matching pairs");
  cells->add_option("--arity", arity)->required()->check(CLI::Range(std::size_t{2}, kArityGuard));
  cells->add_option("--weights", weights)->delimiter(',');
  std::string oracle = "magical";
  cells->add_option("--oracle", oracle)
      ->check(CLI::IsMember({"magical", "cones", "sample", "lower", "barycenter"}))
      ->capture_default_str();
  cells->callback([&] {
    run([&] {
      std::vector<MatchingPair> pairs;
      if (oracle == "magical") {
        pairs = magical_pairs(arity);
      } else {
        auto k = build_realization(weight_or_standard(weights, arity));
        if (oracle == "cones") pairs = normal_cone_pairs(k);
        if (oracle == "sample") pairs = sample_oracle(k, cfg.samples, cfg.seed);
        if (oracle == "lower") pairs = lower_face_pairs(product_realization({k}));
        if (oracle == "barycenter") pairs = barycenter_oracle(k);
      }
      if (cfg.format == "text") {
        emit(cfg, pairs_text(pairs));
      } else {
        require_format(cfg, {"json"});
        emit_json(cfg, to_json(pairs));
      }
      return kOk;
    });
  });

  auto* point = diag->add_subcommand("point", "Pointwise diagonal of z");
  point->add_option("--arity", arity)->required()->check(CLI::Range(std::size_t{2}, kArityGuard));
  point->add_option("--weights", weights)->delimiter(',');
  point->add_option("--z", z_text, "Comma separated rationals")->required();
  point->callback([&] {
    run([&] {
      auto k = build_realization(weight_or_standard(weights, arity));
      auto d = pointwise_diagonal(k, parse_qvector(z_text));
      if (cfg.format == "text") {
        emit(cfg, "lo = " + to_string(d.lo) + "  in " + d.lo_face.encoding() + "\nhi = " + to_string(d.hi) + "  in " +
                      d.hi_face.encoding() + "\n");
      } else {
        require_format(cfg, {"json"});
        Json j = point_pair_json(d.lo, d.hi);
        j["z"] = to_json(d.z);
        j["lo_face"] = to_json(d.lo_face.trees.at(0));
        j["hi_face"] = to_json(d.hi_face.trees.at(0));
        emit_json(cfg, j);
      }
      return kOk;
    });
  });

  auto* dverify = diag->add_subcommand("verify", "Oracle equivalences for the diagonal");
  std::optional<std::size_t> only_arity;
  std::optional<std::size_t> max_flag;
  dverify->add_option("--arity", only_arity, "Check one arity")->check(CLI::Range(std::size_t{2}, kArityGuard));
  dverify->add_option("--max", max_flag, "Check arities 2..max")->check(CLI::Range(std::size_t{2}, kArityGuard));
  dverify->callback([&] {
    run([&] {
      VerifyOptions o = verify_options(cfg);
      if (max_flag) o.max_arity = *max_flag;
      std::vector<CheckResult> results;
      for (auto& r : diagonal_checks(o)) {
        if (!only_arity || r.arity == *only_arity) results.push_back(std::move(r));
      }
      return report(cfg, results);
    });
  });

  auto* dg = diag->add_subcommand("dg", "Cellular formula for the diagonal of the top cell");
  dg->add_option("--arity", arity)->required()->check(CLI::Range(std::size_t{2}, kArityGuard));
  dg->callback([&] {
    run([&] {
      auto terms = dg_formula(arity);
      if (cfg.format == "text") {
        emit(cfg, dg_formula_text(terms) + "\n");
      } else {
        require_format(cfg, {"json"});
        Json j = Json::array();
        for (const auto& t : terms) j.push_back(Json{{"left", to_json(t.left)}, {"right", to_json(t.right)}});
        emit_json(cfg, j);
      }
      return kOk;
    });
  });

  // operad
  auto* operad = app.add_subcommand("operad", "Operadic composition");
  operad->require_subcommand(1);
  auto* comp = operad->add_subcommand("compose", "x ∘_i y for x in K_m and y in K_n");
  std::size_t m = 0, i = 0, n = 0;
  comp->add_option("--m", m)->required()->check(CLI::Range(std::size_t{1}, kArityGuard));
  comp->add_option("--i", i)->required()->check(CLI::PositiveNumber);
  comp->add_option("--n", n)->required()->check(CLI::Range(std::size_t{1}, kArityGuard));
  comp->add_option("--x", x_text)->required();
  comp->add_option("--y", y_text)->required();
  comp->callback([&] {
    run([&] {
      if (m + n - 1 > kArityGuard) throw UsageError("arity above the guard of 8");
      if (i > m) throw UsageError("--i must be at most --m");
      QPoint x = m >= 2 ? parse_qvector(x_text) : QPoint{};
      QPoint y = n >= 2 ? parse_qvector(y_text) : QPoint{};
      TransitionResult r = compose(m, i, n, x, y, cfg.depth);
      if (cfg.format == "text") {
        emit(cfg, to_string(r.point) + (r.exact ? "  (exact)\n" : "  (error <= " + to_string(r.error_bound) + ")\n"));
      } else {
        require_format(cfg, {"json"});
        Json j{{"point", to_json(r.point)}, {"error_bound", to_json(r.error_bound)}, {"exact", r.exact}};
        if (m >= 2 && n >= 2) j["facet"] = to_json(two_vertex_tree(i - 1, n, m - i));
        emit_json(cfg, j);
      }
      return kOk;
    });
  });
  auto* overify = operad->add_subcommand("verify", "Operad axioms and compatibility with the diagonal");
  overify->callback([&] { run([&] { return report(cfg, operad_checks(verify_options(cfg))); }); });

  // classics
  auto* classics = app.add_subcommand("classics", "Simplex and cube diagonals");
  classics->require_subcommand(1);
  std::size_t dim = 0;
  auto classic = [&](const char* name, const char* help, bool simplex) {
    auto* sub = classics->add_subcommand(name, help);
    sub->add_option("--n", dim)->required()->check(CLI::Range(std::size_t{0}, kArityGuard));
    sub->add_option("--z", z_text)->required();
    sub->callback([&, simplex] {
      run([&, simplex] {
        QPoint z = dim == 0 ? QPoint{} : parse_qvector(z_text);
        auto [lo, hi] = simplex ? aw_diagonal(dim, z) : cube_diagonal(dim, z);
        if (cfg.format == "text") {
          emit(cfg, "lo = " + to_string(lo) + "\nhi = " + to_string(hi) + "\n");
        } else {
          require_format(cfg, {"json"});
          emit_json(cfg, point_pair_json(lo, hi));
        }
        return kOk;
      });
    });
  };
  classic("aw", "Alexander-Whitney diagonal of the simplex", true);
  classic("cube", "Serre diagonal of the cube", false);

  // verify
  auto* verify = app.add_subcommand("verify", "Full invariant suite up to --max-arity");
  verify->callback([&] { run([&] { return report(cfg, run_verification(verify_options(cfg))); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action ? (*action)() : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}
