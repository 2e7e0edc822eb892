// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "assoc/diagonal.hpp"
#include "assoc/verify.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace assoc;

namespace {

// Pair counts per arity; 22 and 91 were frozen after the first verified enumeration.
const std::map<std::size_t, std::size_t> kPairCounts{{2, 1}, {3, 2}, {4, 6}, {5, 22}, {6, 91}};

constexpr std::uint64_t kSeed = 20240601;

struct Criterion {
  int id;
  std::string title;
  std::vector<CheckResult> checks;
  bool extra_ok = true;
  std::string extra;
};

bool report(const Criterion& c, double seconds) {
  bool ok = c.extra_ok;
  for (const auto& r : c.checks) ok = ok && r.ok;
  std::printf("%s  %d. %s (%zu checks%s%s, %.1f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), c.checks.size(),
              c.extra.empty() ? "" : "; ", c.extra.c_str(), seconds);
  for (const auto& r : c.checks) {
    if (!r.ok) std::printf("        n=%zu %s\n", r.arity, format_line(r).c_str());
  }
  std::fflush(stdout);
  return ok;
}

template <class F>
bool run(int id, const std::string& title, F&& body) {
  auto start = std::chrono::steady_clock::now();
  Criterion c{id, title, {}, true, ""};
  body(c);
  return report(c, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

}  // namespace

int main() {
  bool ok = true;

  ok &= run(1, "magical formula equals the normal-cone oracle, n = 2..6", [](Criterion& c) {
    std::string counts;
    for (const auto& [n, expected] : kPairCounts) {
      c.checks.push_back(check_magical_vs_cones(n));
      std::size_t got = magical_pairs(n).size();
      c.extra_ok = c.extra_ok && got == expected;
      counts += (counts.empty() ? "" : ",") + std::to_string(got);
    }
    c.extra = "counts " + counts;
  });

  ok &= run(2, "section property on 1000 samples per n <= 5", [](Criterion& c) {
    for (std::size_t n = 2; n <= 5; ++n) c.checks.push_back(check_section(n, 1000, kSeed + n));
  });

  ok &= run(3, "V/H agreement with graft-labeled facets, 10 weights per n <= 5", [](Criterion& c) {
    for (std::size_t n = 2; n <= 5; ++n) c.checks.push_back(check_vh_agreement(n, 10, kSeed + n));
  });

  ok &= run(4, "oriented edges generate the Tamari order, n <= 6", [](Criterion& c) {
    for (std::size_t n = 2; n <= 6; ++n) c.checks.push_back(check_well_orientation(n));
  });

  ok &= run(5, "midpoint cells tile K_n, n = 3, 4, 5", [](Criterion& c) {
    for (std::size_t n = 3; n <= 5; ++n) c.checks.push_back(check_subdivision(n));
  });

  ok &= run(6, "Alexander-Whitney and Serre diagonals recovered, n <= 4", [](Criterion& c) {
    for (std::size_t n = 1; n <= 4; ++n) {
      c.checks.push_back(check_aw(n, 500, kSeed + n));
      c.checks.push_back(check_cube(n, 500, kSeed + n));
    }
  });

  ok &= run(7, "operad axioms, grafting, diagonal compatibility, transition bound", [](Criterion& c) {
    for (std::size_t n = 2; n <= 6; ++n) {
      c.checks.push_back(check_operad_axioms(n));
      c.checks.push_back(check_compose_grafting(n));
    }
    for (std::size_t n = 3; n <= 5; ++n) {
      c.checks.push_back(check_diagonal_compatibility(n));
      c.checks.push_back(check_compose_facet(n, 5, 8, kSeed + n));
      c.checks.push_back(check_transition_bound(n, 20, 8, kSeed + n));
    }
  });

  ok &= run(8, "independence of orientation and weights", [](Criterion& c) {
    for (std::size_t n = 2; n <= 5; ++n) {
      c.checks.push_back(check_orientation_independence(n, 200, kSeed + n));
      c.checks.push_back(check_weight_independence(n, 10, kSeed + n));
    }
  });

  return ok ? 0 : 1;
}
