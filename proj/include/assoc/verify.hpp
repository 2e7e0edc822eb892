#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace assoc {

/// One line of a verification report.
struct CheckResult {
  std::string check;
  std::size_t arity = 0;
  bool ok = false;
  /// What was compared, e.g. "6 = 6 pairs".
  std::string counts;
  double elapsed_seconds = 0;
};

struct VerifyOptions {
  std::size_t max_arity = 5;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t weights = 10;
  std::size_t depth = 8;
};

/// "check: counts, OK" or "check: counts, FAIL".
std::string format_line(const CheckResult& r);

// Face-level diagonal of K_n.
CheckResult check_magical_vs_cones(std::size_t n);
CheckResult check_magical_vs_lower_faces(std::size_t n);
/// Largest arity at which random samples are expected to hit every cell.
inline constexpr std::size_t kFullSampleCoverage = 5;

/// Equality up to kFullSampleCoverage, soundness (hits are matching pairs) beyond.
CheckResult check_magical_vs_samples(std::size_t n, std::size_t samples, std::uint64_t seed);
CheckResult check_magical_vs_barycenters(std::size_t n);
/// β(Δ(z)) = z exactly and every hit cell lies in a matching pair.
CheckResult check_section(std::size_t n, std::size_t samples, std::uint64_t seed);
CheckResult check_subdivision(std::size_t n);
/// Matching pairs and sampled diagonals under (n-1, ..., 1) and (2^{n-1}, ..., 2).
CheckResult check_orientation_independence(std::size_t n, std::size_t samples, std::uint64_t seed);
/// Normal-cone pairs for random weights.
CheckResult check_weight_independence(std::size_t n, std::size_t weights, std::uint64_t seed);

// Realizations.
/// Vertex enumeration of the H-representation against the Loday points, and
/// tight vertex sets of facets against grafts, for random weights.
CheckResult check_vh_agreement(std::size_t n, std::size_t weights, std::uint64_t seed);
/// The order generated by geometric edges oriented by v equals the Tamari
/// order, for two decreasing vectors.
CheckResult check_well_orientation(std::size_t n);

// Operad structure, indexed by total arity.
CheckResult check_operad_axioms(std::size_t total_arity);
CheckResult check_compose_grafting(std::size_t total_arity);
CheckResult check_diagonal_compatibility(std::size_t total_arity);
/// Interior transition-map values lie in the target within diam / 2^depth.
CheckResult check_transition_bound(std::size_t n, std::size_t samples, std::size_t depth, std::uint64_t seed);
/// Interior compositions lie in K_{m+n-1} on the facet labeled c_m ∘_i c_n.
CheckResult check_compose_facet(std::size_t total_arity, std::size_t samples, std::size_t depth, std::uint64_t seed);

// Simplices and cubes, indexed by dimension.
CheckResult check_aw(std::size_t n, std::size_t samples, std::uint64_t seed);
CheckResult check_cube(std::size_t n, std::size_t samples, std::uint64_t seed);

std::vector<CheckResult> diagonal_checks(const VerifyOptions& o);
std::vector<CheckResult> operad_checks(const VerifyOptions& o);
/// Every check up to o.max_arity in a fixed order.
std::vector<CheckResult> run_verification(const VerifyOptions& o);

}  // namespace assoc
