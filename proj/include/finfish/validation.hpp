#ifndef FINFISH_VALIDATION_HPP
#define FINFISH_VALIDATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "finfish/numeric.hpp"

namespace finfish {

struct SuiteFailure {
  std::vector<long long> tuple;  // statistic tuple of the counterexample
  std::string expected;
  std::string actual;
  std::string note;
};

// Machine-readable outcome of one validation suite. Deterministic given the
// parameters, except for the wall-time field.
struct SuiteReport {
  std::string suite;
  std::string params;
  bool pass = true;
  long long checked = 0;
  std::optional<SuiteFailure> failure;  // first counterexample, if any
  double seconds = 0.0;

  // Schema: {suite, params, pass, checked, failure?, seconds}.
  std::string to_json() const;
};

// Fish <-> tree statistic correspondence under test: fish
// (size, tails, lsize, rsize, fin) against tree
// (nodes+1, rightBranches+1, parityA+1, parityB+1, core+1), where the parity
// pair (parityA, parityB) is (nonRootEven, oddNodes) in orientation A and
// swapped in orientation B. Only the orientation toggles; offsets are fixed.
struct AlignmentMap {
  bool parity_a_is_non_root_even = true;

  // Maps a key of joint_distribution_trees to fish key order
  // (size, tails, rsize, lsize, fin).
  StatKey fish_key(const StatKey& tree_key) const;
  std::string name() const;
};

// Grammar enumeration vs the closed-form counts: per-size totals for sizes
// 2..maxN+1, then (lsize, rsize) marginals and tail-weighted marginals.
SuiteReport check_formulas(int max_n = 9);

// Every coefficient of the master series equals the grammar DP count, both
// directions, through t-order `order` (sizes 2..order+1).
SuiteReport check_series_vs_enum(int order = 8);

// Growth oracle vs grammar: canonical-code sets for area <= maxArea are
// equal; decompose(build) and build(decompose) round-trip; the
// planarity/polyomino census matches the known small-area facts.
SuiteReport check_oracle(int max_area = 6);

// Fish (size, fin) distribution equals tree (nodes+1, core+1) distribution
// for all sizes <= maxSize.
SuiteReport check_fincore(int max_size = 10);

// Full five-statistic joint comparison under AlignmentMap; passes when at
// least one parity orientation matches everywhere, and the report's params
// field names the surviving orientation(s).
SuiteReport check_conjecture(int max_size = 9);

// The identity ledger: the u=U substitution identities, the marked-fish
// relations, the tail parametrization at y=1, the tree-series identities and
// recurrence, brute-force tree cross-checks, kernel-method extractions, and
// enumeration-side marked counts. Runs the five-variable ledger at `order`
// and the y=a=b=1 comparisons at order+2.
SuiteReport check_identities(int order = 10);

struct AreaRow {
  int size = 0;
  Int fish;          // number of fish of this size
  Int total_area;    // summed cell counts
  Rat mean_area;     // total_area / fish
  Rat mean_per_size; // mean_area / size
  double slope = 0.0;  // log(mean_k/mean_{k-1}) / log(k/(k-1)); 0 on first row
};

struct AreaSummary {
  std::vector<AreaRow> rows;  // sizes 2..maxSize
  SuiteReport report;         // asserts both mean columns strictly increase
};

// Exact mean areas from realized fish; diagnostic slopes are reported but
// never asserted.
AreaSummary area_report(int max_size = 10);

}  // namespace finfish

#endif  // FINFISH_VALIDATION_HPP
