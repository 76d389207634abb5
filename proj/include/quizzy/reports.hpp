#pragma once

#include <string>
#include <vector>

#include "quizzy/errors.hpp"
#include "quizzy/rational.hpp"

namespace quizzy {

// One computed number with its provenance; the value is always exact.
struct OrbitalReport {
  std::string computation;
  std::string group;
  long N = 0;
  int k = 0;
  std::string method;  // burnside | gram-rank | constrained-rank | loop-count | weingarten | symbolic
  Rational value;
  long long ms = 0;
};

struct WordMomentRow {
  std::string word;           // over {p,u}
  Rational rank_value;        // constrained-rank path
  Rational weingarten_value;  // exact Weingarten path
};

// Outcome of checking a published value against computation. The refuted
// status requires at least two independent methods that agree with each
// other and disagree with the claim.
struct DiscrepancyReport {
  std::string claim;
  Rational claimed;
  Rational computed;
  std::vector<WordMomentRow> breakdown;
  std::vector<std::pair<std::string, Rational>> methods;
  std::string status;  // confirmed | refuted-by-two-independent-methods | inconclusive
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  std::vector<DiscrepancyReport> discrepancies;
  bool all_passed() const;
};

// The 4-orbital count of the liberated 2N-point sudoku action, computed at
// two dimensions and through two independent methods (16-word constrained
// ranks, exact Weingarten sums), compared against the published value 43.
DiscrepancyReport reconcile_theorem86(long n_small = 5, long n_large = 6,
                                      const Budget& budget = {});

// Free-product dual 3-orbitals: algebraic class total (structural count and
// brute-force closure, two methods) against the loop count.
DiscrepancyReport reconcile_free_dual_classes(const std::vector<long>& orders,
                                              const Budget& budget = {});

std::vector<std::string> suite_names();

// Named verification suites; failures are reported, never thrown. The
// experimental flag additionally runs the balanced-category variants, which
// report without asserting.
SuiteResult verify_suite(const std::string& name, const Budget& budget = {},
                         bool experimental = false);

struct ConjectureReport {
  long N = 0;
  int k = 0;
  bool gate_passed = false;    // at k=2 both sides equal N+1
  Int classical_side;          // Burnside for the cube action
  long long quantum_side = 0;  // exterior rank-word sums
};

// Side-by-side 3-orbital counts for the two hypercube symmetries; marked
// exploratory, no pass/fail beyond the k=2 consistency gate.
ConjectureReport explore_conjecture82(long N, int k = 3, const Budget& budget = {});

}  // namespace quizzy
