#pragma once

#include <string>
#include <vector>

#include "quizzy/errors.hpp"
#include "quizzy/rational.hpp"

namespace quizzy {

// A finite group acting on {0..set_size-1}, stored as the full element list
// (one image array per element).
struct FiniteAction {
  long set_size = 0;
  std::vector<std::vector<int>> elements;
};

FiniteAction hyperoctahedral_on_segments(int N, const Budget& budget = {});
FiniteAction hyperoctahedral_on_cube(int N, const Budget& budget = {});
FiniteAction symmetric_on_points(int N, const Budget& budget = {});

// (1/|G|) sum_g (#fixed points of g)^k: the number of k-orbitals. Fixed
// points are counted on the set itself, never through matrix traces, so the
// comparison against the linear-algebra paths stays independent.
Int burnside_orbital_count(const FiniteAction& action, int k);

struct KOrbitals {
  long long tuple_count = 0;
  int class_count = 0;
  std::vector<int> class_of;            // per tuple code
  std::vector<long long> class_sizes;   // per class
  // One representative tuple per class (0-based point indices).
  std::vector<std::vector<int>> representatives;
};

// Explicit k-orbital classes by closure under the group elements; budgeted
// by |X|^k.
KOrbitals enumerate_korbitals(const FiniteAction& action, int k,
                              long long budget_tuples = 1000000);

// Averaged coordinate products over the group: the exact Haar integral
// int u_{i1 j1} ... u_{ik jk} = (1/|G|) #{g : g(j_r) = i_r for all r},
// indices 0-based.
Rational average_coordinate_product(const FiniteAction& action, const std::vector<int>& rows,
                                    const std::vector<int>& cols);

struct TransitivityReport {
  int k = 0;
  Int moment;                       // int chi^k
  Rational distinct_index_integral; // int u_{i1 j1}...u_{ik jk}, all distinct
  bool moments_match = false;       // moment equals 1,2,5 pattern up to k
  bool integrals_match = false;     // distinct = (N-k)!/N!, ker-based formula holds
};

// Checks the k-transitivity equivalences (moments 1,2,5; distinct-index
// integral (N-k)!/N!; kernel-matching rule) on a permutation action, k <= 3.
TransitivityReport transitivity_check(const FiniteAction& action, int k);

// Class counts of the k-dot segment configurations: orbital classes of the
// segment action grouped by the invariant (same-point, same-segment) kernel
// pair of a representative. Returned sorted ascending.
std::vector<long long> segment_configuration_multiplicities(int N, int k,
                                                            const Budget& budget = {});

}  // namespace quizzy
