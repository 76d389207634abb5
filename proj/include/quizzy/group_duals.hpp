#pragma once

#include <string>
#include <vector>

#include "quizzy/errors.hpp"
#include "quizzy/rational.hpp"

namespace quizzy {

// Dual of a product (direct or free) of cyclic groups Z_{N_1},...,Z_{N_l},
// embedded in the quantum permutation group on N = sum N_r points. The
// generating multiset S holds, for each factor, all N_r powers of its
// generator; the identity therefore appears once per factor, |S| = N.
struct DualSpec {
  enum class Mode { Direct, Free };
  std::vector<long> orders;  // each >= 2
  Mode mode = Mode::Direct;

  long total_points() const;
};

void validate(const DualSpec& spec);

// Number of length-k sequences over the multiset S whose product is the
// identity: the k-loops at 1 on the Cayley graph, which is also the analytic
// k-orbital count of the dual.
long long loop_count(const DualSpec& spec, int k);

struct OrbitalClassStructure {
  int k = 0;
  long long total = 0;
  // Human-readable breakdown: pattern label and class count.
  std::vector<std::pair<std::string, long long>> breakdown;
};

// Algebraic k-orbital classes for k <= 3, resolved pattern by pattern; the
// mixed pattern with outer legs in one factor depends on the mode (the free
// product collapses it to a single class per ordered factor pair).
OrbitalClassStructure orbital_classes(const DualSpec& spec, int k);

// The same class count obtained by brute force: the nonvanishing relation is
// evaluated on every pair of index tuples and closed up. Also verifies that
// the relation is an equivalence. Small specs only.
long long orbital_classes_bruteforce(const DualSpec& spec, int k);

// The quantum permutation group on N >= 4 points identifies k-tuples exactly
// when their consecutive-equality patterns match.
bool snplus_equivalent(const std::vector<int>& a, const std::vector<int>& b);

// Number of algebraic k-orbital classes: 2^(k-1).
long long snplus_count(int k);

// Classes the rule actually realizes on tuples over {1..alphabet}; equals
// snplus_count(k) once alphabet >= 2. Also the dimension of the space F_k of
// pattern-constant vectors.
long long snplus_class_count_bruteforce(int k, int alphabet);

}  // namespace quizzy
