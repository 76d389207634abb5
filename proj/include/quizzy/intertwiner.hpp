#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quizzy/categories.hpp"
#include "quizzy/errors.hpp"
#include "quizzy/exact_matrix.hpp"
#include "quizzy/sparse_vector.hpp"

namespace quizzy {

// A quizzy quantum group: an easy partition category at q=+1, or its q=-1
// twist (defined only inside Peven). N is the matrix dimension.
struct QuizzySpec {
  CategoryId category = CategoryId::P;
  bool twisted = false;
  long N = 1;
};

void validate_spec(const QuizzySpec& spec);

// Subspace constraints on tensor legs. Diagonal pairs force two legs equal
// (the invariant subspace span{e_i (x) e_i}); antisymmetric blocks project a
// run of consecutive legs onto alternating tensors.
struct LegConstraint {
  enum class Kind { DiagonalPair, AntisymmetricBlock };
  Kind kind = Kind::DiagonalPair;
  std::vector<int> legs;  // 1-based positions

  static LegConstraint diagonal(int a, int b) { return {Kind::DiagonalPair, {a, b}}; }
  static LegConstraint antisymmetric(std::vector<int> legs) {
    return {Kind::AntisymmetricBlock, std::move(legs)};
  }
};

// The partition vector xi_pi on {1..N}^m: entry 1 at every multi-index that
// is constant on each block of pi, nothing elsewhere.
SparseTensorVector xi_vector(const SetPartition& pi, long N);

// Twisted partition vector: same support, entry = signature(kernel(index)).
// Requires all blocks of pi even (the kernel of a supported index is then
// even as well, so the signature is defined).
SparseTensorVector xi_twisted(const SetPartition& pi, long N);

// The Moebius expansion sum_{sigma<=tau<=pi} eps(tau) mu(sigma,tau) xi_sigma
// over the even-partition lattice. Must equal xi_twisted entrywise; that
// equality is this module's central self-test.
SparseTensorVector twist_via_mobius(const SetPartition& pi, long N);

// dim Fix(u^(x)k) = rank of the (twisted) partition vectors of the category
// on k points: the number of analytic k-orbitals.
int fix_dim(const QuizzySpec& spec, int k, const Budget& budget = {});

// dim( Fix(u^(x)m) intersect V ) for the subspace V cut out by the
// constraints, computed as the rank of the projected family {P_V xi_pi}.
int constrained_fix_dim(const QuizzySpec& spec, int m,
                        const std::vector<LegConstraint>& constraints, const Budget& budget = {});

// Integral of an ordered character word over an H-type quantum group
// (category Peven or NCeven): word is a string over {p, u}, each p expanding
// into two diagonal-constrained u-legs in word order.
long long word_moment(const std::string& word, const QuizzySpec& spec, const Budget& budget = {});

// The same integral evaluated through the Weingarten formula instead of a
// rank computation; exact, and an independent route to the same number.
Rational word_moment_weingarten(const std::string& word, const QuizzySpec& spec);

// Analytic k-orbital count of the 2N-point sudoku action: sum of word_moment
// over all 2^k words in {p,u}^k. Category Peven for the classical group,
// NCeven for the liberated one.
long long sudoku_moment(int k, long N, bool liberated, const Budget& budget = {});

// dim Fix(Lambda^{r_1} (x) ... (x) Lambda^{r_k}) for the orthogonal group,
// via category P2 with antisymmetric-block constraints on sum(r_i) legs.
long long exterior_word_moment(const std::vector<int>& ranks, long N, const Budget& budget = {});

// Analytic k-orbital count of the twisted-orthogonal action on 2^N points:
// sum of exterior_word_moment over all (N+1)^k rank words (dimensions are
// twist-invariant).
long long hypercube_orbital_count(int k, long N, const Budget& budget = {});

// Exact Haar integral of u_{a1 b1} ... u_{am bm} through the Weingarten
// matrix W = Gram^-1. Throws SingularGramError (naming the smallest valid N)
// when the Gram matrix is singular at this N.
Rational weingarten_integrate(const QuizzySpec& spec,
                              const std::vector<std::pair<int, int>>& index_pairs);

struct LiberationResult {
  std::optional<int> level;       // empty: no drop up to cap
  int cap = 6;
  std::vector<int> inner_dims;    // fix_dim at k = 1..last computed
  std::vector<int> outer_dims;
};

// Level of a liberation inner < outer: smallest l <= cap where the fixed
// point space strictly shrinks, together with both dimension sequences.
LiberationResult liberation_level(const QuizzySpec& inner, const QuizzySpec& outer, int cap = 6,
                                  const Budget& budget = {});

}  // namespace quizzy
