#pragma once

#include <vector>

#include "quizzy/errors.hpp"
#include "quizzy/rational.hpp"

namespace quizzy {

// Element of the hyperoctahedral group: a permutation of {1..N} with a sign
// at each coordinate. Acts on R^N by e_i -> signs[i] * e_{perm[i]}.
struct SignedPermutation {
  std::vector<int> perm;   // 1-based images
  std::vector<int> signs;  // +1 / -1 per source coordinate

  int size() const { return static_cast<int>(perm.size()); }
  static SignedPermutation identity(int N);
  auto operator<=>(const SignedPermutation& o) const = default;
};

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h);  // g after h
SignedPermutation inverse(const SignedPermutation& g);

// Matrix with column i equal to signs[i] * e_{perm[i]}.
std::vector<std::vector<Rational>> matrix_of(const SignedPermutation& g);

// All 2^N * N! elements; guarded by the group-order budget.
std::vector<SignedPermutation> enumerate_hyperoctahedral(int N, const Budget& budget = {});

// Action on the 2N segment endpoints, 0-based: endpoint (i,+) is index i-1,
// endpoint (i,-) is index N+i-1. Returns the image index per point.
std::vector<int> action_segments(const SignedPermutation& g);

// Action on the 2^N hypercube vertices x in {+-1}^N, encoded by bitmasks
// (bit i-1 set means x_i = -1): the image y has y_{perm(i)} = signs[i] x_i.
std::vector<int> action_cube(const SignedPermutation& g);

// The 2N x 2N sudoku matrix [[a,b],[b,a]] with a = (g^2+g)/2, b = (g^2-g)/2
// entrywise; a permutation matrix equal to action_segments(g).
std::vector<std::vector<Rational>> sudoku_matrix(const SignedPermutation& g);

}  // namespace quizzy
