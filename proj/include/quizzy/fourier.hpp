#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quizzy/rational.hpp"

namespace quizzy {

// Element of the group algebra of Z_2^N: exponent vectors are bitmasks
// (bit i-1 for the i-th generator), multiplication adds exponents mod 2.
struct GroupAlgElement {
  int N = 0;
  std::map<std::uint32_t, Rational> terms;

  void add(std::uint32_t exps, const Rational& coeff);
  bool operator==(const GroupAlgElement& o) const = default;
};

GroupAlgElement multiply(const GroupAlgElement& a, const GroupAlgElement& b);

// Fourier transform on Z_2^N: the point delta_{g^i} goes to
// (1/2^N) sum_j (-1)^<i,j> g^j.
GroupAlgElement fourier_alpha(std::uint32_t point, int N);

// Inverse transform: g^i goes to sum_j (-1)^<i,j> delta_{g^j}; returned as a
// dense coefficient vector over the 2^N points.
std::vector<Rational> fourier_beta(std::uint32_t exponents, int N);

}  // namespace quizzy
