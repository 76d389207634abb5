#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "quizzy/rational.hpp"

namespace quizzy {

// Multi-index encoding over {1..N}^m: base-N little-endian with leg 1 least
// significant, code = sum (t_i - 1) * N^(i-1). Fixed so caches stay stable.
std::uint64_t encode_index(const std::vector<int>& tuple, long N);
std::vector<int> decode_index(std::uint64_t code, long N, int legs);

// Exact sparse vector indexed by {1..N}^m. No zero entries are stored.
struct SparseTensorVector {
  long N = 1;
  int legs = 0;
  std::map<std::uint64_t, Rational> entries;

  void add(std::uint64_t code, const Rational& coeff);
  bool operator==(const SparseTensorVector& o) const = default;
};

Rational dot(const SparseTensorVector& a, const SparseTensorVector& b);

// a += c * b
void add_scaled(SparseTensorVector& a, const Rational& c, const SparseTensorVector& b);

}  // namespace quizzy
