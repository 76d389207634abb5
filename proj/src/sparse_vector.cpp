#include "quizzy/sparse_vector.hpp"

#include <stdexcept>

namespace quizzy {

std::uint64_t encode_index(const std::vector<int>& tuple, long N) {
  std::uint64_t code = 0;
  std::uint64_t weight = 1;
  for (int t : tuple) {
    if (t < 1 || t > N) throw std::invalid_argument("index value out of range");
    code += static_cast<std::uint64_t>(t - 1) * weight;
    weight *= static_cast<std::uint64_t>(N);
  }
  return code;
}

std::vector<int> decode_index(std::uint64_t code, long N, int legs) {
  std::vector<int> tuple(static_cast<size_t>(legs));
  for (int i = 0; i < legs; ++i) {
    tuple[static_cast<size_t>(i)] = static_cast<int>(code % static_cast<std::uint64_t>(N)) + 1;
    code /= static_cast<std::uint64_t>(N);
  }
  return tuple;
}

void SparseTensorVector::add(std::uint64_t code, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = entries.emplace(code, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) entries.erase(it);
  }
}

Rational dot(const SparseTensorVector& a, const SparseTensorVector& b) {
  if (a.N != b.N || a.legs != b.legs)
    throw std::invalid_argument("dot product on vectors of different shape");
  const auto& small = a.entries.size() <= b.entries.size() ? a : b;
  const auto& large = a.entries.size() <= b.entries.size() ? b : a;
  Rational total = 0;
  for (const auto& [code, coeff] : small.entries) {
    auto it = large.entries.find(code);
    if (it != large.entries.end()) total += coeff * it->second;
  }
  return total;
}

void add_scaled(SparseTensorVector& a, const Rational& c, const SparseTensorVector& b) {
  if (a.N != b.N || a.legs != b.legs)
    throw std::invalid_argument("add_scaled on vectors of different shape");
  if (c == 0) return;
  for (const auto& [code, coeff] : b.entries) a.add(code, c * coeff);
}

}  // namespace quizzy
