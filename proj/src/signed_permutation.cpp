#include "quizzy/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quizzy {

SignedPermutation SignedPermutation::identity(int N) {
  SignedPermutation g;
  g.perm.resize(static_cast<size_t>(N));
  std::iota(g.perm.begin(), g.perm.end(), 1);
  g.signs.assign(static_cast<size_t>(N), 1);
  return g;
}

SignedPermutation compose(const SignedPermutation& g, const SignedPermutation& h) {
  if (g.size() != h.size()) throw std::invalid_argument("composing signed permutations of different size");
  const int n = g.size();
  SignedPermutation out;
  out.perm.resize(static_cast<size_t>(n));
  out.signs.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int mid = h.perm[static_cast<size_t>(i - 1)];
    out.perm[static_cast<size_t>(i - 1)] = g.perm[static_cast<size_t>(mid - 1)];
    out.signs[static_cast<size_t>(i - 1)] =
        h.signs[static_cast<size_t>(i - 1)] * g.signs[static_cast<size_t>(mid - 1)];
  }
  return out;
}

SignedPermutation inverse(const SignedPermutation& g) {
  const int n = g.size();
  SignedPermutation out;
  out.perm.resize(static_cast<size_t>(n));
  out.signs.resize(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int img = g.perm[static_cast<size_t>(i - 1)];
    out.perm[static_cast<size_t>(img - 1)] = i;
    out.signs[static_cast<size_t>(img - 1)] = g.signs[static_cast<size_t>(i - 1)];
  }
  return out;
}

std::vector<std::vector<Rational>> matrix_of(const SignedPermutation& g) {
  const int n = g.size();
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
  for (int i = 1; i <= n; ++i)
    m[static_cast<size_t>(g.perm[static_cast<size_t>(i - 1)] - 1)][static_cast<size_t>(i - 1)] =
        g.signs[static_cast<size_t>(i - 1)];
  return m;
}

std::vector<SignedPermutation> enumerate_hyperoctahedral(int N, const Budget& budget) {
  if (N < 1) throw std::invalid_argument("hyperoctahedral rank must be positive");
  long long order = 1;
  for (int i = 1; i <= N; ++i) order *= i;
  order <<= N;
  if (order > budget.max_group_order)
    throw ResourceError("hyperoctahedral group of order " + std::to_string(order) +
                        " exceeds the budget of " + std::to_string(budget.max_group_order));
  std::vector<int> base(static_cast<size_t>(N));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<size_t>(order));
  do {
    for (int mask = 0; mask < (1 << N); ++mask) {
      SignedPermutation g;
      g.perm = base;
      g.signs.resize(static_cast<size_t>(N));
      for (int i = 0; i < N; ++i) g.signs[static_cast<size_t>(i)] = (mask >> i) & 1 ? -1 : 1;
      out.push_back(std::move(g));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<int> action_segments(const SignedPermutation& g) {
  const int n = g.size();
  std::vector<int> image(static_cast<size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    const int target = g.perm[static_cast<size_t>(i - 1)];
    const bool flip = g.signs[static_cast<size_t>(i - 1)] < 0;
    image[static_cast<size_t>(i - 1)] = flip ? n + target - 1 : target - 1;
    image[static_cast<size_t>(n + i - 1)] = flip ? target - 1 : n + target - 1;
  }
  return image;
}

std::vector<int> action_cube(const SignedPermutation& g) {
  const int n = g.size();
  std::vector<int> image(static_cast<size_t>(1) << n);
  for (int v = 0; v < (1 << n); ++v) {
    int y = 0;
    for (int i = 1; i <= n; ++i) {
      int bit = (v >> (i - 1)) & 1;
      if (g.signs[static_cast<size_t>(i - 1)] < 0) bit ^= 1;
      y |= bit << (g.perm[static_cast<size_t>(i - 1)] - 1);
    }
    image[static_cast<size_t>(v)] = y;
  }
  return image;
}

std::vector<std::vector<Rational>> sudoku_matrix(const SignedPermutation& g) {
  const int n = g.size();
  const auto m = matrix_of(g);
  std::vector<std::vector<Rational>> v(static_cast<size_t>(2 * n),
                                       std::vector<Rational>(static_cast<size_t>(2 * n), Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& x = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
      Rational a = (x * x + x) / 2;
      Rational b = (x * x - x) / 2;
      v[static_cast<size_t>(i)][static_cast<size_t>(j)] = a;
      v[static_cast<size_t>(n + i)][static_cast<size_t>(n + j)] = a;
      v[static_cast<size_t>(i)][static_cast<size_t>(n + j)] = b;
      v[static_cast<size_t>(n + i)][static_cast<size_t>(j)] = b;
    }
  return v;
}

}  // namespace quizzy
