#include "quizzy/magic_character.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace quizzy {

namespace {

int parity_count(int x) { return x & 1; }

void check_symbolic_budget(int N, const Budget& budget) {
  if (N < 1) throw std::invalid_argument("symbolic constructions need N >= 1");
  if (N > budget.max_symbolic_N)
    throw ResourceError("symbolic budget exceeded: N=" + std::to_string(N) + " > " +
                        std::to_string(budget.max_symbolic_N));
}

// Positions x (1-based) with bit x-1 of mask set, ascending.
std::vector<int> mask_positions(std::uint32_t mask, int N) {
  std::vector<int> out;
  for (int x = 1; x <= N; ++x)
    if ((mask >> (x - 1)) & 1) out.push_back(x);
  return out;
}

template <typename Fn>
void for_each_function(int domain, long range, Fn&& fn) {
  std::vector<int> values(static_cast<size_t>(domain), 1);
  while (true) {
    fn(values);
    int i = 0;
    for (; i < domain; ++i) {
      if (values[static_cast<size_t>(i)] < range) {
        values[static_cast<size_t>(i)]++;
        break;
      }
      values[static_cast<size_t>(i)] = 1;
    }
    if (i == domain) break;
  }
}

}  // namespace

NCPolynomial magic_unitary_entry(int N, std::uint32_t i, std::uint32_t k) {
  if (N < 1 || N > 24) throw std::invalid_argument("magic unitary rank out of range");
  NCPolynomial w;
  const Rational scale = make_rational(1, 1L << N);
  for (std::uint32_t j = 0; j < (1u << N); ++j) {
    const std::vector<int> support = mask_positions(j, N);
    for_each_function(static_cast<int>(support.size()), N, [&](const std::vector<int>& b) {
      int exponent = 0;
      NCMonomial mono;
      for (size_t s = 0; s < support.size(); ++s) {
        const int x = support[s];
        const int bx = b[s];
        exponent += ((i >> (x - 1)) & 1) + ((k >> (bx - 1)) & 1);
        mono.factors.emplace_back(x, bx);
      }
      w.add_term(mono, parity_count(exponent) ? -scale : scale);
    });
  }
  return w;
}

std::vector<std::vector<NCPolynomial>> magic_unitary(int N, const Budget& budget) {
  check_symbolic_budget(N, budget);
  const std::uint32_t size = 1u << N;
  std::vector<std::vector<NCPolynomial>> w(size, std::vector<NCPolynomial>(size));
  for (std::uint32_t i = 0; i < size; ++i)
    for (std::uint32_t k = 0; k < size; ++k) w[i][k] = magic_unitary_entry(N, i, k);
  return w;
}

namespace {

// Raw form: chi = sum_j sum_b (1/N)^{#(0 in j)} [j_p = sum_{b_x=p} j_x mod 2
// for all p] u_{1 b_1}^{j_1} ... u_{N b_N}^{j_N}, with b over all of
// {1..N}^N.
NCPolynomial character_raw(int N) {
  NCPolynomial chi;
  for (std::uint32_t j = 0; j < (1u << N); ++j) {
    const int zeros = N - std::popcount(j);
    const Rational weight = make_rational(1, int_pow(Int(N), static_cast<unsigned long>(zeros)));
    for_each_function(N, N, [&](const std::vector<int>& b) {
      for (int p = 1; p <= N; ++p) {
        int fiber = 0;
        for (int x = 1; x <= N; ++x)
          if (b[static_cast<size_t>(x - 1)] == p) fiber += (j >> (x - 1)) & 1;
        if ((fiber & 1) != static_cast<int>((j >> (p - 1)) & 1)) return;
      }
      NCMonomial mono;
      for (int x = 1; x <= N; ++x)
        if ((j >> (x - 1)) & 1) mono.factors.emplace_back(x, b[static_cast<size_t>(x - 1)]);
      chi.add_term(mono, weight);
    });
  }
  return chi;
}

// Grouped form: chi_r = (1/N^{N-r}) sum_{|A|=r} sum_{b<A} prod_{a in A}
// u_{a b_a}, where b < A means |b^-1(p) n A| = chi_A(p) mod 2 for all p.
NCPolynomial character_grouped(int N) {
  NCPolynomial chi;
  for (std::uint32_t a_mask = 0; a_mask < (1u << N); ++a_mask) {
    const std::vector<int> a_set = mask_positions(a_mask, N);
    const int r = static_cast<int>(a_set.size());
    const Rational weight = make_rational(1, int_pow(Int(N), static_cast<unsigned long>(N - r)));
    for_each_function(N, N, [&](const std::vector<int>& b) {
      for (int p = 1; p <= N; ++p) {
        int fiber_in_a = 0;
        for (int a : a_set)
          if (b[static_cast<size_t>(a - 1)] == p) ++fiber_in_a;
        const int want = ((a_mask >> (p - 1)) & 1) ? 1 : 0;
        if ((fiber_in_a & 1) != want) return;
      }
      NCMonomial mono;
      for (int a : a_set) mono.factors.emplace_back(a, b[static_cast<size_t>(a - 1)]);
      chi.add_term(mono, weight);
    });
  }
  return chi;
}

template <typename Fn>
void for_each_permutation_of(const std::vector<int>& set, Fn&& fn) {
  std::vector<int> image = set;
  std::sort(image.begin(), image.end());
  do {
    fn(image);
  } while (std::next_permutation(image.begin(), image.end()));
}

int sign_of_images(const std::vector<int>& image) {
  int sign = 1;
  for (size_t i = 0; i < image.size(); ++i)
    for (size_t j = i + 1; j < image.size(); ++j)
      if (image[i] > image[j]) sign = -sign;
  return sign;
}

NCPolynomial character_part_final(int N, int r, bool signed_terms) {
  NCPolynomial chi;
  std::vector<int> a_set;
  std::vector<char> chosen(static_cast<size_t>(N) + 1, 0);
  std::function<void(int)> choose = [&](int next) {
    if (static_cast<int>(a_set.size()) == r) {
      // sigma in S_N^A, described by the images of the (sorted) block A.
      for_each_permutation_of(a_set, [&](const std::vector<int>& image) {
        NCMonomial mono;
        for (size_t idx = 0; idx < a_set.size(); ++idx)
          mono.factors.emplace_back(a_set[idx], image[idx]);
        chi.add_term(mono, signed_terms ? Rational(sign_of_images(image)) : Rational(1));
      });
      return;
    }
    for (int a = next; a <= N; ++a) {
      a_set.push_back(a);
      choose(a + 1);
      a_set.pop_back();
    }
  };
  choose(1);
  return chi;
}

}  // namespace

NCPolynomial magic_character(int N, CharacterForm form, const Budget& budget) {
  check_symbolic_budget(N, budget);
  switch (form) {
    case CharacterForm::Raw:
      return character_raw(N);
    case CharacterForm::Grouped:
      return character_grouped(N);
    case CharacterForm::Final: {
      NCPolynomial chi;
      for (int r = 0; r <= N; ++r) chi += character_part_final(N, r, false);
      return chi;
    }
  }
  throw std::logic_error("unknown character form");
}

std::vector<NCPolynomial> magic_character_parts(int N, const Budget& budget) {
  check_symbolic_budget(N, budget);
  std::vector<NCPolynomial> parts;
  for (int r = 0; r <= N; ++r) parts.push_back(character_part_final(N, r, false));
  return parts;
}

NCPolynomial antisym_character(int N, int r, const Budget& budget) {
  check_symbolic_budget(N, budget);
  if (r < 0 || r > N) throw std::invalid_argument("antisymmetric rank out of {0..N}");
  return character_part_final(N, r, true);
}

}  // namespace quizzy
