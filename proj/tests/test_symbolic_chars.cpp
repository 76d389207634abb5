#include "doctest.h"

#include <random>

#include "quizzy/errors.hpp"
#include "quizzy/exact_matrix.hpp"
#include "quizzy/fourier.hpp"
#include "quizzy/magic_character.hpp"
#include "quizzy/nc_polynomial.hpp"
#include "quizzy/signed_permutation.hpp"

using namespace quizzy;

namespace {

// The literal double-sum form of the magic unitary entry, with b over all of
// {1..N}^N and the (1/N)^{#(0 in j)} factors kept; oracle for the
// restricted-b implementation.
NCPolynomial magic_entry_reference(int N, std::uint32_t i, std::uint32_t k) {
  NCPolynomial w;
  const Rational half_pow = make_rational(1, 1L << N);
  std::vector<int> b(static_cast<size_t>(N), 1);
  while (true) {
    for (std::uint32_t j = 0; j < (1u << N); ++j) {
      int zeros = 0;
      int exponent = 0;
      NCMonomial mono;
      for (int x = 1; x <= N; ++x) {
        const int jx = (j >> (x - 1)) & 1;
        const int bx = b[static_cast<size_t>(x - 1)];
        if (jx == 0) {
          ++zeros;
          continue;
        }
        exponent += ((i >> (x - 1)) & 1) + ((k >> (bx - 1)) & 1);
        mono.factors.emplace_back(x, bx);
      }
      Rational coeff = half_pow / int_pow(Int(N), static_cast<unsigned long>(zeros));
      w.add_term(mono, exponent % 2 ? -coeff : coeff);
    }
    int x = 0;
    for (; x < N; ++x) {
      if (b[static_cast<size_t>(x)] < N) {
        b[static_cast<size_t>(x)]++;
        break;
      }
      b[static_cast<size_t>(x)] = 1;
    }
    if (x == N) break;
  }
  return w;
}

std::vector<std::vector<Rational>> random_integer_matrix(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  std::vector<std::vector<Rational>> g(static_cast<size_t>(n),
                                       std::vector<Rational>(static_cast<size_t>(n)));
  for (auto& row : g)
    for (auto& x : row) x = dist(rng);
  return g;
}

Rational principal_minor_sum(const std::vector<std::vector<Rational>>& g, int r) {
  const int n = static_cast<int>(g.size());
  Rational total = 0;
  std::vector<int> subset;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(subset.size()) == r) {
      if (r == 0) {
        total += 1;
        return;
      }
      ExactMatrix sub(r, r);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          sub.at(a, b) = g[static_cast<size_t>(subset[static_cast<size_t>(a)])]
                          [static_cast<size_t>(subset[static_cast<size_t>(b)])];
      total += determinant(sub);
      return;
    }
    for (int v = next; v < n; ++v) {
      subset.push_back(v);
      rec(v + 1);
      subset.pop_back();
    }
  };
  rec(0);
  return total;
}

// Elementary symmetric functions of the eigenvalues from the power sums
// tr(g^i), via Newton's identities; an independent route to the exterior
// power traces.
std::vector<Rational> newton_elementary(const std::vector<std::vector<Rational>>& g) {
  const int n = static_cast<int>(g.size());
  ExactMatrix m(n, n), power(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = g[static_cast<size_t>(i)][static_cast<size_t>(j)];
      power.at(i, j) = m.at(i, j);
    }
  std::vector<Rational> p(static_cast<size_t>(n) + 1, Rational(0));
  for (int i = 1; i <= n; ++i) {
    if (i > 1) power = multiply(power, m);
    for (int d = 0; d < n; ++d) p[static_cast<size_t>(i)] += power.at(d, d);
  }
  std::vector<Rational> e(static_cast<size_t>(n) + 1, Rational(0));
  e[0] = 1;
  for (int r = 1; r <= n; ++r) {
    Rational acc = 0;
    for (int i = 1; i <= r; ++i)
      acc += (i % 2 ? 1 : -1) * e[static_cast<size_t>(r - i)] * p[static_cast<size_t>(i)];
    e[static_cast<size_t>(r)] = acc / r;
  }
  return e;
}

}  // namespace

TEST_CASE("fourier transform examples") {
  const GroupAlgElement a0 = fourier_alpha(0, 1);
  CHECK(a0.terms.at(0) == make_rational(1, 2));
  CHECK(a0.terms.at(1) == make_rational(1, 2));
  const GroupAlgElement a1 = fourier_alpha(1, 1);
  CHECK(a1.terms.at(0) == make_rational(1, 2));
  CHECK(a1.terms.at(1) == make_rational(-1, 2));

  CHECK(fourier_beta(1, 1) == std::vector<Rational>{1, -1});
  CHECK(fourier_beta(0, 1) == std::vector<Rational>{1, 1});

  const GroupAlgElement a00 = fourier_alpha(0, 2);
  for (std::uint32_t e = 0; e < 4; ++e) CHECK(a00.terms.at(e) == make_rational(1, 4));
}

TEST_CASE("fourier transforms invert each other") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint32_t size = 1u << n;
    for (std::uint32_t p = 0; p < size; ++p) {
      std::vector<Rational> recovered(size, Rational(0));
      for (const auto& [exps, coeff] : fourier_alpha(p, n).terms) {
        const auto beta = fourier_beta(exps, n);
        for (std::uint32_t q = 0; q < size; ++q) recovered[q] += coeff * beta[q];
      }
      for (std::uint32_t q = 0; q < size; ++q) CHECK(recovered[q] == (q == p ? 1 : 0));
    }
  }
}

TEST_CASE("group algebra multiplies by adding exponents mod 2") {
  GroupAlgElement x;
  x.N = 2;
  x.add(0b01, 1);
  GroupAlgElement y;
  y.N = 2;
  y.add(0b11, make_rational(1, 2));
  const GroupAlgElement xy = multiply(x, y);
  CHECK(xy.terms.size() == 1);
  CHECK(xy.terms.at(0b10) == make_rational(1, 2));
}

TEST_CASE("magic unitary at N=1") {
  // [[ (1+u)/2, (1-u)/2 ], [ (1-u)/2, (1+u)/2 ]]
  const NCPolynomial plus =
      (NCPolynomial::unit() + NCPolynomial::generator(1, 1)) * make_rational(1, 2);
  const NCPolynomial minus =
      (NCPolynomial::unit() - NCPolynomial::generator(1, 1)) * make_rational(1, 2);
  CHECK(magic_unitary_entry(1, 0, 0) == plus);
  CHECK(magic_unitary_entry(1, 0, 1) == minus);
  CHECK(magic_unitary_entry(1, 1, 0) == minus);
  CHECK(magic_unitary_entry(1, 1, 1) == plus);
}

TEST_CASE("restricted b-sum equals the literal double sum") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint32_t i = 0; i < (1u << n); ++i)
      for (std::uint32_t k = 0; k < (1u << n); ++k)
        CHECK(magic_unitary_entry(n, i, k) == magic_entry_reference(n, i, k));
}

TEST_CASE("magic unitary sums") {
  for (int n = 1; n <= 3; ++n) {
    const auto w = magic_unitary(n);
    const std::uint32_t size = 1u << n;

    // Column sums are the unit already as formal polynomials.
    for (std::uint32_t k = 0; k < size; ++k) {
      NCPolynomial col;
      for (std::uint32_t i = 0; i < size; ++i) col += w[i][k];
      CHECK(col == NCPolynomial::unit());
    }

    // Row sums are the unit plus the row-orthogonality defects
    // sum_p u_{xp} u_{yp}; formal equality here, and the defects vanish at
    // every classical point, giving row sums 1 after evaluation.
    for (std::uint32_t i = 0; i < size; ++i) {
      NCPolynomial row;
      for (std::uint32_t k = 0; k < size; ++k) row += w[i][k];
      NCPolynomial expected = NCPolynomial::unit();
      for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) {
          NCPolynomial defect;
          for (int p = 1; p <= n; ++p)
            defect += NCPolynomial::generator(x, p) * NCPolynomial::generator(y, p);
          const int sign = (((i >> (x - 1)) & 1) + ((i >> (y - 1)) & 1)) % 2 ? -1 : 1;
          expected += defect * Rational(sign);
        }
      CHECK(row == expected);
    }

    for (const SignedPermutation& g : enumerate_hyperoctahedral(n)) {
      const auto gm = matrix_of(g);
      for (std::uint32_t i = 0; i < size; ++i) {
        Rational row = 0, col = 0;
        for (std::uint32_t k = 0; k < size; ++k) {
          row += evaluate(w[i][k], gm);
          col += evaluate(w[k][i], gm);
        }
        CHECK(row == 1);
        CHECK(col == 1);
      }
    }
  }
}

TEST_CASE("magic unitary at the identity point is the identity permutation") {
  for (int n = 1; n <= 3; ++n) {
    const auto w = magic_unitary(n);
    const auto gm = matrix_of(SignedPermutation::identity(n));
    const std::uint32_t size = 1u << n;
    for (std::uint32_t i = 0; i < size; ++i)
      for (std::uint32_t k = 0; k < size; ++k)
        CHECK(evaluate(w[i][k], gm) == (i == k ? 1 : 0));
  }
}

TEST_CASE("character chain") {
  for (int n = 1; n <= 4; ++n) {
    const NCPolynomial raw = magic_character(n, CharacterForm::Raw);
    const NCPolynomial grouped = magic_character(n, CharacterForm::Grouped);
    const NCPolynomial final_form = magic_character(n, CharacterForm::Final);
    CHECK(raw == grouped);
    CHECK(grouped == final_form);
  }
  // chi = sum_i w_{ii} as formal polynomials.
  for (int n = 1; n <= 3; ++n) {
    NCPolynomial trace;
    for (std::uint32_t i = 0; i < (1u << n); ++i) trace += magic_unitary_entry(n, i, i);
    CHECK(trace == magic_character(n, CharacterForm::Raw));
  }
  CHECK_THROWS_AS(magic_character(6, CharacterForm::Final), ResourceError);
}

TEST_CASE("character pieces") {
  for (int n = 2; n <= 4; ++n) {
    const auto parts = magic_character_parts(n);
    CHECK(parts[0] == NCPolynomial::unit());
    NCPolynomial diag;
    for (int a = 1; a <= n; ++a) diag += NCPolynomial::generator(a, a);
    CHECK(parts[1] == diag);
  }
  // chi_2 at N=3: sum over a<c of u_aa u_cc + u_ac u_ca.
  NCPolynomial chi2;
  for (int a = 1; a <= 3; ++a)
    for (int c = a + 1; c <= 3; ++c) {
      chi2 += NCPolynomial::generator(a, a) * NCPolynomial::generator(c, c);
      chi2 += NCPolynomial::generator(a, c) * NCPolynomial::generator(c, a);
    }
  CHECK(magic_character_parts(3)[2] == chi2);

  // N=2 character, all five terms.
  NCPolynomial expected = NCPolynomial::unit();
  expected += NCPolynomial::generator(1, 1);
  expected += NCPolynomial::generator(2, 2);
  expected += NCPolynomial::generator(1, 1) * NCPolynomial::generator(2, 2);
  expected += NCPolynomial::generator(1, 2) * NCPolynomial::generator(2, 1);
  CHECK(magic_character(2, CharacterForm::Final) == expected);
}

TEST_CASE("antisymmetric characters") {
  CHECK(antisym_character(3, 0) == NCPolynomial::unit());
  NCPolynomial diag;
  for (int a = 1; a <= 3; ++a) diag += NCPolynomial::generator(a, a);
  CHECK(antisym_character(3, 1) == diag);

  // Sign stripping recovers the magic character pieces termwise.
  for (int n = 1; n <= 4; ++n) {
    const auto parts = magic_character_parts(n);
    for (int r = 0; r <= n; ++r) {
      NCPolynomial stripped;
      const NCPolynomial antisym = antisym_character(n, r);
      for (const auto& [mono, coeff] : antisym.terms()) {
        CHECK((coeff == 1 || coeff == -1));
        stripped.add_term(mono, 1);
      }
      CHECK(stripped == parts[static_cast<size_t>(r)]);
    }
  }
}

TEST_CASE("antisymmetric character evaluations against two oracles") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);  // up to 5
    const auto g = random_integer_matrix(n, rng);
    const auto newton = newton_elementary(g);
    Rational total = 0;
    for (int r = 0; r <= n; ++r) {
      const Rational value = evaluate(antisym_character(n, r), g);
      CHECK(value == principal_minor_sum(g, r));
      CHECK(value == newton[static_cast<size_t>(r)]);
      total += value;
    }
    // sum_r trace(Lambda^r g) = det(I + g)
    ExactMatrix shifted(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        shifted.at(i, j) = g[static_cast<size_t>(i)][static_cast<size_t>(j)] + (i == j ? 1 : 0);
    CHECK(total == determinant(shifted));
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate(NCPolynomial::unit(), {{Rational(7)}}) == 1);
  const std::vector<std::vector<Rational>> id2{{1, 0}, {0, 1}};
  CHECK(evaluate(magic_character(2, CharacterForm::Final), id2) == 4);
  // A coordinate sign flip fixes none of the four square vertices; the
  // diagonal reflection fixes two. Both match the magic unitary trace.
  const std::vector<std::vector<Rational>> flip{{1, 0}, {0, -1}};
  CHECK(evaluate(magic_character(2, CharacterForm::Final), flip) == 0);
  const std::vector<std::vector<Rational>> swap{{0, 1}, {1, 0}};
  CHECK(evaluate(magic_character(2, CharacterForm::Final), swap) == 2);
  Rational trace_flip = 0, trace_swap = 0;
  for (std::uint32_t i = 0; i < 4; ++i) {
    trace_flip += evaluate(magic_unitary_entry(2, i, i), flip);
    trace_swap += evaluate(magic_unitary_entry(2, i, i), swap);
  }
  CHECK(trace_flip == 0);
  CHECK(trace_swap == 2);
}
