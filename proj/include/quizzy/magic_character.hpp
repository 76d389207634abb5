#pragma once

#include <cstdint>
#include <vector>

#include "quizzy/errors.hpp"
#include "quizzy/nc_polynomial.hpp"

namespace quizzy {

// Entry w_{i,k} of the 2^N x 2^N magic unitary of the twisted-orthogonal
// action on the hypercube, as a formal polynomial in the u_{ab}:
//
//   w_{i,k} = (1/2^N) sum_j sum_b (-1)^<i + k_b, j> (1/N)^{#(0 in j)}
//             u_{1 b_1}^{j_1} ... u_{N b_N}^{j_N}
//
// with binary j, k_b = (k_{b_1},...,k_{b_N}), and u^0 = unit. The b-sum is
// restricted to the support of j: a position x with j_x = 0 contributes no
// u-factor and no sign, so its b_x ranges freely over N values, and that
// free sum cancels the (1/N) factor exactly. i and k are bitmasks.
NCPolynomial magic_unitary_entry(int N, std::uint32_t i, std::uint32_t k);

// Full 2^N x 2^N matrix, row-major over the bitmask order.
std::vector<std::vector<NCPolynomial>> magic_unitary(int N, const Budget& budget = {});

enum class CharacterForm {
  Raw,      // binary-index double sum with Kronecker conditions
  Grouped,  // subset-indexed sum over functions b with even fibers
  Final     // subset-indexed sum over permutations fixing the complement
};

// The character of the magic representation, built three ways; all three are
// equal as formal polynomials, and equal to the trace sum_i w_{i,i}.
NCPolynomial magic_character(int N, CharacterForm form, const Budget& budget = {});

// The graded pieces chi_r, r = 0..N, of the final form:
//   chi_r = sum_{|A|=r} sum_{sigma in S_N^A} prod_{a in A} u_{a sigma(a)}
// (ordered product, S_N^A = permutations fixing A^c pointwise).
std::vector<NCPolynomial> magic_character_parts(int N, const Budget& budget = {});

// Character of the r-th antisymmetric representation of the orthogonal group:
// the same sum with the permutation sign attached. Deleting the signs yields
// chi_r termwise.
NCPolynomial antisym_character(int N, int r, const Budget& budget = {});

}  // namespace quizzy
