#pragma once

#include <vector>

#include "quizzy/sparse_vector.hpp"

namespace quizzy {

// Exact rank over the rationals of a family of sparse vectors sharing N and
// leg count. Fraction-free elimination on integer-scaled rows, restricted to
// the union of the supports.
int rank(const std::vector<SparseTensorVector>& family);

// Exact basis of the relation space {c : sum_i c_i v_i = 0}; each relation is
// a coefficient vector over the input family. Size is |family| - rank.
std::vector<std::vector<Rational>> nullspace_basis(const std::vector<SparseTensorVector>& family);

// dim(span A  intersect  span B) = rank(A) + rank(B) - rank(A u B).
int span_intersection_dim(const std::vector<SparseTensorVector>& fam_a,
                          const std::vector<SparseTensorVector>& fam_b);

}  // namespace quizzy
