#pragma once

#include "quizzy/categories.hpp"
#include "quizzy/exact_matrix.hpp"

namespace quizzy {

// Gram matrix of the partition vectors of a category on m points: entry
// (pi, sigma) = N^|pi v sigma|, rows/columns in enumerate_category order.
// Equals the matrix of exact dot products <xi_pi, xi_sigma>; twisting leaves
// it unchanged since the entry signs square away.
ExactMatrix gram_matrix(CategoryId cat, int m, long N);

}  // namespace quizzy
