#pragma once

#include "quizzy/categories.hpp"
#include "quizzy/rational.hpp"
#include "quizzy/set_partition.hpp"

namespace quizzy {

// Moebius function of the given partition lattice under the coarser_leq order:
//   mu(sigma,pi) = 1                          if sigma == pi
//                = -sum_{sigma<=tau<pi} mu(sigma,tau)   if sigma < pi
//                = 0                          if not sigma <= pi
// The sum runs over lattice members only. Memoized behind a lock; safe to
// call from several workers.
Int mobius(const SetPartition& sigma, const SetPartition& pi, CategoryId lattice);

}  // namespace quizzy
