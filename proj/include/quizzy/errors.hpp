#pragma once

#include <stdexcept>
#include <string>

namespace quizzy {

// A computation would exceed a configured budget (index space, group order,
// symbolic size). Never downgraded to an approximation.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct MatrixSingularError : std::runtime_error {
  explicit MatrixSingularError(const std::string& what) : std::runtime_error(what) {}
};

// Gram matrix singular at the requested dimension; carries the smallest N
// at which the same Gram matrix becomes invertible.
struct SingularGramError : MatrixSingularError {
  SingularGramError(const std::string& what, long minimal_valid_N_)
      : MatrixSingularError(what), minimal_valid_N(minimal_valid_N_) {}
  long minimal_valid_N;
};

struct CacheError : std::runtime_error {
  explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

// Resource limits for the heavy operations. Exceeding a budget throws
// ResourceError; there is no silent fallback.
struct Budget {
  long long max_index_space = 100000000;  // entries of {1..N}^m
  long long max_group_order = 100000;     // enumerated classical groups
  int max_symbolic_N = 5;                 // symbolic character constructions
};

}  // namespace quizzy
