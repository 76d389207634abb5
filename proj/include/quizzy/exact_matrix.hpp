#pragma once

#include <vector>

#include "quizzy/rational.hpp"

namespace quizzy {

// Dense matrix of exact rationals. All the Gram and Weingarten matrices in
// play are a few hundred rows at most, so dense storage is fine.
class ExactMatrix {
 public:
  ExactMatrix(int rows, int cols);
  static ExactMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c)];
  }

  bool operator==(const ExactMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

Rational determinant(const ExactMatrix& a);

// Exact inverse by Gauss-Jordan elimination; verifies A*A^-1 == I before
// returning. Throws MatrixSingularError on singular input.
ExactMatrix invert(const ExactMatrix& a);

// Rank by plain rational elimination; used as an independent oracle against
// the sparse fraction-free path.
int dense_rank(ExactMatrix a);

}  // namespace quizzy
