#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "quizzy/rational.hpp"

namespace quizzy {

// Ordered word in the abstract generators u_{row,col}; the empty word is the
// unit. Equality is order-preserving: no commutation is ever applied.
struct NCMonomial {
  std::vector<std::pair<int, int>> factors;  // (row, col), 1-based

  auto operator<=>(const NCMonomial&) const = default;
};

// Formal rational linear combination of ordered generator words. The algebra
// relations of the quantum groups are never applied; every identity checked
// against these polynomials is an identity of formal sums or of classical
// evaluations.
class NCPolynomial {
 public:
  NCPolynomial() = default;
  static NCPolynomial unit();
  static NCPolynomial generator(int row, int col);

  void add_term(const NCMonomial& mono, const Rational& coeff);
  const std::map<NCMonomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const NCMonomial& mono) const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial operator+(const NCPolynomial& o) const;
  NCPolynomial operator-(const NCPolynomial& o) const;
  NCPolynomial operator*(const NCPolynomial& o) const;  // concatenates words
  NCPolynomial operator*(const Rational& scalar) const;

  bool operator==(const NCPolynomial& o) const = default;

  std::string str() const;

 private:
  std::map<NCMonomial, Rational> terms_;
};

// Substitutes g for the generators and multiplies commutatively, exactly.
Rational evaluate(const NCPolynomial& poly, const std::vector<std::vector<Rational>>& g);

}  // namespace quizzy
