#include "quizzy/nc_polynomial.hpp"

#include <stdexcept>

namespace quizzy {

NCPolynomial NCPolynomial::unit() {
  NCPolynomial p;
  p.add_term(NCMonomial{}, 1);
  return p;
}

NCPolynomial NCPolynomial::generator(int row, int col) {
  NCPolynomial p;
  p.add_term(NCMonomial{{{row, col}}}, 1);
  return p;
}

void NCPolynomial::add_term(const NCMonomial& mono, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational NCPolynomial::coefficient(const NCMonomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
  NCPolynomial out = *this;
  out += o;
  return out;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const {
  NCPolynomial out = *this;
  out -= o;
  return out;
}

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
  NCPolynomial out;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      NCMonomial m = ma;
      m.factors.insert(m.factors.end(), mb.factors.begin(), mb.factors.end());
      out.add_term(m, ca * cb);
    }
  return out;
}

NCPolynomial NCPolynomial::operator*(const Rational& scalar) const {
  NCPolynomial out;
  for (const auto& [m, c] : terms_) out.add_term(m, c * scalar);
  return out;
}

std::string NCPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    for (const auto& [r, col] : m.factors)
      s += " u[" + std::to_string(r) + "," + std::to_string(col) + "]";
  }
  return s;
}

Rational evaluate(const NCPolynomial& poly, const std::vector<std::vector<Rational>>& g) {
  const size_t n = g.size();
  Rational total = 0;
  for (const auto& [m, c] : poly.terms()) {
    Rational prod = c;
    for (const auto& [row, col] : m.factors) {
      if (row < 1 || static_cast<size_t>(row) > n || col < 1 || static_cast<size_t>(col) > n)
        throw std::invalid_argument("generator index outside the evaluation matrix");
      prod *= g[static_cast<size_t>(row - 1)][static_cast<size_t>(col - 1)];
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

}  // namespace quizzy
