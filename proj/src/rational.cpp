#include "quizzy/rational.hpp"

#include <stdexcept>

namespace quizzy {

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  return make_rational(Int(num), Int(den));
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

Int to_integer(const Rational& q) {
  if (!is_integral(q)) throw std::invalid_argument("rational is not an integer: " + to_string(q));
  return q.get_num();
}

std::string to_string(const Rational& q) {
  if (is_integral(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Int& n) { return n.get_str(); }

Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace quizzy
