#pragma once

#include <gmpxx.h>

#include <string>

namespace quizzy {

// Exact arithmetic everywhere: Int is an arbitrary-precision integer,
// Rational a reduced fraction with positive denominator (GMP invariants).
// No floating point appears anywhere in the library.
using Int = mpz_class;
using Rational = mpq_class;

// Canonical (reduced, positive-denominator) rational. mpq_class arithmetic
// preserves canonical form; only direct num/den construction needs this.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den = 1);

bool is_integral(const Rational& q);

// Exact conversion; throws std::invalid_argument for non-integers.
Int to_integer(const Rational& q);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

Int int_pow(const Int& base, unsigned long e);

}  // namespace quizzy
