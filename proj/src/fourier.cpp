#include "quizzy/fourier.hpp"

#include <bit>
#include <stdexcept>

namespace quizzy {

void GroupAlgElement::add(std::uint32_t exps, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

GroupAlgElement multiply(const GroupAlgElement& a, const GroupAlgElement& b) {
  if (a.N != b.N) throw std::invalid_argument("group algebra elements of different rank");
  GroupAlgElement out;
  out.N = a.N;
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) out.add(ea ^ eb, ca * cb);
  return out;
}

namespace {
int parity(std::uint32_t x) { return std::popcount(x) & 1; }
}  // namespace

GroupAlgElement fourier_alpha(std::uint32_t point, int N) {
  if (N < 1 || N > 24) throw std::invalid_argument("fourier_alpha rank out of range");
  GroupAlgElement out;
  out.N = N;
  const Rational scale = make_rational(1, 1L << N);
  for (std::uint32_t j = 0; j < (1u << N); ++j)
    out.add(j, parity(point & j) ? -scale : scale);
  return out;
}

std::vector<Rational> fourier_beta(std::uint32_t exponents, int N) {
  if (N < 1 || N > 24) throw std::invalid_argument("fourier_beta rank out of range");
  std::vector<Rational> out(static_cast<size_t>(1) << N);
  for (std::uint32_t j = 0; j < (1u << N); ++j)
    out[j] = parity(exponents & j) ? -1 : 1;
  return out;
}

}  // namespace quizzy
