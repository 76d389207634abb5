#include "quizzy/elimination.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace quizzy {

namespace {

// One working row: integer entries (fraction-free), plus the rational
// coefficients expressing it in terms of the original family.
struct Row {
  std::map<std::uint64_t, Int> entries;
  std::vector<Rational> coeffs;
};

void normalize_by_gcd(Row& row) {
  Int g = 0;
  for (const auto& [col, v] : row.entries) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g <= 1) return;
  for (auto& [col, v] : row.entries) v /= g;
  for (auto& c : row.coeffs) c /= g;
}

// row := pivot_value * row - row_value * pivot_row, exact and integer-only;
// gcd normalization keeps entry growth tame.
void eliminate_column(Row& row, const Row& pivot_row, std::uint64_t col) {
  const Int p = pivot_row.entries.at(col);
  const Int a = row.entries.at(col);
  for (auto& [c, v] : row.entries) v *= p;
  for (auto& c : row.coeffs) c *= p;
  for (const auto& [c, v] : pivot_row.entries) {
    auto [it, inserted] = row.entries.emplace(c, 0);
    it->second -= a * v;
    if (it->second == 0) row.entries.erase(it);
  }
  Rational ar(a);
  for (size_t i = 0; i < row.coeffs.size(); ++i) row.coeffs[i] -= ar * pivot_row.coeffs[i];
  normalize_by_gcd(row);
}

struct EliminationResult {
  int rank = 0;
  std::vector<std::vector<Rational>> relations;
};

EliminationResult eliminate(const std::vector<SparseTensorVector>& family, bool want_nullspace) {
  EliminationResult result;
  if (family.empty()) return result;
  for (const auto& v : family)
    if (v.N != family[0].N || v.legs != family[0].legs)
      throw std::invalid_argument("rank/nullspace on a family of mixed shapes");

  // Column occupancy over the support union drives pivot choice: the sparsest
  // available column first.
  std::unordered_map<std::uint64_t, int> occupancy;
  for (const auto& v : family)
    for (const auto& [code, coeff] : v.entries) occupancy[code]++;

  std::vector<Row> echelon;                        // pivot rows
  std::vector<std::uint64_t> pivot_cols;           // pivot column per echelon row
  const size_t n = family.size();
  for (size_t i = 0; i < n; ++i) {
    Row row;
    // Scale to integer entries once up front.
    Int lcm = 1;
    for (const auto& [code, coeff] : family[i].entries)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), coeff.get_den().get_mpz_t());
    for (const auto& [code, coeff] : family[i].entries) {
      Rational scaled = coeff * Rational(lcm);
      row.entries[code] = scaled.get_num();
    }
    if (want_nullspace) {
      row.coeffs.assign(n, Rational(0));
      row.coeffs[i] = Rational(lcm);
    }
    for (size_t e = 0; e < echelon.size(); ++e)
      if (row.entries.count(pivot_cols[e])) eliminate_column(row, echelon[e], pivot_cols[e]);
    if (row.entries.empty()) {
      if (want_nullspace && !row.coeffs.empty()) {
        // Normalize the relation: first nonzero coefficient becomes 1.
        for (const auto& c : row.coeffs)
          if (c != 0) {
            Rational lead = c;
            for (auto& x : row.coeffs) x /= lead;
            break;
          }
        result.relations.push_back(std::move(row.coeffs));
      }
      continue;
    }
    std::uint64_t best = row.entries.begin()->first;
    int best_occ = occupancy[best];
    for (const auto& [code, v] : row.entries)
      if (occupancy[code] < best_occ) {
        best = code;
        best_occ = occupancy[code];
      }
    pivot_cols.push_back(best);
    echelon.push_back(std::move(row));
    result.rank++;
  }
  return result;
}

}  // namespace

int rank(const std::vector<SparseTensorVector>& family) {
  return eliminate(family, false).rank;
}

std::vector<std::vector<Rational>> nullspace_basis(const std::vector<SparseTensorVector>& family) {
  return eliminate(family, true).relations;
}

int span_intersection_dim(const std::vector<SparseTensorVector>& fam_a,
                          const std::vector<SparseTensorVector>& fam_b) {
  std::vector<SparseTensorVector> both = fam_a;
  both.insert(both.end(), fam_b.begin(), fam_b.end());
  return rank(fam_a) + rank(fam_b) - rank(both);
}

}  // namespace quizzy
