#include "doctest.h"

#include <random>

#include "quizzy/categories.hpp"
#include "quizzy/elimination.hpp"
#include "quizzy/errors.hpp"
#include "quizzy/exact_matrix.hpp"
#include "quizzy/gram.hpp"
#include "quizzy/intertwiner.hpp"

using namespace quizzy;

namespace {

SparseTensorVector unit_vector(long N, int legs, std::uint64_t code) {
  SparseTensorVector v;
  v.N = N;
  v.legs = legs;
  v.add(code, 1);
  return v;
}

std::vector<SparseTensorVector> xi_family(CategoryId cat, int m, long N) {
  std::vector<SparseTensorVector> fam;
  for (const SetPartition& pi : enumerate_category(cat, m)) fam.push_back(xi_vector(pi, N));
  return fam;
}

ExactMatrix random_matrix(int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-9, 9);
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(make_rational(6, 4) == make_rational(3, 2));
  CHECK(make_rational(-6, -4) == make_rational(3, 2));
  CHECK(make_rational(2, -4).get_den() == 2);
  CHECK(to_string(make_rational(1, 60)) == "1/60");
  CHECK(to_string(make_rational(49)) == "49");
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(to_integer(make_rational(1, 2)), std::invalid_argument);
}

TEST_CASE("index encoding is little-endian in the legs") {
  CHECK(encode_index({1, 1, 1}, 3) == 0);
  CHECK(encode_index({2, 1, 1}, 3) == 1);
  CHECK(encode_index({1, 2, 1}, 3) == 3);
  CHECK(decode_index(encode_index({3, 1, 2}, 3), 3, 3) == std::vector<int>{3, 1, 2});
}

TEST_CASE("rank basics") {
  SparseTensorVector sum = unit_vector(4, 1, 0);
  add_scaled(sum, Rational(1), unit_vector(4, 1, 1));
  CHECK(rank({unit_vector(4, 1, 0), unit_vector(4, 1, 1), sum}) == 2);
  CHECK(rank({}) == 0);
  // Fixed space of the free permutation category at k=3: dimensions 1,2,5.
  CHECK(rank(xi_family(CategoryId::NC, 3, 4)) == 5);
  CHECK(rank(xi_family(CategoryId::NC, 2, 4)) == 2);
  CHECK(rank(xi_family(CategoryId::NC, 1, 4)) == 1);
}

TEST_CASE("nullspace basis") {
  const auto relations = nullspace_basis({unit_vector(2, 1, 0), unit_vector(2, 1, 0)});
  REQUIRE(relations.size() == 1);
  CHECK(relations[0] == std::vector<Rational>{1, -1});
  CHECK(nullspace_basis({unit_vector(2, 1, 0), unit_vector(2, 1, 1)}).empty());

  // 15 partition vectors of P(4) live in a 16-dimensional space at N=2; the
  // rank there is the 4-orbital count of the two-point symmetric group,
  // (2^4 + 0^4)/2 = 8 by Burnside.
  const auto family = xi_family(CategoryId::P, 4, 2);
  REQUIRE(family.size() == 15);
  const int r = rank(family);
  CHECK(r == 8);
  const auto rels = nullspace_basis(family);
  CHECK(rels.size() == family.size() - static_cast<size_t>(r));
  for (const auto& rel : rels) {
    SparseTensorVector combo;
    combo.N = 2;
    combo.legs = 4;
    for (size_t i = 0; i < family.size(); ++i) add_scaled(combo, rel[i], family[i]);
    CHECK(combo.entries.empty());
  }
}

TEST_CASE("span intersection") {
  const auto fam = xi_family(CategoryId::P2, 4, 3);
  CHECK(span_intersection_dim(fam, fam) == rank(fam));
  CHECK(span_intersection_dim({unit_vector(3, 1, 0)}, {unit_vector(3, 1, 2)}) == 0);

  // The twisted pairing span meets the noncrossing-even span exactly in the
  // noncrossing pairing span.
  std::vector<SparseTensorVector> twisted;
  for (const SetPartition& pi : enumerate_category(CategoryId::P2, 4))
    twisted.push_back(xi_twisted(pi, 5));
  const auto plain = xi_family(CategoryId::NCeven, 4, 5);
  const int dim = span_intersection_dim(twisted, plain);
  CHECK(dim == 2);
  CHECK(dim == rank(xi_family(CategoryId::NC2, 4, 5)));
}

TEST_CASE("gram matrix") {
  const ExactMatrix g = gram_matrix(CategoryId::P2, 2, 3);
  CHECK(g.rows() == 1);
  CHECK(g.at(0, 0) == 3);

  // Diagonal entries are N^(block count).
  for (CategoryId cat : {CategoryId::P, CategoryId::Peven}) {
    const auto members = enumerate_category(cat, 4);
    const ExactMatrix gm = gram_matrix(cat, 4, 3);
    for (size_t i = 0; i < members.size(); ++i)
      CHECK(gm.at(static_cast<int>(i), static_cast<int>(i)) ==
            Rational(int_pow(Int(3), static_cast<unsigned long>(members[i].block_count()))));
  }

  // At N=2 the three pairings of 4 points stay independent: Gram rank =
  // family rank = 3 through both routes.
  ExactMatrix g2 = gram_matrix(CategoryId::P2, 4, 2);
  CHECK(dense_rank(g2) == 3);
  CHECK(rank(xi_family(CategoryId::P2, 4, 2)) == 3);

  // Formula path vs dot-product path, exhaustively.
  for (CategoryId cat : {CategoryId::P, CategoryId::NC, CategoryId::P2, CategoryId::NC2,
                         CategoryId::Peven, CategoryId::NCeven, CategoryId::P12, CategoryId::NC12,
                         CategoryId::P2star, CategoryId::Pevenstar})
    for (int m = 0; m <= 6; ++m) {
      const auto members = enumerate_category(cat, m);
      if (members.empty()) continue;
      for (long N = 1; N <= 4; ++N) {
        std::vector<SparseTensorVector> fam;
        for (const auto& pi : members) fam.push_back(xi_vector(pi, N));
        const ExactMatrix gm = gram_matrix(cat, m, N);
        for (size_t i = 0; i < members.size(); ++i)
          for (size_t j = i; j < members.size(); ++j)
            CHECK(gm.at(static_cast<int>(i), static_cast<int>(j)) == dot(fam[i], fam[j]));
      }
    }
}

TEST_CASE("matrix inverse") {
  CHECK(invert(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
  ExactMatrix two(1, 1);
  two.at(0, 0) = 2;
  CHECK(invert(two).at(0, 0) == make_rational(1, 2));

  // Gram of the full partition category on 2 points collapses at N=1.
  CHECK_THROWS_AS(invert(gram_matrix(CategoryId::P, 2, 1)), MatrixSingularError);

  std::mt19937 rng(20240811);
  int tested = 0;
  while (tested < 100) {
    const int n = 1 + static_cast<int>(rng() % 6);
    ExactMatrix m = random_matrix(n, rng);
    if (determinant(m) == 0) continue;
    ++tested;
    CHECK(invert(invert(m)) == m);
  }
}

TEST_CASE("rank agrees with the dense oracle and is invariant under scaling") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    std::vector<SparseTensorVector> fam;
    ExactMatrix dense(rows, cols);
    for (int i = 0; i < rows; ++i) {
      SparseTensorVector v;
      v.N = cols;
      v.legs = 1;
      for (int j = 0; j < cols; ++j) {
        const int x = dist(rng);
        if (x != 0) v.add(static_cast<std::uint64_t>(j), x);
        dense.at(i, j) = x;
      }
      fam.push_back(v);
    }
    const int r = rank(fam);
    CHECK(r == dense_rank(dense));

    // Scale rows and shuffle the family: rank is unchanged.
    std::vector<SparseTensorVector> scaled = fam;
    for (auto& v : scaled) {
      Rational c = make_rational(1 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 7));
      SparseTensorVector w;
      w.N = v.N;
      w.legs = v.legs;
      add_scaled(w, c, v);
      v = w;
    }
    std::shuffle(scaled.begin(), scaled.end(), rng);
    CHECK(rank(scaled) == r);
  }
}
