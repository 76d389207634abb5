#include "doctest.h"

#include "quizzy/elimination.hpp"
#include "quizzy/errors.hpp"
#include "quizzy/finite_action.hpp"
#include "quizzy/signed_permutation.hpp"
#include "quizzy/intertwiner.hpp"

using namespace quizzy;

namespace {

std::vector<SparseTensorVector> xi_family(CategoryId cat, int m, long N) {
  std::vector<SparseTensorVector> fam;
  for (const SetPartition& pi : enumerate_category(cat, m)) fam.push_back(xi_vector(pi, N));
  return fam;
}

// Constant-pattern vector: entry 1 at every tuple matching the pattern,
// where equal pattern letters force equal values.
SparseTensorVector pattern_vector(const std::string& pattern, long N) {
  SparseTensorVector v;
  v.N = N;
  v.legs = static_cast<int>(pattern.size());
  std::vector<char> letters;
  for (char c : pattern)
    if (std::find(letters.begin(), letters.end(), c) == letters.end()) letters.push_back(c);
  std::vector<int> values(letters.size(), 1);
  while (true) {
    std::vector<int> tuple;
    for (char c : pattern)
      tuple.push_back(values[static_cast<size_t>(
          std::find(letters.begin(), letters.end(), c) - letters.begin())]);
    v.add(encode_index(tuple, N), 1);
    size_t i = 0;
    for (; i < values.size(); ++i) {
      if (values[i] < N) {
        values[i]++;
        break;
      }
      values[i] = 1;
    }
    if (i == values.size()) break;
  }
  return v;
}

bool in_span(const std::vector<SparseTensorVector>& family, const SparseTensorVector& v) {
  std::vector<SparseTensorVector> extended = family;
  extended.push_back(v);
  return rank(extended) == rank(family);
}

}  // namespace

TEST_CASE("xi_vector") {
  const SparseTensorVector v = xi_vector(SetPartition(2, {{1, 2}}), 2);
  CHECK(v.entries.size() == 2);
  CHECK(v.entries.count(encode_index({1, 1}, 2)) == 1);
  CHECK(v.entries.count(encode_index({2, 2}, 2)) == 1);
  CHECK(xi_vector(SetPartition::one_block(4), 3).entries.size() == 3);

  // Dot products realize the join formula on all of P(4).
  for (const SetPartition& pi : enumerate_category(CategoryId::P, 4))
    for (const SetPartition& sigma : enumerate_category(CategoryId::P, 4))
      CHECK(dot(xi_vector(pi, 3), xi_vector(sigma, 3)) ==
            Rational(int_pow(Int(3), static_cast<unsigned long>(
                                         join_coarsen(pi, sigma).block_count()))));
}

TEST_CASE("xi_twisted") {
  CHECK(xi_twisted(SetPartition(2, {{1, 2}}), 3) == xi_vector(SetPartition(2, {{1, 2}}), 3));
  CHECK_THROWS_AS(xi_twisted(SetPartition(3, {{1, 2}, {3}}), 2), std::invalid_argument);

  // Noncrossing even partitions twist trivially.
  for (int m = 2; m <= 6; m += 2)
    for (const SetPartition& pi : enumerate_category(CategoryId::NCeven, m))
      for (long N = 1; N <= 3; ++N) CHECK(xi_twisted(pi, N) == xi_vector(pi, N));

  // The crossing pairing: sign -1 on (i,j,i,j) with i != j, +1 on the
  // diagonal.
  const SetPartition crossing(4, {{1, 3}, {2, 4}});
  const SparseTensorVector tw = xi_twisted(crossing, 2);
  CHECK(tw.entries.at(encode_index({1, 2, 1, 2}, 2)) == -1);
  CHECK(tw.entries.at(encode_index({2, 1, 2, 1}, 2)) == -1);
  CHECK(tw.entries.at(encode_index({1, 1, 1, 1}, 2)) == 1);
  CHECK(tw.entries.at(encode_index({2, 2, 2, 2}, 2)) == 1);
  CHECK(tw.entries.size() == 4);
}

TEST_CASE("twist_via_mobius") {
  const SetPartition crossing(4, {{1, 3}, {2, 4}});
  for (long N = 2; N <= 4; ++N) {
    SparseTensorVector expected;
    expected.N = N;
    expected.legs = 4;
    add_scaled(expected, Rational(-1), xi_vector(crossing, N));
    add_scaled(expected, Rational(2), xi_vector(SetPartition::one_block(4), N));
    CHECK(twist_via_mobius(crossing, N) == expected);
  }
  for (const SetPartition& pi : enumerate_category(CategoryId::NCeven, 4))
    for (long N = 1; N <= 4; ++N) CHECK(twist_via_mobius(pi, N) == xi_vector(pi, N));
  // The central self-test: the Moebius route equals the direct signed
  // entries on every even partition.
  for (int m = 2; m <= 6; m += 2)
    for (const SetPartition& pi : enumerate_category(CategoryId::Peven, m))
      for (long N = 1; N <= 3; ++N) CHECK(twist_via_mobius(pi, N) == xi_twisted(pi, N));
}

TEST_CASE("fix_dim") {
  CHECK(fix_dim({CategoryId::NC, false, 5}, 3) == 5);
  CHECK(fix_dim({CategoryId::P2, true, 5}, 4) == 3);
  for (CategoryId cat : {CategoryId::P, CategoryId::NC2, CategoryId::Peven})
    CHECK(fix_dim({cat, false, 3}, 0) == 1);

  // Twisting never changes the dimensions.
  for (CategoryId cat : {CategoryId::P2, CategoryId::Peven})
    for (long N = 1; N <= 4; ++N)
      for (int k = 0; k <= 5; ++k)
        CHECK(fix_dim({cat, true, N}, k) == fix_dim({cat, false, N}, k));

  // Stable regime: the vectors are independent once N >= k, and dimensions
  // never grow as N shrinks.
  for (CategoryId cat : {CategoryId::P, CategoryId::NC, CategoryId::Peven, CategoryId::P2}) {
    for (int k = 0; k <= 4; ++k) {
      const auto count = enumerate_category(cat, k).size();
      CHECK(fix_dim({cat, false, std::max<long>(1, k)}, k) == static_cast<int>(count));
      CHECK(fix_dim({cat, false, k + 1}, k) == static_cast<int>(count));
      int prev = fix_dim({cat, false, 5}, k);
      for (long N = 4; N >= 1; --N) {
        const int cur = fix_dim({cat, false, N}, k);
        CHECK(cur <= prev);
        prev = cur;
      }
    }
  }

  CHECK_THROWS_AS(validate_spec({CategoryId::P, true, 3}), std::invalid_argument);
  Budget tiny;
  tiny.max_index_space = 10;
  CHECK_THROWS_AS(fix_dim({CategoryId::P, false, 10}, 4, tiny), ResourceError);
}

TEST_CASE("constrained_fix_dim") {
  // Three diagonal pairs on six legs: the cube of the magic piece.
  CHECK(constrained_fix_dim({CategoryId::NCeven, false, 5}, 6,
                            {LegConstraint::diagonal(1, 2), LegConstraint::diagonal(3, 4),
                             LegConstraint::diagonal(5, 6)}) == 5);
  // One diagonal pair on four legs: the nested pairing's off-diagonal part
  // forces its coefficient away, leaving dimension 2.
  CHECK(constrained_fix_dim({CategoryId::NCeven, false, 5}, 4,
                            {LegConstraint::diagonal(1, 2)}) == 2);
  // The single pairing vector is symmetric, so the antisymmetrizer kills it.
  CHECK(constrained_fix_dim({CategoryId::P2, false, 4}, 2,
                            {LegConstraint::antisymmetric({1, 2})}) == 0);

  CHECK_THROWS_AS(constrained_fix_dim({CategoryId::NCeven, false, 3}, 4,
                                      {LegConstraint::diagonal(1, 2), LegConstraint::diagonal(2, 3)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(constrained_fix_dim({CategoryId::NC2, false, 3}, 4,
                                      {LegConstraint::diagonal(1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(constrained_fix_dim({CategoryId::NCeven, false, 3}, 4,
                                      {LegConstraint::antisymmetric({1, 2})}),
                  std::invalid_argument);
}

TEST_CASE("words with an odd number of u factors vanish over the even categories") {
  for (CategoryId cat : {CategoryId::Peven, CategoryId::NCeven})
    for (const char* word : {"u", "uuu", "pu", "up", "puuu", "ppu"})
      CHECK(word_moment(word, {cat, false, 4}) == 0);
}

TEST_CASE("word moments at small length") {
  const QuizzySpec liberated{CategoryId::NCeven, false, 5};
  CHECK(word_moment("u", liberated) == 0);
  CHECK(word_moment("p", liberated) == 1);
  CHECK(word_moment("pp", liberated) == 2);
  CHECK(word_moment("ppp", liberated) == 5);
  CHECK(word_moment("puu", liberated) == 2);
  CHECK(word_moment("upu", liberated) == 2);
  CHECK(word_moment("uup", liberated) == 2);
  CHECK(word_moment("uu", liberated) == 1);
  CHECK(word_moment("up", liberated) == 0);
}

TEST_CASE("length-four word moments, constructive bounds") {
  const QuizzySpec liberated{CategoryId::NCeven, false, 5};

  // ppuu: five independent fixed vectors of the constrained space exist
  // (patterns over slots after merging the diagonal pairs), and the
  // projected family realizes exactly that rank.
  CHECK(word_moment("ppuu", liberated) == 5);
  CHECK(word_moment("uupp", liberated) == 5);
  CHECK(word_moment("puup", liberated) == 5);
  CHECK(word_moment("uppu", liberated) == 5);

  // upup: the noncrossing even partitions {1234}{56}, {1456}{23},
  // {14}{23}{56} and {123456} all lie in the constrained subspace
  // (legs 2=3 and 5=6), are pairwise independent, and every other member
  // projects onto their span. The value is therefore 4, not the published 2;
  // the reconciliation report carries this through two methods.
  const SparseTensorVector v1 = pattern_vector("aaaabb", 5);  // {1,2,3,4}{5,6}
  const SparseTensorVector v3 = pattern_vector("abbaaa", 5);  // {1,4,5,6}{2,3}
  const SparseTensorVector v5 = pattern_vector("abbacc", 5);  // {1,4}{2,3}{5,6}
  const SparseTensorVector w0 = pattern_vector("aaaaaa", 5);  // one block
  const auto family = xi_family(CategoryId::NCeven, 6, 5);
  for (const SparseTensorVector* v : {&v1, &v3, &v5, &w0}) {
    CHECK(in_span(family, *v));  // fixed vectors of the sixth tensor power
    for (const auto& [code, coeff] : v->entries) {
      const auto tuple = decode_index(code, 5, 6);
      CHECK(tuple[1] == tuple[2]);  // inside the constrained subspace
      CHECK(tuple[4] == tuple[5]);
    }
  }
  CHECK(rank({v1, v3, v5, w0}) == 4);
  CHECK(word_moment("upup", liberated) == 4);
  CHECK(word_moment("pupu", liberated) == 4);

  CHECK(word_moment("pppp", liberated) == 14);
  CHECK(word_moment("uuuu", liberated) == 3);
  for (const char* odd : {"puuu", "upuu", "uupu", "uuup", "pppu", "ppup", "pupp", "uppp"})
    CHECK(word_moment(odd, liberated) == 0);
}

TEST_CASE("word moments agree with the Weingarten route") {
  for (long N = 4; N <= 6; ++N) {
    const QuizzySpec spec{CategoryId::NCeven, false, N};
    for (const char* word : {"p", "pp", "uu", "puu", "ppuu", "upup", "pupu", "uuuu", "pppp"})
      CHECK(word_moment_weingarten(word, spec) ==
            Rational(static_cast<long>(word_moment(word, spec))));
  }
  // Classical side as well, where the Gram matrices stay invertible.
  const QuizzySpec classical{CategoryId::Peven, false, 6};
  for (const char* word : {"pp", "uu", "puu", "ppuu", "upup"})
    CHECK(word_moment_weingarten(word, classical) ==
          Rational(static_cast<long>(word_moment(word, classical))));
}

TEST_CASE("classical word moments match direct group averaging") {
  // Over the classical group the word integral is a plain average of the
  // two class functions: chi_u(g) is the signed trace, chi_p(g) the number
  // of fixed segments. This pins the projection method on the same word
  // shapes used in the liberated reconciliation.
  for (int n = 4; n <= 5; ++n) {
    const auto group = enumerate_hyperoctahedral(n);
    const QuizzySpec spec{CategoryId::Peven, false, n};
    for (const char* word : {"uu", "pp", "puu", "ppuu", "upup", "pupu", "uuuu", "pppp"}) {
      Rational total = 0;
      for (const auto& g : group) {
        Rational chi_u = 0, chi_p = 0;
        for (int i = 1; i <= n; ++i)
          if (g.perm[static_cast<size_t>(i - 1)] == i) {
            chi_u += g.signs[static_cast<size_t>(i - 1)];
            chi_p += 1;
          }
        Rational prod = 1;
        for (const char* c = word; *c; ++c) prod *= (*c == 'u' ? chi_u : chi_p);
        total += prod;
      }
      total /= static_cast<long>(group.size());
      CHECK(total == Rational(static_cast<long>(word_moment(word, spec))));
    }
    // The classical alternating word sits at 5, against 4 on the liberated
    // side.
    CHECK(word_moment("upup", spec) == 5);
  }
}

TEST_CASE("sudoku moments") {
  CHECK(sudoku_moment(1, 5, true) == 1);
  CHECK(sudoku_moment(2, 5, true) == 3);
  CHECK(sudoku_moment(3, 5, true) == 11);
  // Classical path against the Burnside oracle: two fully independent
  // routes to 1, 3, 11, 49.
  for (int n = 4; n <= 5; ++n) {
    const FiniteAction segments = hyperoctahedral_on_segments(n);
    for (int k = 1; k <= 4; ++k)
      CHECK(Int(static_cast<long>(sudoku_moment(k, n, false))) ==
            burnside_orbital_count(segments, k));
  }
}

TEST_CASE("exterior word moments") {
  CHECK(exterior_word_moment({0, 0}, 3) == 1);
  CHECK(exterior_word_moment({1, 1}, 3) == 1);
  long long total = 0;
  for (int r = 0; r <= 3; ++r)
    for (int s = 0; s <= 3; ++s) total += exterior_word_moment({r, s}, 3);
  CHECK(total == 4);  // N+1 at N=3
  CHECK(hypercube_orbital_count(2, 3) == 4);

  // Anchors from the representation theory of the orthogonal group at N=3:
  // the exterior square is the standard representation twisted by the
  // determinant, so each multiplicity below is forced.
  CHECK(exterior_word_moment({1, 1, 2}, 3) == 1);  // L2 inside u (x) u
  CHECK(exterior_word_moment({2, 2, 2}, 3) == 1);  // det inside u^(x)3
  CHECK(exterior_word_moment({3, 3}, 3) == 1);     // det (x) det
  CHECK(exterior_word_moment({2, 3}, 3) == 0);     // Hom(det, L2)
  CHECK(exterior_word_moment({1, 2, 3}, 3) == 1);  // det inside u (x) L2
  CHECK(exterior_word_moment({1, 1, 1}, 3) == 0);  // odd leg count

  Budget tiny;
  tiny.max_index_space = 8;
  CHECK_THROWS_AS(exterior_word_moment({2, 2}, 3, tiny), ResourceError);
}

TEST_CASE("weingarten integration") {
  const QuizzySpec symmetric{CategoryId::P, false, 5};
  CHECK(weingarten_integrate(symmetric, {{1, 1}, {2, 2}, {3, 3}}) == make_rational(1, 60));
  CHECK(weingarten_integrate(symmetric, {{1, 2}, {2, 3}, {3, 1}}) == make_rational(1, 60));
  CHECK(weingarten_integrate({CategoryId::P, false, 4}, {{1, 1}}) == make_rational(1, 4));
  // Kernel mismatch integrates to zero.
  CHECK(weingarten_integrate(symmetric, {{1, 1}, {1, 2}, {2, 3}}) == 0);
  CHECK(weingarten_integrate(symmetric, {{1, 1}, {2, 2}, {1, 3}}) == 0);

  try {
    weingarten_integrate({CategoryId::P, false, 1}, {{1, 1}, {1, 1}});
    FAIL("expected a singular Gram matrix");
  } catch (const SingularGramError& e) {
    CHECK(e.minimal_valid_N == 2);
  }

  // Summing the diagonal integrals reproduces the fixed-point dimension,
  // on the twisted side as well.
  for (const QuizzySpec& spec : {QuizzySpec{CategoryId::P, false, 4},
                                 QuizzySpec{CategoryId::P2, false, 4},
                                 QuizzySpec{CategoryId::Peven, false, 4},
                                 QuizzySpec{CategoryId::NC, false, 4},
                                 QuizzySpec{CategoryId::P2, true, 4},
                                 QuizzySpec{CategoryId::Peven, true, 4}}) {
    for (int k = 1; k <= (spec.twisted ? 4 : 3); ++k) {
      const long N = spec.N;
      Rational total = 0;
      std::vector<int> idx(static_cast<size_t>(k), 1);
      while (true) {
        std::vector<std::pair<int, int>> pairs;
        for (int v : idx) pairs.emplace_back(v, v);
        total += weingarten_integrate(spec, pairs);
        int i = 0;
        for (; i < k; ++i) {
          if (idx[static_cast<size_t>(i)] < N) {
            idx[static_cast<size_t>(i)]++;
            break;
          }
          idx[static_cast<size_t>(i)] = 1;
        }
        if (i == k) break;
      }
      CHECK(total == Rational(fix_dim(spec, k)));
    }
  }
}

TEST_CASE("liberation levels") {
  const long N = 5;
  const LiberationResult hn_hnplus =
      liberation_level({CategoryId::Peven, false, N}, {CategoryId::NCeven, false, N});
  REQUIRE(hn_hnplus.level.has_value());
  CHECK(*hn_hnplus.level == 4);
  CHECK(hn_hnplus.inner_dims == std::vector<int>{0, 1, 0, 4});
  CHECK(hn_hnplus.outer_dims == std::vector<int>{0, 1, 0, 3});

  const LiberationResult hn_obar =
      liberation_level({CategoryId::Peven, false, N}, {CategoryId::P2, true, N});
  REQUIRE(hn_obar.level.has_value());
  CHECK(*hn_obar.level == 4);
  CHECK(hn_obar.outer_dims == std::vector<int>{0, 1, 0, 3});

  const LiberationResult on_onplus =
      liberation_level({CategoryId::P2, false, N}, {CategoryId::NC2, false, N});
  REQUIRE(on_onplus.level.has_value());
  CHECK(*on_onplus.level == 4);
  CHECK(on_onplus.inner_dims == std::vector<int>{0, 1, 0, 3});
  CHECK(on_onplus.outer_dims == std::vector<int>{0, 1, 0, 2});

  CHECK_THROWS_AS(
      liberation_level({CategoryId::NC2, false, N}, {CategoryId::P2, false, N}),
      std::invalid_argument);
}
