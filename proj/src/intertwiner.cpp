#include "quizzy/intertwiner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "quizzy/elimination.hpp"
#include "quizzy/gram.hpp"
#include "quizzy/mobius.hpp"

namespace quizzy {

namespace {

bool category_in_peven(CategoryId cat) {
  switch (cat) {
    case CategoryId::P2:
    case CategoryId::NC2:
    case CategoryId::Peven:
    case CategoryId::NCeven:
    case CategoryId::P2star:
    case CategoryId::Pevenstar:
      return true;
    default:
      return false;
  }
}

void check_index_space(long N, int legs, const Budget& budget) {
  long long space = 1;
  for (int i = 0; i < legs; ++i) {
    if (N > 1 && space > budget.max_index_space / N)
      throw ResourceError("index space " + std::to_string(N) + "^" + std::to_string(legs) +
                          " exceeds the budget of " + std::to_string(budget.max_index_space));
    space *= N;
  }
  if (space > budget.max_index_space)
    throw ResourceError("index space " + std::to_string(N) + "^" + std::to_string(legs) +
                        " exceeds the budget of " + std::to_string(budget.max_index_space));
}

// Iterates over all assignments of values {1..N} to the blocks of pi and
// hands the corresponding index tuple to fn.
template <typename Fn>
void for_each_supported_tuple(const SetPartition& pi, long N, Fn&& fn) {
  const int b = pi.block_count();
  const int m = pi.points();
  std::vector<int> assign(static_cast<size_t>(b), 1);
  std::vector<int> tuple(static_cast<size_t>(m), 1);
  while (true) {
    for (int p = 1; p <= m; ++p)
      tuple[static_cast<size_t>(p - 1)] = assign[static_cast<size_t>(pi.block_of(p))];
    fn(tuple);
    int i = 0;
    for (; i < b; ++i) {
      if (assign[static_cast<size_t>(i)] < N) {
        assign[static_cast<size_t>(i)]++;
        break;
      }
      assign[static_cast<size_t>(i)] = 1;
    }
    if (i == b) break;
  }
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  const size_t n = perm.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

void validate_constraints(int m, const std::vector<LegConstraint>& constraints) {
  std::set<int> used;
  for (const auto& c : constraints) {
    if (c.kind == LegConstraint::Kind::DiagonalPair && c.legs.size() != 2)
      throw std::invalid_argument("diagonal constraint needs exactly two legs");
    if (c.legs.empty()) throw std::invalid_argument("constraint with no legs");
    if (c.kind == LegConstraint::Kind::AntisymmetricBlock) {
      std::vector<int> sorted = c.legs;
      std::sort(sorted.begin(), sorted.end());
      for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] != sorted[i - 1] + 1)
          throw std::invalid_argument("antisymmetric block must cover consecutive legs");
    }
    for (int leg : c.legs) {
      if (leg < 1 || leg > m) throw std::invalid_argument("constraint leg out of range");
      if (!used.insert(leg).second) throw std::invalid_argument("overlapping constraints");
    }
  }
}

SparseTensorVector project(const SparseTensorVector& v,
                           const std::vector<LegConstraint>& constraints) {
  SparseTensorVector out;
  out.N = v.N;
  out.legs = v.legs;
  for (const auto& [code, coeff] : v.entries) {
    std::vector<int> tuple = decode_index(code, v.N, v.legs);
    bool keep = true;
    for (const auto& c : constraints) {
      if (c.kind != LegConstraint::Kind::DiagonalPair) continue;
      if (tuple[static_cast<size_t>(c.legs[0] - 1)] != tuple[static_cast<size_t>(c.legs[1] - 1)]) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    // Expand the antisymmetrizers: (1/r!) sum_sigma sgn(sigma) sigma.tuple
    // per block, applied independently.
    std::vector<std::pair<std::vector<int>, Rational>> terms{{tuple, coeff}};
    for (const auto& c : constraints) {
      if (c.kind != LegConstraint::Kind::AntisymmetricBlock) continue;
      const size_t r = c.legs.size();
      Rational factorial = 1;
      for (size_t i = 2; i <= r; ++i) factorial *= static_cast<long>(i);
      std::vector<int> perm(r);
      for (size_t i = 0; i < r; ++i) perm[i] = static_cast<int>(i);
      std::vector<std::pair<std::vector<int>, Rational>> next;
      do {
        const int sign = permutation_sign(perm);
        for (const auto& [t, co] : terms) {
          std::vector<int> nt = t;
          for (size_t i = 0; i < r; ++i)
            nt[static_cast<size_t>(c.legs[i] - 1)] =
                t[static_cast<size_t>(c.legs[static_cast<size_t>(perm[i])] - 1)];
          next.emplace_back(std::move(nt), co * sign / factorial);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      terms = std::move(next);
    }
    for (const auto& [t, co] : terms) out.add(encode_index(t, v.N), co);
  }
  return out;
}

std::vector<SparseTensorVector> category_vectors(const QuizzySpec& spec, int m,
                                                 const Budget& budget) {
  validate_spec(spec);
  check_index_space(spec.N, m, budget);
  std::vector<SparseTensorVector> out;
  for (const SetPartition& pi : enumerate_category(spec.category, m))
    out.push_back(spec.twisted ? xi_twisted(pi, spec.N) : xi_vector(pi, spec.N));
  return out;
}

// Legs and leg->slot map of a {p,u} word; each p occupies two adjacent legs,
// inserted in word order left to right.
struct WordLayout {
  int legs = 0;
  std::vector<int> slot_of_leg;               // 0-based word position per leg
  std::vector<LegConstraint> constraints;     // one diagonal pair per p
};

WordLayout layout_word(const std::string& word) {
  if (word.empty()) throw std::invalid_argument("empty character word");
  WordLayout layout;
  for (size_t pos = 0; pos < word.size(); ++pos) {
    switch (word[pos]) {
      case 'u':
        layout.legs++;
        layout.slot_of_leg.push_back(static_cast<int>(pos));
        break;
      case 'p':
        layout.constraints.push_back(LegConstraint::diagonal(layout.legs + 1, layout.legs + 2));
        layout.legs += 2;
        layout.slot_of_leg.push_back(static_cast<int>(pos));
        layout.slot_of_leg.push_back(static_cast<int>(pos));
        break;
      default:
        throw std::invalid_argument("character word may only contain 'p' and 'u'");
    }
  }
  return layout;
}

void require_h_type(const QuizzySpec& spec) {
  if (spec.category != CategoryId::Peven && spec.category != CategoryId::NCeven)
    throw std::invalid_argument("character words are defined for the hyperoctahedral categories");
  if (spec.twisted)
    throw std::invalid_argument("character words are computed on the untwisted side");
}

// Number of blocks of the partition induced on word slots when the legs are
// grouped by rho and every leg carries its slot's index value.
int induced_slot_block_count(const SetPartition& rho, const std::vector<int>& slot_of_leg,
                             int slot_count) {
  std::vector<int> parent(static_cast<size_t>(slot_count));
  for (int i = 0; i < slot_count; ++i) parent[static_cast<size_t>(i)] = i;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  for (const auto& block : rho.blocks()) {
    const int s0 = slot_of_leg[static_cast<size_t>(block[0] - 1)];
    for (int leg : block) {
      int a = find(s0), b = find(slot_of_leg[static_cast<size_t>(leg - 1)]);
      if (a != b) parent[static_cast<size_t>(a)] = b;
    }
  }
  int roots = 0;
  for (int i = 0; i < slot_count; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

ExactMatrix weingarten_matrix(CategoryId cat, int m, long N) {
  try {
    return invert(gram_matrix(cat, m, N));
  } catch (const MatrixSingularError&) {
    long valid = N + 1;
    // N >= m always gives linearly independent partition vectors, so the
    // search terminates.
    while (valid < m && determinant(gram_matrix(cat, m, valid)) == 0) ++valid;
    throw SingularGramError("Gram matrix of " + category_name(cat) + "(" + std::to_string(m) +
                                ") is singular at N=" + std::to_string(N) +
                                "; smallest valid N is " + std::to_string(valid),
                            valid);
  }
}

}  // namespace

void validate_spec(const QuizzySpec& spec) {
  if (spec.N < 1) throw std::invalid_argument("quantum group dimension must be at least 1");
  if (spec.twisted && !category_in_peven(spec.category))
    throw std::invalid_argument("twisting is defined only inside the even categories");
}

SparseTensorVector xi_vector(const SetPartition& pi, long N) {
  SparseTensorVector v;
  v.N = N;
  v.legs = pi.points();
  for_each_supported_tuple(pi, N,
                           [&](const std::vector<int>& tuple) { v.add(encode_index(tuple, N), 1); });
  return v;
}

SparseTensorVector xi_twisted(const SetPartition& pi, long N) {
  if (!all_blocks_even(pi))
    throw std::invalid_argument("xi_twisted requires a partition with even blocks");
  SparseTensorVector v;
  v.N = N;
  v.legs = pi.points();
  for_each_supported_tuple(pi, N, [&](const std::vector<int>& tuple) {
    v.add(encode_index(tuple, N), signature(kernel(tuple)));
  });
  return v;
}

SparseTensorVector twist_via_mobius(const SetPartition& pi, long N) {
  if (!all_blocks_even(pi))
    throw std::invalid_argument("twist_via_mobius requires a partition with even blocks");
  SparseTensorVector total;
  total.N = N;
  total.legs = pi.points();
  for (const SetPartition& tau : coarsenings(pi)) {
    const Rational eps(signature(tau));
    for (const SetPartition& sigma : coarsenings(tau)) {
      Rational weight = eps * Rational(mobius(sigma, tau, CategoryId::Peven));
      if (weight != 0) add_scaled(total, weight, xi_vector(sigma, N));
    }
  }
  return total;
}

int fix_dim(const QuizzySpec& spec, int k, const Budget& budget) {
  if (k < 0) throw std::invalid_argument("negative tensor power");
  return rank(category_vectors(spec, k, budget));
}

int constrained_fix_dim(const QuizzySpec& spec, int m,
                        const std::vector<LegConstraint>& constraints, const Budget& budget) {
  validate_constraints(m, constraints);
  // The projection P_V commutes with u^(x)m, so P_V(Fix) = Fix intersect V:
  //  - a diagonal pair projects onto span{e_i (x) e_i}, which is invariant
  //    because the coordinates satisfy u_ki u_li = 0 for k != l (magic or
  //    cubic relations; automatic in the classical categories), and the
  //    orthocomplement of an invariant subspace of a unitary representation
  //    is invariant, making the orthogonal projection an intertwiner;
  //  - an antisymmetrizer is an alternating sum of leg permutations, which
  //    are themselves partition maps of the category whenever the category
  //    contains the basic crossing, i.e. in the classical cases.
  for (const auto& c : constraints) {
    if (c.kind == LegConstraint::Kind::DiagonalPair) {
      if (!is_classical_category(spec.category) && spec.category != CategoryId::NC &&
          spec.category != CategoryId::NCeven)
        throw std::invalid_argument("diagonal constraints need magic or cubic coordinates");
    } else if (!is_classical_category(spec.category)) {
      throw std::invalid_argument("antisymmetric constraints need a classical category");
    }
  }
  std::vector<SparseTensorVector> projected;
  for (SparseTensorVector& v : category_vectors(spec, m, budget))
    projected.push_back(project(v, constraints));
  return rank(projected);
}

long long word_moment(const std::string& word, const QuizzySpec& spec, const Budget& budget) {
  require_h_type(spec);
  const WordLayout layout = layout_word(word);
  return constrained_fix_dim(spec, layout.legs, layout.constraints, budget);
}

Rational word_moment_weingarten(const std::string& word, const QuizzySpec& spec) {
  require_h_type(spec);
  const WordLayout layout = layout_word(word);
  const std::vector<SetPartition> members = enumerate_category(spec.category, layout.legs);
  if (members.empty()) return Rational(0);
  const ExactMatrix w = weingarten_matrix(spec.category, layout.legs, spec.N);
  const int slots = static_cast<int>(word.size());
  Rational total = 0;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      const Rational& wij = w.at(static_cast<int>(i), static_cast<int>(j));
      if (wij == 0) continue;
      const SetPartition join = join_coarsen(members[i], members[j]);
      const int free_slots = induced_slot_block_count(join, layout.slot_of_leg, slots);
      total += wij * Rational(int_pow(Int(spec.N), static_cast<unsigned long>(free_slots)));
    }
  return total;
}

long long sudoku_moment(int k, long N, bool liberated, const Budget& budget) {
  if (k < 1) throw std::invalid_argument("sudoku_moment requires k >= 1");
  const QuizzySpec spec{liberated ? CategoryId::NCeven : CategoryId::Peven, false, N};
  long long total = 0;
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::string word;
    for (int pos = 0; pos < k; ++pos) word += (mask >> pos) & 1 ? 'p' : 'u';
    total += word_moment(word, spec, budget);
  }
  return total;
}

long long exterior_word_moment(const std::vector<int>& ranks, long N, const Budget& budget) {
  int m = 0;
  for (int r : ranks) {
    if (r < 0 || r > N) throw std::invalid_argument("exterior rank out of {0..N}");
    m += r;
  }
  check_index_space(N, m, budget);
  std::vector<LegConstraint> constraints;
  int leg = 1;
  for (int r : ranks) {
    if (r >= 2) {
      std::vector<int> legs;
      for (int i = 0; i < r; ++i) legs.push_back(leg + i);
      constraints.push_back(LegConstraint::antisymmetric(std::move(legs)));
    }
    leg += r;
  }
  const QuizzySpec spec{CategoryId::P2, false, N};
  return constrained_fix_dim(spec, m, constraints, budget);
}

long long hypercube_orbital_count(int k, long N, const Budget& budget) {
  if (k < 1) throw std::invalid_argument("orbital count requires k >= 1");
  std::vector<int> ranks(static_cast<size_t>(k), 0);
  long long total = 0;
  while (true) {
    total += exterior_word_moment(ranks, N, budget);
    int i = 0;
    for (; i < k; ++i) {
      if (ranks[static_cast<size_t>(i)] < N) {
        ranks[static_cast<size_t>(i)]++;
        break;
      }
      ranks[static_cast<size_t>(i)] = 0;
    }
    if (i == k) break;
  }
  return total;
}

Rational weingarten_integrate(const QuizzySpec& spec,
                              const std::vector<std::pair<int, int>>& index_pairs) {
  validate_spec(spec);
  if (index_pairs.empty()) throw std::invalid_argument("weingarten_integrate needs index pairs");
  const int m = static_cast<int>(index_pairs.size());
  std::vector<int> rows, cols;
  for (const auto& [a, b] : index_pairs) {
    if (a < 1 || a > spec.N || b < 1 || b > spec.N)
      throw std::invalid_argument("index out of range in weingarten_integrate");
    rows.push_back(a);
    cols.push_back(b);
  }
  const std::vector<SetPartition> members = enumerate_category(spec.category, m);
  if (members.empty()) return Rational(0);
  const ExactMatrix w = weingarten_matrix(spec.category, m, spec.N);
  const SetPartition ker_rows = kernel(rows);
  const SetPartition ker_cols = kernel(cols);
  auto delta = [&](const SetPartition& ker, const SetPartition& pi) -> Rational {
    if (!coarser_leq(ker, pi)) return Rational(0);
    return Rational(spec.twisted ? signature(ker) : 1);
  };
  Rational total = 0;
  for (size_t i = 0; i < members.size(); ++i) {
    const Rational da = delta(ker_rows, members[i]);
    if (da == 0) continue;
    for (size_t j = 0; j < members.size(); ++j) {
      const Rational db = delta(ker_cols, members[j]);
      if (db == 0) continue;
      total += da * db * w.at(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return total;
}

LiberationResult liberation_level(const QuizzySpec& inner, const QuizzySpec& outer, int cap,
                                  const Budget& budget) {
  validate_spec(inner);
  validate_spec(outer);
  if (inner.N != outer.N) throw std::invalid_argument("liberation endpoints must share N");
  // Quantum group inclusion means reverse inclusion of categories; verified
  // on small point counts.
  for (int m = 0; m <= std::min(cap, 6); ++m)
    for (const SetPartition& pi : enumerate_category(outer.category, m))
      if (!category_contains(inner.category, pi))
        throw std::invalid_argument("not a liberation: outer category is not contained in inner");
  LiberationResult result;
  result.cap = cap;
  for (int l = 1; l <= cap; ++l) {
    const int di = fix_dim(inner, l, budget);
    const int dout = fix_dim(outer, l, budget);
    result.inner_dims.push_back(di);
    result.outer_dims.push_back(dout);
    if (di < dout) throw std::logic_error("fixed-point dimension grew along a liberation");
    if (di > dout) {
      result.level = l;
      break;
    }
  }
  return result;
}

}  // namespace quizzy
