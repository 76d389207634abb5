#include "quizzy/finite_action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "quizzy/set_partition.hpp"
#include "quizzy/signed_permutation.hpp"

namespace quizzy {

namespace {

Int factorial(long n) {
  Int f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

FiniteAction hyperoctahedral_on_segments(int N, const Budget& budget) {
  FiniteAction a;
  a.set_size = 2 * N;
  for (const SignedPermutation& g : enumerate_hyperoctahedral(N, budget))
    a.elements.push_back(action_segments(g));
  return a;
}

FiniteAction hyperoctahedral_on_cube(int N, const Budget& budget) {
  FiniteAction a;
  a.set_size = 1L << N;
  for (const SignedPermutation& g : enumerate_hyperoctahedral(N, budget))
    a.elements.push_back(action_cube(g));
  return a;
}

FiniteAction symmetric_on_points(int N, const Budget& budget) {
  if (N < 1) throw std::invalid_argument("symmetric group rank must be positive");
  long long order = 1;
  for (int i = 1; i <= N; ++i) order *= i;
  if (order > budget.max_group_order)
    throw ResourceError("symmetric group of order " + std::to_string(order) +
                        " exceeds the budget of " + std::to_string(budget.max_group_order));
  FiniteAction a;
  a.set_size = N;
  std::vector<int> base(static_cast<size_t>(N));
  std::iota(base.begin(), base.end(), 0);
  do {
    a.elements.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return a;
}

Int burnside_orbital_count(const FiniteAction& action, int k) {
  if (k < 1) throw std::invalid_argument("burnside_orbital_count requires k >= 1");
  if (action.elements.empty()) throw std::invalid_argument("empty group");
  Int total = 0;
  for (const auto& g : action.elements) {
    long fixed = 0;
    for (long x = 0; x < action.set_size; ++x)
      if (g[static_cast<size_t>(x)] == x) ++fixed;
    total += int_pow(Int(fixed), static_cast<unsigned long>(k));
  }
  Int order(static_cast<long>(action.elements.size()));
  if (total % order != 0) throw std::logic_error("Burnside sum not divisible by the group order");
  return total / order;
}

KOrbitals enumerate_korbitals(const FiniteAction& action, int k, long long budget_tuples) {
  if (k < 1) throw std::invalid_argument("enumerate_korbitals requires k >= 1");
  // Tuple codes are stored in 32-bit union-find cells.
  budget_tuples = std::min(budget_tuples, 1LL << 30);
  long long tuples = 1;
  for (int i = 0; i < k; ++i) {
    tuples *= action.set_size;
    if (tuples > budget_tuples)
      throw ResourceError("tuple space exceeds the budget of " + std::to_string(budget_tuples));
  }
  std::vector<int> parent(static_cast<size_t>(tuples));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x)
      x = parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    return x;
  };
  std::vector<int> digits(static_cast<size_t>(k));
  for (long long code = 0; code < tuples; ++code) {
    long long rest = code;
    for (int i = 0; i < k; ++i) {
      digits[static_cast<size_t>(i)] = static_cast<int>(rest % action.set_size);
      rest /= action.set_size;
    }
    for (const auto& g : action.elements) {
      long long image = 0;
      long long weight = 1;
      for (int i = 0; i < k; ++i) {
        image += weight * g[static_cast<size_t>(digits[static_cast<size_t>(i)])];
        weight *= action.set_size;
      }
      int a = find(static_cast<int>(code)), b = find(static_cast<int>(image));
      if (a != b) parent[static_cast<size_t>(a)] = b;
    }
  }
  KOrbitals out;
  out.tuple_count = tuples;
  out.class_of.assign(static_cast<size_t>(tuples), -1);
  std::vector<int> root_class(static_cast<size_t>(tuples), -1);
  for (long long code = 0; code < tuples; ++code) {
    int root = find(static_cast<int>(code));
    if (root_class[static_cast<size_t>(root)] < 0) {
      root_class[static_cast<size_t>(root)] = out.class_count++;
      out.class_sizes.push_back(0);
      std::vector<int> rep(static_cast<size_t>(k));
      long long rest = code;
      for (int i = 0; i < k; ++i) {
        rep[static_cast<size_t>(i)] = static_cast<int>(rest % action.set_size);
        rest /= action.set_size;
      }
      out.representatives.push_back(std::move(rep));
    }
    const int cls = root_class[static_cast<size_t>(root)];
    out.class_of[static_cast<size_t>(code)] = cls;
    out.class_sizes[static_cast<size_t>(cls)]++;
  }
  return out;
}

Rational average_coordinate_product(const FiniteAction& action, const std::vector<int>& rows,
                                    const std::vector<int>& cols) {
  if (rows.size() != cols.size() || rows.empty())
    throw std::invalid_argument("index tuples must be nonempty and of equal length");
  long hits = 0;
  for (const auto& g : action.elements) {
    bool all = true;
    for (size_t r = 0; r < rows.size(); ++r)
      if (g[static_cast<size_t>(cols[r])] != rows[r]) {
        all = false;
        break;
      }
    if (all) ++hits;
  }
  return make_rational(Int(hits), Int(static_cast<long>(action.elements.size())));
}

std::vector<long long> segment_configuration_multiplicities(int N, int k, const Budget& budget) {
  const FiniteAction action = hyperoctahedral_on_segments(N, budget);
  const KOrbitals orbitals = enumerate_korbitals(action, k);
  // A configuration is the unordered dot picture: the (same-point,
  // same-segment) kernel pair taken up to permuting the k dot positions.
  std::map<std::pair<SetPartition, SetPartition>, long long> shapes;
  std::vector<int> order(static_cast<size_t>(k));
  for (const auto& rep : orbitals.representatives) {
    std::iota(order.begin(), order.end(), 0);
    bool first = true;
    std::pair<SetPartition, SetPartition> best;
    do {
      std::vector<int> points, segments;
      for (int pos : order) {
        const int x = rep[static_cast<size_t>(pos)];
        points.push_back(x);
        segments.push_back(x % N);  // endpoint index mod N identifies the segment
      }
      std::pair<SetPartition, SetPartition> candidate{kernel(points), kernel(segments)};
      if (first || candidate < best) {
        best = std::move(candidate);
        first = false;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    shapes[best]++;
  }
  std::vector<long long> sizes;
  for (const auto& [shape, count] : shapes) sizes.push_back(count);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

TransitivityReport transitivity_check(const FiniteAction& action, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("transitivity_check is defined for k <= 3");
  const long N = action.set_size;
  TransitivityReport report;
  report.k = k;
  report.moment = burnside_orbital_count(action, k);
  static const long bell[4] = {1, 1, 2, 5};
  report.moments_match = report.moment == bell[k];
  report.distinct_index_integral = make_rational(factorial(N - k), factorial(N));

  // All index tuples (rows, cols) in {0..N-1}^k against the kernel rule; the
  // distinct-index case is |ker| = k.
  bool ok = true;
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= N;
  std::vector<int> rows0(static_cast<size_t>(k)), rows1(static_cast<size_t>(k));
  std::vector<int> cols0(static_cast<size_t>(k)), cols1(static_cast<size_t>(k));
  for (long long rc = 0; rc < total && ok; ++rc) {
    long long rest = rc;
    for (int i = 0; i < k; ++i) {
      rows0[static_cast<size_t>(i)] = static_cast<int>(rest % N);
      rows1[static_cast<size_t>(i)] = rows0[static_cast<size_t>(i)] + 1;
      rest /= N;
    }
    for (long long cc = 0; cc < total && ok; ++cc) {
      long long crest = cc;
      for (int i = 0; i < k; ++i) {
        cols0[static_cast<size_t>(i)] = static_cast<int>(crest % N);
        cols1[static_cast<size_t>(i)] = cols0[static_cast<size_t>(i)] + 1;
        crest /= N;
      }
      const Rational integral = average_coordinate_product(action, rows0, cols0);
      const SetPartition ki = kernel(rows1), kj = kernel(cols1);
      const Rational expected =
          ki == kj ? make_rational(factorial(N - ki.block_count()), factorial(N)) : Rational(0);
      if (integral != expected) ok = false;
    }
  }
  report.integrals_match = ok;
  return report;
}

}  // namespace quizzy
