#include "quizzy/group_duals.hpp"

#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace quizzy {

long DualSpec::total_points() const {
  long total = 0;
  for (long n : orders) total += n;
  return total;
}

void validate(const DualSpec& spec) {
  if (spec.orders.empty()) throw std::invalid_argument("dual spec needs at least one cyclic factor");
  for (long n : spec.orders)
    if (n < 2) throw std::invalid_argument("cyclic orders must be at least 2");
  if (spec.total_points() < 2) throw std::invalid_argument("dual spec needs at least two points");
}

namespace {

struct Generator {
  int factor;
  long exponent;  // 0..order-1; 0 is the identity copy of this factor
};

std::vector<Generator> generating_multiset(const DualSpec& spec) {
  std::vector<Generator> s;
  for (size_t r = 0; r < spec.orders.size(); ++r)
    for (long e = 0; e < spec.orders[r]; ++e) s.push_back({static_cast<int>(r), e});
  return s;
}

Int loop_count_direct(const DualSpec& spec, int k) {
  // Walk on the abelian product; states are mixed-radix exponent vectors.
  // Counts are arbitrary-precision, so no k overflows.
  long long states = 1;
  for (long n : spec.orders) states *= n;
  std::vector<long long> weight(spec.orders.size(), 1);
  for (size_t r = 1; r < spec.orders.size(); ++r)
    weight[r] = weight[r - 1] * spec.orders[r - 1];
  std::vector<Int> counts(static_cast<size_t>(states), Int(0));
  counts[0] = 1;
  const std::vector<Generator> s = generating_multiset(spec);
  for (int step = 0; step < k; ++step) {
    std::vector<Int> next(static_cast<size_t>(states), Int(0));
    for (long long st = 0; st < states; ++st) {
      if (counts[static_cast<size_t>(st)] == 0) continue;
      for (const Generator& g : s) {
        const long order = spec.orders[static_cast<size_t>(g.factor)];
        const long cur = (st / weight[static_cast<size_t>(g.factor)]) % order;
        const long nxt = (cur + g.exponent) % order;
        const long long target = st + (nxt - cur) * weight[static_cast<size_t>(g.factor)];
        next[static_cast<size_t>(target)] += counts[static_cast<size_t>(st)];
      }
    }
    counts = std::move(next);
  }
  return counts[0];
}

using ReducedWord = std::vector<std::pair<int, long>>;  // (factor, exponent != 0) syllables

Int loop_count_free(const DualSpec& spec, int k) {
  std::map<ReducedWord, Int> counts;
  counts[{}] = 1;
  const std::vector<Generator> s = generating_multiset(spec);
  for (int step = 0; step < k; ++step) {
    std::map<ReducedWord, Int> next;
    for (const auto& [word, count] : counts)
      for (const Generator& g : s) {
        ReducedWord w = word;
        if (g.exponent != 0) {
          const long order = spec.orders[static_cast<size_t>(g.factor)];
          if (!w.empty() && w.back().first == g.factor) {
            long e = (w.back().second + g.exponent) % order;
            if (e == 0)
              w.pop_back();
            else
              w.back().second = e;
          } else {
            w.emplace_back(g.factor, g.exponent);
          }
        }
        next[w] += count;
      }
    counts = std::move(next);
  }
  auto it = counts.find({});
  return it == counts.end() ? 0 : it->second;
}

}  // namespace

long long loop_count(const DualSpec& spec, int k) {
  validate(spec);
  if (k < 1) throw std::invalid_argument("loop_count requires k >= 1");
  const Int count = spec.mode == DualSpec::Mode::Direct ? loop_count_direct(spec, k)
                                                        : loop_count_free(spec, k);
  if (!count.fits_slong_p())
    throw ResourceError("loop count does not fit a machine integer at k=" + std::to_string(k));
  return count.get_si();
}

OrbitalClassStructure orbital_classes(const DualSpec& spec, int k) {
  validate(spec);
  if (k < 1 || k > 3)
    throw std::invalid_argument(
        "orbital classes are resolved for k <= 3 only; transitivity beyond that is open for "
        "general duals");
  const int l = static_cast<int>(spec.orders.size());
  OrbitalClassStructure out;
  out.k = k;
  auto add = [&](const std::string& label, long long count) {
    out.breakdown.emplace_back(label, count);
    out.total += count;
  };
  if (k == 1) {
    for (int r = 0; r < l; ++r) add("orbit A" + std::to_string(r + 1), 1);
    return out;
  }
  if (k == 2) {
    for (int r = 0; r < l; ++r)
      add("copies of A" + std::to_string(r + 1), spec.orders[static_cast<size_t>(r)]);
    for (int r = 0; r < l; ++r)
      for (int s = 0; s < l; ++s)
        if (r != s) add("A" + std::to_string(r + 1) + " x A" + std::to_string(s + 1), 1);
    return out;
  }
  for (int r = 0; r < l; ++r) {
    const long nr = spec.orders[static_cast<size_t>(r)];
    add("pattern (r,r,r) at A" + std::to_string(r + 1), nr * nr);
  }
  for (int r = 0; r < l; ++r)
    for (int s = 0; s < l; ++s) {
      if (r == s) continue;
      const long nr = spec.orders[static_cast<size_t>(r)];
      const long ns = spec.orders[static_cast<size_t>(s)];
      add("pattern (r,r,s) r=A" + std::to_string(r + 1) + " s=A" + std::to_string(s + 1), nr);
      add("pattern (r,s,s) r=A" + std::to_string(r + 1) + " s=A" + std::to_string(s + 1), ns);
      // The mode-dependent pattern: outer legs in one factor, the middle leg
      // elsewhere. In the free product the word factorizes and nonvanishing
      // of the three coordinates suffices, one class; in the direct product
      // the outer legs obey the cyclic 2-orbital condition, N_r classes.
      add("pattern (r,s,r) r=A" + std::to_string(r + 1) + " s=A" + std::to_string(s + 1),
          spec.mode == DualSpec::Mode::Free ? 1 : nr);
    }
  for (int r = 0; r < l; ++r)
    for (int s = 0; s < l; ++s)
      for (int t = 0; t < l; ++t)
        if (r != s && s != t && r != t)
          add("pattern (r,s,t) distinct " + std::to_string(r + 1) + "," + std::to_string(s + 1) +
                  "," + std::to_string(t + 1),
              1);
  return out;
}

namespace {

struct PointInfo {
  int factor;
  long local;  // position within the factor block, 0-based
};

std::vector<PointInfo> point_table(const DualSpec& spec) {
  std::vector<PointInfo> table;
  for (size_t r = 0; r < spec.orders.size(); ++r)
    for (long i = 0; i < spec.orders[r]; ++i) table.push_back({static_cast<int>(r), i});
  return table;
}

// Nonvanishing of u_{i1 j1} ... u_{ik jk} over the dual. Coordinates vanish
// across blocks. Legs that multiply inside one factor's abelian algebra give
// a nonzero product iff their local differences i_s - j_s are all congruent
// mod the order (the Fourier sum collapses otherwise). In the direct product
// all legs of a factor pool together; in the free product only maximal runs
// of consecutive same-factor legs do, the runs being independent.
bool tuple_related(const DualSpec& spec, const std::vector<PointInfo>& pts,
                   const std::vector<int>& i, const std::vector<int>& j) {
  const int k = static_cast<int>(i.size());
  for (int s = 0; s < k; ++s)
    if (pts[static_cast<size_t>(i[static_cast<size_t>(s)])].factor !=
        pts[static_cast<size_t>(j[static_cast<size_t>(s)])].factor)
      return false;
  auto local_diff = [&](int s, long order) {
    const long d = pts[static_cast<size_t>(i[static_cast<size_t>(s)])].local -
                   pts[static_cast<size_t>(j[static_cast<size_t>(s)])].local;
    return ((d % order) + order) % order;
  };
  if (spec.mode == DualSpec::Mode::Direct) {
    for (size_t r = 0; r < spec.orders.size(); ++r) {
      const long order = spec.orders[r];
      long common = -1;
      for (int s = 0; s < k; ++s) {
        if (pts[static_cast<size_t>(i[static_cast<size_t>(s)])].factor != static_cast<int>(r))
          continue;
        const long d = local_diff(s, order);
        if (common < 0)
          common = d;
        else if (d != common)
          return false;
      }
    }
    return true;
  }
  int s = 0;
  while (s < k) {
    const int factor = pts[static_cast<size_t>(i[static_cast<size_t>(s)])].factor;
    const long order = spec.orders[static_cast<size_t>(factor)];
    long common = -1;
    while (s < k && pts[static_cast<size_t>(i[static_cast<size_t>(s)])].factor == factor) {
      const long d = local_diff(s, order);
      if (common < 0)
        common = d;
      else if (d != common)
        return false;
      ++s;
    }
  }
  return true;
}

}  // namespace

long long orbital_classes_bruteforce(const DualSpec& spec, int k) {
  validate(spec);
  const long N = spec.total_points();
  long long tuples = 1;
  for (int s = 0; s < k; ++s) {
    tuples *= N;
    if (tuples > 4096) throw std::invalid_argument("brute-force class count on small specs only");
  }
  const std::vector<PointInfo> pts = point_table(spec);
  auto decode = [&](long long code) {
    std::vector<int> t(static_cast<size_t>(k));
    for (int s = 0; s < k; ++s) {
      t[static_cast<size_t>(s)] = static_cast<int>(code % N);
      code /= N;
    }
    return t;
  };
  std::vector<std::vector<char>> related(static_cast<size_t>(tuples),
                                         std::vector<char>(static_cast<size_t>(tuples), 0));
  for (long long a = 0; a < tuples; ++a) {
    const std::vector<int> ta = decode(a);
    for (long long b = 0; b < tuples; ++b)
      related[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          tuple_related(spec, pts, ta, decode(b)) ? 1 : 0;
  }
  for (long long a = 0; a < tuples; ++a) {
    if (!related[static_cast<size_t>(a)][static_cast<size_t>(a)])
      throw std::logic_error("nonvanishing relation is not reflexive");
    for (long long b = 0; b < tuples; ++b) {
      if (related[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
          related[static_cast<size_t>(b)][static_cast<size_t>(a)])
        throw std::logic_error("nonvanishing relation is not symmetric");
      if (!related[static_cast<size_t>(a)][static_cast<size_t>(b)]) continue;
      for (long long c = 0; c < tuples; ++c)
        if (related[static_cast<size_t>(b)][static_cast<size_t>(c)] &&
            !related[static_cast<size_t>(a)][static_cast<size_t>(c)])
          throw std::logic_error("nonvanishing relation is not transitive");
    }
  }
  std::vector<char> seen(static_cast<size_t>(tuples), 0);
  long long classes = 0;
  for (long long a = 0; a < tuples; ++a) {
    if (seen[static_cast<size_t>(a)]) continue;
    ++classes;
    for (long long b = a; b < tuples; ++b)
      if (related[static_cast<size_t>(a)][static_cast<size_t>(b)]) seen[static_cast<size_t>(b)] = 1;
  }
  return classes;
}

bool snplus_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty())
    throw std::invalid_argument("tuples must be nonempty and of equal length");
  for (size_t s = 0; s + 1 < a.size(); ++s)
    if ((a[s] == a[s + 1]) != (b[s] == b[s + 1])) return false;
  return true;
}

long long snplus_count(int k) {
  if (k < 1) throw std::invalid_argument("snplus_count requires k >= 1");
  return 1LL << (k - 1);
}

long long snplus_class_count_bruteforce(int k, int alphabet) {
  if (k < 1 || alphabet < 1) throw std::invalid_argument("bad brute-force parameters");
  std::set<std::vector<char>> signatures;
  long long tuples = 1;
  for (int s = 0; s < k; ++s) {
    tuples *= alphabet;
    if (tuples > 1000000) throw std::invalid_argument("alphabet too large for brute force");
  }
  for (long long code = 0; code < tuples; ++code) {
    long long rest = code;
    std::vector<int> t(static_cast<size_t>(k));
    for (int s = 0; s < k; ++s) {
      t[static_cast<size_t>(s)] = static_cast<int>(rest % alphabet);
      rest /= alphabet;
    }
    std::vector<char> sig;
    for (int s = 0; s + 1 < k; ++s) sig.push_back(t[static_cast<size_t>(s)] == t[static_cast<size_t>(s + 1)] ? 1 : 0);
    signatures.insert(std::move(sig));
  }
  return static_cast<long long>(signatures.size());
}

}  // namespace quizzy
