#include "quizzy/mobius.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace quizzy {

namespace {

using Key = std::tuple<CategoryId, SetPartition, SetPartition>;

// Interval [sigma, pi] in the lattice: members coarser than pi and finer than
// sigma. Every such tau merges blocks of pi within single blocks of sigma.
std::vector<SetPartition> interval(const SetPartition& sigma, const SetPartition& pi,
                                   CategoryId lattice) {
  std::vector<SetPartition> out;
  for (const SetPartition& tau : coarsenings(pi))
    if (coarser_leq(sigma, tau) && category_contains(lattice, tau)) out.push_back(tau);
  return out;
}

Int mobius_rec(const SetPartition& sigma, const SetPartition& pi, CategoryId lattice,
               std::map<Key, Int>& memo) {
  if (sigma == pi) return 1;
  if (!coarser_leq(sigma, pi)) return 0;
  Key key{lattice, sigma, pi};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Int total = 0;
  for (const SetPartition& tau : interval(sigma, pi, lattice))
    if (!(tau == pi)) total += mobius_rec(sigma, tau, lattice, memo);
  Int value = -total;
  memo.emplace(std::move(key), value);
  return value;
}

}  // namespace

Int mobius(const SetPartition& sigma, const SetPartition& pi, CategoryId lattice) {
  if (sigma.points() != pi.points())
    throw std::invalid_argument("mobius on partitions of different point counts");
  if (!category_contains(lattice, sigma) || !category_contains(lattice, pi))
    throw std::invalid_argument("mobius arguments outside the lattice " + category_name(lattice));
  static std::map<Key, Int> memo;
  static std::mutex lock;
  std::scoped_lock guard(lock);
  return mobius_rec(sigma, pi, lattice, memo);
}

}  // namespace quizzy
