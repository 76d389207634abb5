#include "quizzy/categories.hpp"

#include <algorithm>
#include <stdexcept>

namespace quizzy {

bool is_experimental(CategoryId cat) {
  return cat == CategoryId::P2star || cat == CategoryId::Pevenstar;
}

bool is_classical_category(CategoryId cat) {
  switch (cat) {
    case CategoryId::P:
    case CategoryId::P2:
    case CategoryId::Peven:
    case CategoryId::P12:
    case CategoryId::P2star:
    case CategoryId::Pevenstar:
      return true;
    default:
      return false;
  }
}

namespace {

bool all_blocks_at_most_two(const SetPartition& pi) {
  for (const auto& b : pi.blocks())
    if (b.size() > 2) return false;
  return true;
}

bool all_blocks_exactly_two(const SetPartition& pi) {
  for (const auto& b : pi.blocks())
    if (b.size() != 2) return false;
  return true;
}

// Balanced: every block contains equally many odd- and even-labeled points,
// the label of point p being the parity of p.
bool balanced(const SetPartition& pi) {
  for (const auto& b : pi.blocks()) {
    int odd = 0, even = 0;
    for (int p : b) (p % 2 == 1 ? odd : even)++;
    if (odd != even) return false;
  }
  return true;
}

bool even_category(CategoryId cat) {
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

}  // namespace

bool category_contains(CategoryId cat, const SetPartition& pi) {
  switch (cat) {
    case CategoryId::P:
      return true;
    case CategoryId::NC:
      return is_noncrossing(pi);
    case CategoryId::P2:
      return all_blocks_exactly_two(pi);
    case CategoryId::NC2:
      return all_blocks_exactly_two(pi) && is_noncrossing(pi);
    case CategoryId::Peven:
      return all_blocks_even(pi);
    case CategoryId::NCeven:
      return all_blocks_even(pi) && is_noncrossing(pi);
    case CategoryId::P12:
      return all_blocks_at_most_two(pi);
    case CategoryId::NC12:
      return all_blocks_at_most_two(pi) && is_noncrossing(pi);
    case CategoryId::P2star:
      return all_blocks_exactly_two(pi) && balanced(pi);
    case CategoryId::Pevenstar:
      return all_blocks_even(pi) && balanced(pi);
  }
  throw std::logic_error("unknown category");
}

std::vector<SetPartition> enumerate_category(CategoryId cat, int m) {
  if (m < 0) throw std::invalid_argument("negative point count");
  std::vector<SetPartition> out;
  if (m % 2 != 0 && even_category(cat)) return out;
  // Pair categories enumerate matchings directly; the rest filter the full
  // partition list.
  const bool pairs_only = cat == CategoryId::P2 || cat == CategoryId::NC2 || cat == CategoryId::P2star;
  for (const SetPartition& pi : pairs_only ? all_pairings(m) : all_partitions(m))
    if (category_contains(cat, pi)) out.push_back(pi);
  std::sort(out.begin(), out.end());
  return out;
}

std::string category_name(CategoryId cat) {
  switch (cat) {
    case CategoryId::P: return "P";
    case CategoryId::NC: return "NC";
    case CategoryId::P2: return "P2";
    case CategoryId::NC2: return "NC2";
    case CategoryId::Peven: return "Peven";
    case CategoryId::NCeven: return "NCeven";
    case CategoryId::P12: return "P12";
    case CategoryId::NC12: return "NC12";
    case CategoryId::P2star: return "P2star";
    case CategoryId::Pevenstar: return "Pevenstar";
  }
  throw std::logic_error("unknown category");
}

CategoryId parse_category(const std::string& name) {
  for (CategoryId c : {CategoryId::P, CategoryId::NC, CategoryId::P2, CategoryId::NC2,
                       CategoryId::Peven, CategoryId::NCeven, CategoryId::P12, CategoryId::NC12,
                       CategoryId::P2star, CategoryId::Pevenstar})
    if (category_name(c) == name) return c;
  throw std::invalid_argument("unknown category: " + name);
}

}  // namespace quizzy
