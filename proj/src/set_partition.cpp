#include "quizzy/set_partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace quizzy {

SetPartition::SetPartition(int m, std::vector<std::vector<int>> blocks)
    : m_(m), blocks_(std::move(blocks)) {
  if (m < 0) throw std::invalid_argument("negative point count");
  std::vector<char> seen(static_cast<size_t>(m) + 1, 0);
  size_t covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty block");
    std::sort(b.begin(), b.end());
    for (int p : b) {
      if (p < 1 || p > m) throw std::invalid_argument("point out of range");
      if (seen[static_cast<size_t>(p)]) throw std::invalid_argument("point in two blocks");
      seen[static_cast<size_t>(p)] = 1;
      ++covered;
    }
  }
  if (covered != static_cast<size_t>(m)) throw std::invalid_argument("blocks do not cover {1..m}");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
  block_of_.assign(static_cast<size_t>(m) + 1, -1);
  for (int bi = 0; bi < block_count(); ++bi)
    for (int p : blocks_[static_cast<size_t>(bi)]) block_of_[static_cast<size_t>(p)] = bi;
}

SetPartition SetPartition::discrete(int m) {
  std::vector<std::vector<int>> bs;
  for (int p = 1; p <= m; ++p) bs.push_back({p});
  return SetPartition(m, std::move(bs));
}

SetPartition SetPartition::one_block(int m) {
  if (m == 0) return SetPartition();
  std::vector<int> b(static_cast<size_t>(m));
  std::iota(b.begin(), b.end(), 1);
  return SetPartition(m, {b});
}

std::strong_ordering SetPartition::operator<=>(const SetPartition& o) const {
  if (auto c = m_ <=> o.m_; c != 0) return c;
  return blocks_ <=> o.blocks_;
}

SetPartition kernel(const std::vector<int>& values) {
  const int m = static_cast<int>(values.size());
  std::vector<std::vector<int>> blocks;
  std::vector<int> first_value;  // value of each block's representative
  for (int p = 1; p <= m; ++p) {
    int v = values[static_cast<size_t>(p - 1)];
    bool placed = false;
    for (size_t b = 0; b < blocks.size(); ++b) {
      if (first_value[b] == v) {
        blocks[b].push_back(p);
        placed = true;
        break;
      }
    }
    if (!placed) {
      blocks.push_back({p});
      first_value.push_back(v);
    }
  }
  return SetPartition(m, std::move(blocks));
}

bool coarser_leq(const SetPartition& sigma, const SetPartition& pi) {
  if (sigma.points() != pi.points())
    throw std::invalid_argument("coarser_leq on partitions of different point counts");
  for (const auto& b : pi.blocks()) {
    const int home = sigma.block_of(b[0]);
    for (int p : b)
      if (sigma.block_of(p) != home) return false;
  }
  return true;
}

namespace {
int uf_find(std::vector<int>& parent, int x) {
  while (parent[static_cast<size_t>(x)] != x) {
    parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
    x = parent[static_cast<size_t>(x)];
  }
  return x;
}
void uf_union(std::vector<int>& parent, int a, int b) {
  parent[static_cast<size_t>(uf_find(parent, a))] = uf_find(parent, b);
}
}  // namespace

SetPartition join_coarsen(const SetPartition& pi, const SetPartition& sigma) {
  if (pi.points() != sigma.points())
    throw std::invalid_argument("join_coarsen on partitions of different point counts");
  const int m = pi.points();
  std::vector<int> parent(static_cast<size_t>(m) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& b : pi.blocks())
    for (size_t i = 1; i < b.size(); ++i) uf_union(parent, b[0], b[i]);
  for (const auto& b : sigma.blocks())
    for (size_t i = 1; i < b.size(); ++i) uf_union(parent, b[0], b[i]);
  std::vector<std::vector<int>> groups(static_cast<size_t>(m) + 1);
  for (int p = 1; p <= m; ++p) groups[static_cast<size_t>(uf_find(parent, p))].push_back(p);
  std::vector<std::vector<int>> blocks;
  for (auto& g : groups)
    if (!g.empty()) blocks.push_back(std::move(g));
  return SetPartition(m, std::move(blocks));
}

int crossing_count(const SetPartition& pi) {
  const int m = pi.points();
  int count = 0;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      for (int c = b + 1; c <= m; ++c)
        for (int d = c + 1; d <= m; ++d)
          if (pi.block_of(a) == pi.block_of(c) && pi.block_of(b) == pi.block_of(d) &&
              pi.block_of(a) != pi.block_of(b))
            ++count;
  return count;
}

bool is_noncrossing(const SetPartition& pi) { return crossing_count(pi) == 0; }

bool all_blocks_even(const SetPartition& pi) {
  for (const auto& b : pi.blocks())
    if (b.size() % 2 != 0) return false;
  return true;
}

int signature(const SetPartition& pi) {
  if (!all_blocks_even(pi))
    throw std::invalid_argument("signature is only defined on even partitions");
  return crossing_count(pi) % 2 == 0 ? 1 : -1;
}

SetPartition pairing_from_permutation(const std::vector<int>& rho) {
  const int k = static_cast<int>(rho.size());
  std::vector<std::vector<int>> blocks;
  for (int i = 1; i <= k; ++i) blocks.push_back({k + 1 - i, k + rho[static_cast<size_t>(i - 1)]});
  return SetPartition(2 * k, std::move(blocks));
}

std::vector<SetPartition> all_partitions(int m) {
  std::vector<SetPartition> out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: rgs[0]=0, rgs[i] <= 1+max(rgs[0..i-1]).
  std::vector<int> rgs(static_cast<size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int i, int maxv) {
    if (i == m) {
      int nblocks = maxv + 1;
      std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
      for (int p = 1; p <= m; ++p) blocks[static_cast<size_t>(rgs[static_cast<size_t>(p - 1)])].push_back(p);
      out.emplace_back(m, std::move(blocks));
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[static_cast<size_t>(i)] = v;
      rec(i + 1, std::max(maxv, v));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

std::vector<SetPartition> all_pairings(int m) {
  std::vector<SetPartition> out;
  if (m % 2 != 0) return out;
  if (m == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<std::vector<int>> blocks;
  std::vector<char> used(static_cast<size_t>(m) + 1, 0);
  std::function<void()> rec = [&]() {
    int first = 0;
    for (int p = 1; p <= m; ++p)
      if (!used[static_cast<size_t>(p)]) {
        first = p;
        break;
      }
    if (first == 0) {
      out.emplace_back(m, blocks);
      return;
    }
    used[static_cast<size_t>(first)] = 1;
    for (int q = first + 1; q <= m; ++q) {
      if (used[static_cast<size_t>(q)]) continue;
      used[static_cast<size_t>(q)] = 1;
      blocks.push_back({first, q});
      rec();
      blocks.pop_back();
      used[static_cast<size_t>(q)] = 0;
    }
    used[static_cast<size_t>(first)] = 0;
  };
  rec();
  return out;
}

std::vector<SetPartition> coarsenings(const SetPartition& pi) {
  const int b = pi.block_count();
  std::vector<SetPartition> out;
  for (const SetPartition& grouping : all_partitions(b)) {
    std::vector<std::vector<int>> blocks;
    for (const auto& group : grouping.blocks()) {
      std::vector<int> merged;
      for (int bi : group) {
        const auto& src = pi.blocks()[static_cast<size_t>(bi - 1)];
        merged.insert(merged.end(), src.begin(), src.end());
      }
      blocks.push_back(std::move(merged));
    }
    out.emplace_back(pi.points(), std::move(blocks));
  }
  return out;
}

}  // namespace quizzy
