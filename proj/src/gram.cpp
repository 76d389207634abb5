#include "quizzy/gram.hpp"

#include <stdexcept>

namespace quizzy {

ExactMatrix gram_matrix(CategoryId cat, int m, long N) {
  if (N < 1) throw std::invalid_argument("gram_matrix requires N >= 1");
  const std::vector<SetPartition> members = enumerate_category(cat, m);
  if (members.empty())
    throw std::invalid_argument("gram_matrix of an empty category: " + category_name(cat) + "(" +
                                std::to_string(m) + ")");
  const int n = static_cast<int>(members.size());
  ExactMatrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const SetPartition join = join_coarsen(members[static_cast<size_t>(i)], members[static_cast<size_t>(j)]);
      Rational entry(int_pow(Int(N), static_cast<unsigned long>(join.block_count())));
      g.at(i, j) = entry;
      g.at(j, i) = entry;
    }
  return g;
}

}  // namespace quizzy
