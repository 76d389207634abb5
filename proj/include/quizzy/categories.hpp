#pragma once

#include <string>
#include <vector>

#include "quizzy/set_partition.hpp"

namespace quizzy {

// Categories of partitions and the quantum groups they parametrize:
//   P       S_N          NC      S_N+
//   P2      O_N          NC2     O_N+
//   Peven   H_N          NCeven  H_N+
//   P12     B_N          NC12    B_N+
//   P2star  O_N*         Pevenstar  H_N*   (balanced; experimental, see below)
enum class CategoryId { P, NC, P2, NC2, Peven, NCeven, P12, NC12, P2star, Pevenstar };

// The balanced categories P2star/Pevenstar use an experimental membership
// rule (every block meets as many odd as even positions); results that depend
// on them are only reported behind an explicit opt-in at the CLI layer.
bool is_experimental(CategoryId cat);

// True when the category contains the basic crossing, i.e. parametrizes a
// classical group. Leg-permutation maps are intertwiners exactly then.
bool is_classical_category(CategoryId cat);

bool category_contains(CategoryId cat, const SetPartition& pi);

// All members of the category on m points, canonical, sorted, no duplicates.
// Even categories are empty for odd m.
std::vector<SetPartition> enumerate_category(CategoryId cat, int m);

std::string category_name(CategoryId cat);
CategoryId parse_category(const std::string& name);

}  // namespace quizzy
