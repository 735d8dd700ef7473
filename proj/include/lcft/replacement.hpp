#pragma once

#include "lcft/table.hpp"

#include <utility>
#include <vector>

namespace lcft {

// For each output triple ([h_{1,s}], [h_{1,2p+s}], [~h_{1,2p-s}]) with equal,
// nonzero first two coefficients: both are cleared and half their value is
// added to the tilde coefficient. The first two outputs are never touched.
// Throws malformed_table on an odd coefficient and replacement_insufficiency
// when a negative coefficient survives.
Decomposition replace_decomposition(int p, const Decomposition& pre);

FusionTable replace_table(const FusionTable& pre);

// Unordered pairs (I <= J, 1-based) with an indecomposable factor whose
// row is altered by replacement although it carries no negative coefficient:
// the replacement there has no independent justification.
std::vector<std::pair<int, int>> flagged_products(const FusionTable& pre);

// Expands every tilde module into irreducible characters,
// [~h_{1,2p-s}] -> 2[h_{1,s}] + 2[h_{1,2p+s}], leaving the tilde slots zero.
Decomposition character_content(int p, const Decomposition& d);

}  // namespace lcft
