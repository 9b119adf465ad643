#pragma once

#include <optional>
#include <string>

#include "hibi/decomposition.hpp"
#include "hibi/poset.hpp"

namespace hibi {

// Hasse diagram as a DOT digraph, edges lower -> upper in cover-pair
// order. With a decomposition, chains get a color each and diagonals are
// dashed.
std::string to_dot(const Poset& p, const std::string& name,
                   const std::optional<ChainDecomposition>& dec = std::nullopt);

}  // namespace hibi
