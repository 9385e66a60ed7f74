#pragma once

#include <optional>

#include "homrec/graph.hpp"

namespace homrec {

// Exact chromatic number by backtracking; capped at 30 vertices.
int chromatic_number(const Graph& g);

// Length of a shortest odd cycle; empty for bipartite graphs (odd girth infinite).
std::optional<int> odd_girth(const Graph& g);

}  // namespace homrec
