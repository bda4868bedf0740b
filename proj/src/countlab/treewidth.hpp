#pragma once

#include "countlab/graph.hpp"

#include <utility>
#include <vector>

namespace countlab {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;          // sorted vertex lists
    std::vector<std::pair<int, int>> tree_edges; // tree over bag indices

    int width() const;
};

// Throws std::invalid_argument naming the violated axiom: vertex coverage,
// edge coverage, or subtree connectivity (plus the tree shape itself).
void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Exact treewidth by dynamic programming over vertex subsets (elimination
// orderings), plus a decomposition of that width built from the optimal
// order. Guarded at |V| <= guard.
std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, int vertex_guard = 18);

} // namespace countlab
