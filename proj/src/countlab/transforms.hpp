#pragma once

#include "countlab/coloured_graph.hpp"
#include "countlab/graph.hpp"

#include <vector>

namespace countlab {

// r-subdivision: every edge becomes a path of r+1 edges. Original vertices
// keep their labels; for edges in sorted order the r interior vertices get
// consecutive fresh labels, ordered from the smaller endpoint.
Graph subdivide(const Graph& g, int r);

// Non-uniform subdivision: edge i (in sorted order) receives counts[i]
// interior vertices, numbered with the same convention as subdivide().
Graph subdivide_each(const Graph& g, const std::vector<int>& counts);

// Lifts an H-colouring of G to an H^r-colouring of G^r. Interior vertices of
// a host edge path map to the interior vertices of the coloured pattern edge
// path; every pattern path is oriented from its lower-labelled endpoint and
// the host path from the endpoint carrying that colour.
ColouredGraph lift_colouring(const ColouredGraph& cg, int r);

// Shared generalization: pattern edge i is subdivided pattern_counts[i]
// times and every host edge coloured onto it follows suit.
ColouredGraph lift_colouring_each(const ColouredGraph& cg, const std::vector<int>& pattern_counts);

// Coloured tensor product of two graphs over the same pattern: vertex pairs
// with equal colours, adjacency componentwise, numbering by sorted pair order.
ColouredGraph tensor(const ColouredGraph& a, const ColouredGraph& b);

// A subset of the pattern's edges, stored as sorted indices into H.edges().
struct EdgeSubset {
    std::vector<int> indices;

    static EdgeSubset all(const Graph& h);
    static EdgeSubset none() { return {}; }
    bool operator==(const EdgeSubset&) const = default;
};

// (H[A], id_H): full vertex set, only the edges in A, identity colouring.
ColouredGraph edge_subgraph(const Graph& h, const EdgeSubset& a);

// All 2^{|E(H)|} subsets ordered by (size, lexicographic); the empty set
// comes first and the full edge set last. Guarded on |E(H)|.
std::vector<EdgeSubset> enumerate_edge_subsets(const Graph& h, int edge_guard = 12);

} // namespace countlab
