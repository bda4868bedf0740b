#pragma once

#include "countlab/bigint.hpp"
#include "countlab/coloured_graph.hpp"
#include "countlab/graph.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace countlab {

// A fracture of a pattern H: for each vertex v, a partition of the edges
// incident to v. Blocks hold indices into H.edges(); within a block indices
// are ascending, and blocks are ordered by their smallest index, which makes
// the representation canonical.
class Fracture {
public:
    Fracture() = default;
    // Validates the blocks against H and canonicalizes them.
    Fracture(const Graph& h, std::vector<std::vector<std::vector<int>>> blocks);

    static Fracture coarsest(const Graph& h);

    const std::vector<std::vector<int>>& blocks(int v) const { return blocks_[v]; }
    int block_count(int v) const { return static_cast<int>(blocks_[v].size()); }
    int vertex_count() const { return static_cast<int>(blocks_.size()); }
    // Which block of vertex v contains the given incident edge index.
    int block_of(int v, int edge_index) const;
    bool is_coarsest() const;

    bool operator==(const Fracture& other) const { return blocks_ == other.blocks_; }

private:
    // blocks_[v] = partition of the incident edge indices of v.
    std::vector<std::vector<std::vector<int>>> blocks_;
    friend std::vector<Fracture> enumerate_fractures(const Graph&, std::size_t);
};

// Prints e.g. "0:{0-1,0-2} 1:{0-1|1-2} 2:{0-2,1-2}".
std::string to_string(const Fracture& f, const Graph& h);

// Product of Bell numbers of the vertex degrees.
BigCount fracture_count(const Graph& h);

// All fractures of H in a fixed lexicographic order (per-vertex set
// partitions enumerated by restricted-growth strings, vertex 0 slowest).
// The first element is always the coarsest fracture. Throws GuardError if
// the count exceeds the guard.
std::vector<Fracture> enumerate_fractures(const Graph& h, std::size_t guard = 100000);

// All-singleton-blocks fracture; the fractured graph is an |E(H)|-matching.
Fracture finest_fracture(const Graph& h);

// The fractured graph: one host vertex per (vertex, block) pair, numbered by
// (vertex, block rank); each pattern edge yields exactly one host edge, and
// the canonical colouring maps every copy of v back to v.
ColouredGraph fractured_graph(const Graph& h, const Fracture& rho);

} // namespace countlab
