#pragma once

#include "countlab/graph.hpp"

namespace countlab {

// True iff F is a shallow minor of G at depth d: some partition of V(G)
// into connected parts of radius <= d contracts to a supergraph of F.
// Exhaustive over all partitions of V(G); guarded on |V(G)|.
bool is_shallow_minor(const Graph& f, const Graph& g, int depth, int vertex_guard = 9);

} // namespace countlab
