#pragma once

#include "countlab/graph.hpp"

#include <string>

namespace countlab {

enum class InvariantKind {
    clique,            // omega
    independence,      // alpha
    biclique,          // beta: largest k with K_{k,k} as a subgraph
    induced_biclique,  // beta_ind
    matching,          // m
    induced_matching,  // m_ind
};

InvariantKind invariant_kind_from_name(const std::string& name);
std::string to_string(InvariantKind kind);

// Exact value by exhaustive search; guarded on |V(G)|. No heuristics.
int invariant(const Graph& g, InvariantKind kind, int vertex_guard = 20);

} // namespace countlab
