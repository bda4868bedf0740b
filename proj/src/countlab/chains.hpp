#pragma once

#include "countlab/graph.hpp"

#include <vector>

namespace countlab {

// True iff every maximal chain of degree-2 vertices joining two branch
// vertices (degree >= 3) has length divisible by r+1. Any simple path
// between branch vertices is a concatenation of such chains, so per-chain
// divisibility is equivalent to requiring it of all simple paths.
bool chain_condition_check(const Graph& f, int r);

struct CliqueEmbedding {
    int clique_order = 0;          // m
    std::vector<int> mapping;      // F-vertex -> vertex of subdivide(K_m, r)
};

// Constructs and verifies an injective homomorphism of F into the
// r-subdivision of a complete graph of order O(|V(F)|). Dangling chains are
// padded up to the next multiple of r+1 before routing. Requires the chain
// condition; throws on inputs that cannot embed (short cycles relative to
// r+1, or parallel unit-length chains between the same branch pair).
CliqueEmbedding embed_into_subdivided_clique(const Graph& f, int r);

} // namespace countlab
