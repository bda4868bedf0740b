#pragma once

#include "countlab/bigint.hpp"
#include "countlab/coloured_graph.hpp"
#include "countlab/graph.hpp"

namespace countlab {

// All counters are exact, pure, and guarded. The single enumeration kernel
// is coloured_hom_count; the colour-prescribed counter is its source=(H,id)
// special case. Backtracking places pattern vertices in a greedy connected
// order (most neighbours among already-placed first); the order affects
// pruning only, never the count.

// Homomorphisms from pattern to host (uncoloured).
BigCount count_hom(const Graph& pattern, const Graph& host, int pattern_guard = 8);

// Colour-respecting homomorphisms between two graphs coloured by the same
// pattern: maps phi with dst.colour(phi(v)) == src.colour(v).
BigCount coloured_hom_count(const ColouredGraph& src, const ColouredGraph& dst);

// #Hom((H,id_H) -> (G,c)); zero whenever c misses a pattern vertex.
BigCount count_cp_hom(const ColouredGraph& cg);

// Subgraph / induced-subgraph copies of the pattern in the host.
BigCount count_sub(const Graph& pattern, const Graph& host, int pattern_guard = 8);
BigCount count_indsub(const Graph& pattern, const Graph& host, int pattern_guard = 8);

// k-matchings / k-independent sets; enumeration capped by a binomial guard.
BigCount count_matchings(const Graph& g, int k, unsigned long long enum_guard = 1ull << 32);
BigCount count_indsets(const Graph& g, int k, unsigned long long enum_guard = 1ull << 32);

// Colourful counters: host edges are coloured by their pattern edge, host
// vertices by their pattern vertex; each colour must appear exactly once.
BigCount count_colourful_matchings(const ColouredGraph& cg);
BigCount count_colourful_indsets(const ColouredGraph& cg);

// Adjacency-preserving-and-reflecting bijections H -> H.
BigCount automorphism_count(const Graph& h, int vertex_guard = 9);

bool are_isomorphic(const Graph& a, const Graph& b);

// Injective homomorphisms pattern -> host (embeddings of subgraph copies).
BigCount injective_hom_count(const Graph& pattern, const Graph& host, int pattern_guard = 8);

} // namespace countlab
