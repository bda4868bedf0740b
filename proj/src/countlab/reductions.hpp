#pragma once

#include "countlab/bigint.hpp"
#include "countlab/coloured_graph.hpp"
#include "countlab/graph.hpp"
#include "countlab/guards.hpp"
#include "countlab/oracle.hpp"

#include <vector>

namespace countlab {

// Recovers #Hom((H,id) -> (G,c)) without ever counting such maps directly:
// lift (G,c) to the r-subdivision, query the oracle for colourful matching
// counts of the tensor with every fractured subdivided pattern, solve the
// transposed fracture system, and divide the coarsest coefficient by its
// closed-form weight. Every query satisfies the subdivided-clique chain
// condition at r. The colouring must be surjective and the pattern free of
// isolated vertices.
BigCount recover_cphom_via_matchings(const ColouredGraph& cg, int r, CountingOracle& oracle,
                                     const Guards& guards = {});

// Same recovery through vertex-colourful independent sets: queries are the
// tensors with every edge-subgraph of the subdivided pattern, which are
// edge-subgraphs of the lifted host by construction.
BigCount recover_cphom_via_indsets(const ColouredGraph& cg, int r, CountingOracle& oracle,
                                   const Guards& guards = {});

// Default oracles for the two pipelines (brute-force counters behind the
// matching pipeline's chain-condition promise, resp. the indset pipeline's
// edge-subgraph promise anchored at the lifted host).
CountingOracle matching_pipeline_oracle(int r, Guards guards = {});
CountingOracle indset_pipeline_oracle(Graph lifted_host, Guards guards = {});

// Inclusion-exclusion over edge-colour subsets: recovers the colourful
// matching count from an uncoloured matching oracle whose queries are all
// edge-subgraphs of the host.
BigCount colourful_from_uncoloured_matchings(const ColouredGraph& cg, CountingOracle& oracle);

// Inclusion-exclusion over vertex-colour subsets: recovers the colourful
// independent-set count from an uncoloured oracle; queries are induced (and
// hence ordinary) subgraphs of the host.
BigCount colourful_from_uncoloured_indsets(const ColouredGraph& cg, CountingOracle& oracle);

// Colour-prescribed homs from an uncoloured hom oracle: inclusion-exclusion
// yields the colourful hom count, which is |Aut(pattern)| times the
// colour-prescribed count; the division must be exact.
BigCount cphom_from_hom(const ColouredGraph& cg, CountingOracle& oracle, const Guards& guards = {});

struct WallLift {
    Graph wall;             // the wall with edge i subdivided divisors[i]*r times
    ColouredGraph coloured; // the host lifted along the same subdivisions
};

// Non-uniform subdivision lift for wall patterns: cg must be coloured by the
// height-k wall; edge i of the wall is subdivided divisors[i]*r times and
// every host edge follows its pattern edge. Colour-prescribed hom counts are
// preserved exactly.
WallLift wall_lift(int k, const std::vector<int>& divisors, int r, const ColouredGraph& cg);

} // namespace countlab
