#pragma once

#include "countlab/coloured_graph.hpp"
#include "countlab/graph.hpp"

#include <cstdint>
#include <random>

namespace countlab {

// Deterministic RNG for reproducible property tests. mt19937_64 is fully
// specified, and the reductions below avoid the implementation-defined
// standard distributions, so outputs are stable across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }
    bool coin() { return (next() & 1) != 0; }
    // uniform in [0, n)
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); } // inclusive

private:
    std::mt19937_64 eng_;
};

// Erdos-Renyi with edge probability 1/2.
Graph random_graph(Rng& rng, int n);

// A host on `host_vertices` vertices carrying a surjective homomorphism into
// the pattern, sampled by rejection: draw a graph and a colouring until the
// pair is a surjective homomorphism.
ColouredGraph random_surjectively_coloured(Rng& rng, const Graph& pattern, int host_vertices);

} // namespace countlab
