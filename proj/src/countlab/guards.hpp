#pragma once

#include "countlab/errors.hpp"

#include <cstddef>
#include <string>

namespace countlab {

// Named size guards with their defaults. Every exact-search entry point takes
// the relevant guard; the CLI overrides them via repeated `--guard name=value`.
struct Guards {
    std::size_t fractures = 100000;            // cap on fracture count per pattern
    int pattern_vertices = 8;                  // brute-force counters (hom/sub/indsub)
    int edge_subsets = 12;                     // cap on |E(H)| for edge-subset matrices
    int treewidth_vertices = 18;               // exact treewidth
    int invariant_vertices = 20;               // exhaustive invariants
    int shallow_vertices = 9;                  // shallow-minor search
    int automorphism_vertices = 9;             // automorphism counting
    unsigned long long enumeration = 1ull << 32; // binomial cap for matching/indset enumeration
    unsigned long long dp_table = 1ull << 25;  // cap on bag-table size in the treewidth DP

    void set(const std::string& name, unsigned long long value) {
        if (name == "fractures") fractures = static_cast<std::size_t>(value);
        else if (name == "pattern") pattern_vertices = static_cast<int>(value);
        else if (name == "edges") edge_subsets = static_cast<int>(value);
        else if (name == "tw") treewidth_vertices = static_cast<int>(value);
        else if (name == "invariant") invariant_vertices = static_cast<int>(value);
        else if (name == "shallow") shallow_vertices = static_cast<int>(value);
        else if (name == "aut") automorphism_vertices = static_cast<int>(value);
        else if (name == "enum") enumeration = value;
        else if (name == "dp") dp_table = value;
        else throw Error("unknown guard name: " + name);
    }
};

} // namespace countlab
