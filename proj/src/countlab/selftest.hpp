#pragma once

#include "countlab/graph.hpp"
#include "countlab/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace countlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Triangle with a pendant edge.
Graph paw_graph();

// Uniform random labelled tree on n >= 1 vertices.
Graph random_tree(Rng& rng, int n);

// All graphs with 1..max_edges edges and no isolated vertices, one per
// isomorphism class, built by incremental edge extension.
std::vector<Graph> graphs_without_isolated_vertices(int max_edges);

// The ten acceptance criteria; one result per criterion, in order.
std::vector<CheckResult> acceptance_suite(std::uint64_t seed);

// Per-module property suites for the verify command.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed, int trials);

} // namespace countlab
