#pragma once

#include "countlab/bigint.hpp"
#include "countlab/coloured_graph.hpp"
#include "countlab/graph.hpp"
#include "countlab/guards.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace countlab {

enum class OracleProblem {
    colourful_matchings,
    colourful_indsets,
    matchings,
    indsets,
    hom,
};

std::string to_string(OracleProblem p);

// A single oracle request. `graph` is the uncoloured carrier; colourful
// problems also carry the colouring, hom queries the fixed pattern.
// `embedding` (query vertex -> reference vertex) backs subgraph promises.
struct OracleQuery {
    OracleProblem problem;
    Graph graph;
    std::optional<ColouredGraph> coloured;
    std::optional<Graph> hom_pattern;
    std::vector<int> embedding;
    int k = 0;
};

// Declared promise classes for oracle queries.
struct SubdividedCliqueSubgraphs {
    int r; // queries must satisfy the branch-chain divisibility check at r
};
struct EdgeSubgraphsOf {
    Graph reference; // same vertex set, edge subset
};
struct SubgraphsOf {
    Graph reference; // embedding maps query edges onto reference edges
};
struct AnyGraph {};

using Promise = std::variant<AnyGraph, SubdividedCliqueSubgraphs, EdgeSubgraphsOf, SubgraphsOf>;

bool promise_holds(const Promise& promise, const OracleQuery& query);
std::string to_string(const Promise& promise);

struct OracleRecord {
    std::string hash;
    bool promise_ok = false;
    BigCount count;

    std::string to_line() const; // "<hash> <ok|violation> <count>"
};

// Wraps a counting callable behind a declared promise. Every query is
// validated and logged before being answered; a violating query is logged
// and then rejected. Reductions treat this as their only window onto the
// counting problem, which keeps them genuine oracle algorithms.
class CountingOracle {
public:
    using Counter = std::function<BigCount(const OracleQuery&)>;

    CountingOracle(OracleProblem problem, Promise promise, Counter counter)
        : problem_(problem), promise_(std::move(promise)), counter_(std::move(counter)) {}

    BigCount ask(const OracleQuery& query);

    OracleProblem problem() const { return problem_; }
    const Promise& promise() const { return promise_; }
    const std::vector<OracleRecord>& log() const { return log_; }
    void retain_queries(bool keep) { retain_ = keep; }
    const std::vector<OracleQuery>& retained() const { return retained_; }

private:
    OracleProblem problem_;
    Promise promise_;
    Counter counter_;
    std::vector<OracleRecord> log_;
    std::vector<OracleQuery> retained_;
    bool retain_ = false;
};

// Default oracle: the module's brute-force counter behind the promise.
CountingOracle brute_force_oracle(OracleProblem problem, Promise promise, Guards guards = {});

} // namespace countlab
