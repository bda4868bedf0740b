#include "countlab/oracle.hpp"

#include "countlab/chains.hpp"
#include "countlab/counting.hpp"
#include "countlab/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace countlab {

std::string to_string(OracleProblem p) {
    switch (p) {
        case OracleProblem::colourful_matchings: return "colourful-matchings";
        case OracleProblem::colourful_indsets: return "colourful-indsets";
        case OracleProblem::matchings: return "matchings";
        case OracleProblem::indsets: return "indsets";
        case OracleProblem::hom: return "hom";
    }
    return "?";
}

bool promise_holds(const Promise& promise, const OracleQuery& query) {
    struct Visitor {
        const OracleQuery& q;
        bool operator()(const AnyGraph&) const { return true; }
        bool operator()(const SubdividedCliqueSubgraphs& p) const {
            return chain_condition_check(q.graph, p.r);
        }
        bool operator()(const EdgeSubgraphsOf& p) const {
            if (q.graph.vertex_count() != p.reference.vertex_count()) return false;
            for (const auto& [u, v] : q.graph.edges())
                if (!p.reference.has_edge(u, v)) return false;
            return true;
        }
        bool operator()(const SubgraphsOf& p) const {
            if (static_cast<int>(q.embedding.size()) != q.graph.vertex_count()) return false;
            std::vector<char> used(p.reference.vertex_count(), 0);
            for (int img : q.embedding) {
                if (img < 0 || img >= p.reference.vertex_count() || used[img]) return false;
                used[img] = 1;
            }
            for (const auto& [u, v] : q.graph.edges())
                if (!p.reference.has_edge(q.embedding[u], q.embedding[v])) return false;
            return true;
        }
    };
    return std::visit(Visitor{query}, promise);
}

std::string to_string(const Promise& promise) {
    struct Visitor {
        std::string operator()(const AnyGraph&) const { return "any graph"; }
        std::string operator()(const SubdividedCliqueSubgraphs& p) const {
            return "subgraphs of " + std::to_string(p.r) + "-subdivided cliques";
        }
        std::string operator()(const EdgeSubgraphsOf&) const {
            return "edge-subgraphs of the reference host";
        }
        std::string operator()(const SubgraphsOf&) const { return "subgraphs of the reference host"; }
    };
    return std::visit(Visitor{}, promise);
}

std::string OracleRecord::to_line() const {
    return hash + (promise_ok ? " ok " : " violation ") + count.get_str();
}

BigCount CountingOracle::ask(const OracleQuery& query) {
    bool ok = promise_holds(promise_, query);
    if (!ok) {
        log_.push_back({graph_hash(query.graph), false, BigCount(0)});
        throw PromiseError("oracle query violates the promise: " + to_string(promise_));
    }
    BigCount result = counter_(query);
    log_.push_back({graph_hash(query.graph), true, result});
    if (retain_) retained_.push_back(query);
    return result;
}

CountingOracle brute_force_oracle(OracleProblem problem, Promise promise, Guards guards) {
    CountingOracle::Counter counter;
    switch (problem) {
        case OracleProblem::colourful_matchings:
            counter = [](const OracleQuery& q) {
                if (!q.coloured) throw std::invalid_argument("oracle: colouring required");
                return count_colourful_matchings(*q.coloured);
            };
            break;
        case OracleProblem::colourful_indsets:
            counter = [](const OracleQuery& q) {
                if (!q.coloured) throw std::invalid_argument("oracle: colouring required");
                return count_colourful_indsets(*q.coloured);
            };
            break;
        case OracleProblem::matchings:
            counter = [guards](const OracleQuery& q) {
                return count_matchings(q.graph, q.k, guards.enumeration);
            };
            break;
        case OracleProblem::indsets:
            counter = [guards](const OracleQuery& q) {
                return count_indsets(q.graph, q.k, guards.enumeration);
            };
            break;
        case OracleProblem::hom:
            counter = [guards](const OracleQuery& q) {
                if (!q.hom_pattern) throw std::invalid_argument("oracle: pattern required");
                return count_hom(*q.hom_pattern, q.graph, guards.pattern_vertices);
            };
            break;
    }
    return CountingOracle(problem, std::move(promise), std::move(counter));
}

} // namespace countlab
