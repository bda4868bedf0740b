#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace countlab {

using Edge = std::pair<int, int>; // normalized: first < second

// Finite simple undirected graph on vertices {0..n-1}. Immutable after
// construction; edge list kept sorted, so equal graphs compare equal.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbours(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    // Position of {u,v} in edges(), or -1 if absent.
    int edge_index(int u, int v) const;
    bool has_isolated_vertex() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// FNV-1a over (n, sorted edge list); used for oracle audit logs.
std::string graph_hash(const Graph& g);

} // namespace countlab
