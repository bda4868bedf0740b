#include "countlab/shallow_minor.hpp"

#include "countlab/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace countlab {

namespace {

// radius of G[part] <= depth: some centre reaches every part vertex within
// depth steps inside the part; also certifies connectivity
bool part_ok(const Graph& g, const std::vector<int>& part, int depth) {
    for (int centre : part) {
        std::vector<int> dist(g.vertex_count(), -1);
        std::queue<int> q;
        dist[centre] = 0;
        q.push(centre);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (dist[x] == depth) continue;
            for (int y : g.neighbours(x)) {
                if (dist[y] >= 0) continue;
                if (!std::binary_search(part.begin(), part.end(), y)) continue;
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
        bool all = true;
        for (int v : part) all = all && dist[v] >= 0;
        if (all) return true;
    }
    return false;
}

// does F embed injectively (as a subgraph) into H?
bool subgraph_of(const Graph& f, const Graph& h) {
    if (f.vertex_count() > h.vertex_count() || f.edge_count() > h.edge_count()) return false;
    std::vector<int> img(f.vertex_count(), -1);
    std::vector<char> used(h.vertex_count(), 0);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == f.vertex_count()) return true;
        for (int cand = 0; cand < h.vertex_count(); ++cand) {
            if (used[cand] || h.degree(cand) < f.degree(v)) continue;
            bool ok = true;
            for (int u : f.neighbours(v)) {
                if (u < v && !h.has_edge(img[u], cand)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            img[v] = cand;
            used[cand] = 1;
            if (self(self, v + 1)) return true;
            used[cand] = 0;
            img[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

} // namespace

bool is_shallow_minor(const Graph& f, const Graph& g, int depth, int vertex_guard) {
    if (depth < 0) throw std::invalid_argument("shallow minor: negative depth");
    const int n = g.vertex_count();
    if (n > vertex_guard)
        throw GuardError("shallow minor: |V(G)| = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(vertex_guard));
    if (f.vertex_count() == 0) return true;
    if (f.vertex_count() > n) return false;

    // enumerate partitions of V(G) by restricted-growth strings
    std::vector<int> rgs(n, 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (blocks >= f.vertex_count()) {
            std::vector<std::vector<int>> parts(blocks);
            for (int v = 0; v < n; ++v) parts[rgs[v]].push_back(v);
            bool ok = true;
            for (const auto& part : parts)
                if (!part_ok(g, part, depth)) {
                    ok = false;
                    break;
                }
            if (ok) {
                std::set<Edge> cedges;
                for (const auto& [u, v] : g.edges())
                    if (rgs[u] != rgs[v])
                        cedges.insert({std::min(rgs[u], rgs[v]), std::max(rgs[u], rgs[v])});
                Graph contracted(blocks, std::vector<Edge>(cedges.begin(), cedges.end()));
                if (subgraph_of(f, contracted)) return true;
            }
        }
        // next partition
        int i = n - 1;
        while (i > 0) {
            int maxPrefix = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= maxPrefix) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return false;
}

} // namespace countlab
