#include "countlab/invariants.hpp"

#include "countlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace countlab {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }
    return adj;
}

// Exact max independent set over `avail`, branching on a max-degree pivot.
int max_independent(const std::vector<Mask>& adj, Mask avail) {
    if (avail == 0) return 0;
    int pivot = -1, pivot_deg = -1;
    for (Mask rest = avail; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        int d = std::popcount(adj[v] & avail);
        if (d > pivot_deg) {
            pivot_deg = d;
            pivot = v;
        }
    }
    if (pivot_deg == 0) return std::popcount(avail);
    Mask without = avail & ~(Mask{1} << pivot);
    int skip = max_independent(adj, without);
    int take = 1 + max_independent(adj, without & ~adj[pivot]);
    return std::max(skip, take);
}

int max_clique(const Graph& g, const std::vector<Mask>& adj, Mask full) {
    const int n = g.vertex_count();
    std::vector<Mask> cadj(n);
    for (int v = 0; v < n; ++v) cadj[v] = full & ~adj[v] & ~(Mask{1} << v);
    return max_independent(cadj, full);
}

int max_matching(const Graph& g, const std::vector<Mask>& adj, Mask full) {
    std::unordered_map<Mask, int> memo;
    auto rec = [&](auto&& self, Mask avail) -> int {
        if (avail == 0) return 0;
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(avail);
        Mask rest = avail & ~(Mask{1} << v);
        int best = self(self, rest); // v stays unmatched
        for (Mask nbs = adj[v] & rest; nbs;) {
            int u = std::countr_zero(nbs);
            nbs &= nbs - 1;
            best = std::max(best, 1 + self(self, rest & ~(Mask{1} << u)));
        }
        memo.emplace(avail, best);
        return best;
    };
    (void)g;
    return rec(rec, full);
}

// Largest k with a k-by-k biclique subgraph: grow one side A vertex by
// vertex, keeping the common neighbourhood of A; the other side is any
// |A|-subset of it. Neither side needs to be independent here.
int max_biclique(const Graph& g, const std::vector<Mask>& adj) {
    const int n = g.vertex_count();
    if (g.edge_count() == 0) return 0;
    int best = 0;
    auto rec = [&](auto&& self, int from, Mask a, int asize, Mask common) -> void {
        if (asize > 0) best = std::max(best, std::min(asize, std::popcount(common & ~a)));
        for (int v = from; v < n; ++v) {
            Mask nc = asize == 0 ? adj[v] : (common & adj[v]);
            Mask na = a | (Mask{1} << v);
            int ceiling = std::min(asize + 1 + (n - 1 - v), std::popcount(nc & ~na));
            if (ceiling <= best) continue;
            self(self, v + 1, na, asize + 1, nc);
        }
    };
    rec(rec, 0, 0, 0, 0);
    return best;
}

int max_induced_biclique(const Graph& g, const std::vector<Mask>& adj) {
    const int n = g.vertex_count();
    if (g.edge_count() == 0) return 0;
    int best = 0;
    auto rec = [&](auto&& self, int from, Mask a, int asize, Mask common) -> void {
        if (asize > 0) {
            Mask cand = common & ~a;
            if (std::min(asize, std::popcount(cand)) > best)
                best = std::max(best, std::min(asize, max_independent(adj, cand)));
        }
        for (int v = from; v < n; ++v) {
            if (a & adj[v]) continue; // both sides stay independent
            Mask nc = asize == 0 ? adj[v] : (common & adj[v]);
            Mask na = a | (Mask{1} << v);
            int ceiling = std::min(asize + 1 + (n - 1 - v), std::popcount(nc & ~na));
            if (ceiling <= best) continue;
            self(self, v + 1, na, asize + 1, nc);
        }
    };
    rec(rec, 0, 0, 0, 0);
    return best;
}

int max_induced_matching(const Graph& g) {
    // max independent set in the edge-conflict graph: two edges conflict
    // when they share a vertex or an edge joins their endpoints
    const int m = g.edge_count();
    if (m == 0) return 0;
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = g.edges()[i];
            auto [c, d] = g.edges()[j];
            bool bad = a == c || a == d || b == c || b == d || g.has_edge(a, c) ||
                       g.has_edge(a, d) || g.has_edge(b, c) || g.has_edge(b, d);
            conflict[i][j] = conflict[j][i] = bad;
        }
    int best = 0;
    auto rec = [&](auto&& self, const std::vector<int>& cand, int size) -> void {
        best = std::max(best, size);
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (size + static_cast<int>(cand.size() - i) <= best) return;
            std::vector<int> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (!conflict[cand[i]][cand[j]]) next.push_back(cand[j]);
            self(self, next, size + 1);
        }
    };
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    rec(rec, all, 0);
    return best;
}

} // namespace

InvariantKind invariant_kind_from_name(const std::string& name) {
    if (name == "omega" || name == "clique") return InvariantKind::clique;
    if (name == "alpha" || name == "independence") return InvariantKind::independence;
    if (name == "beta" || name == "biclique") return InvariantKind::biclique;
    if (name == "beta-ind" || name == "induced-biclique") return InvariantKind::induced_biclique;
    if (name == "matching" || name == "m") return InvariantKind::matching;
    if (name == "matching-ind" || name == "induced-matching") return InvariantKind::induced_matching;
    throw std::invalid_argument("unknown invariant: " + name);
}

std::string to_string(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::clique: return "omega";
        case InvariantKind::independence: return "alpha";
        case InvariantKind::biclique: return "beta";
        case InvariantKind::induced_biclique: return "beta-ind";
        case InvariantKind::matching: return "matching";
        case InvariantKind::induced_matching: return "matching-ind";
    }
    return "?";
}

int invariant(const Graph& g, InvariantKind kind, int vertex_guard) {
    const int cap = std::min(vertex_guard, 32);
    if (g.vertex_count() > cap)
        throw GuardError("invariant: |V| = " + std::to_string(g.vertex_count()) +
                         " exceeds guard " + std::to_string(cap));
    auto adj = adjacency_masks(g);
    Mask full = g.vertex_count() == 32 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
    switch (kind) {
        case InvariantKind::clique: return max_clique(g, adj, full);
        case InvariantKind::independence: return max_independent(adj, full);
        case InvariantKind::biclique: return max_biclique(g, adj);
        case InvariantKind::induced_biclique: return max_induced_biclique(g, adj);
        case InvariantKind::matching: return max_matching(g, adj, full);
        case InvariantKind::induced_matching: return max_induced_matching(g);
    }
    throw Error("invariant: unreachable");
}

} // namespace countlab
