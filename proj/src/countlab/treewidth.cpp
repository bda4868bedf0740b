#include "countlab/treewidth.hpp"

#include "countlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>

namespace countlab {

namespace {

using Mask = std::uint32_t;

// Vertices outside S∪{v} reachable from v by paths with interior inside S.
Mask reach_through(const std::vector<Mask>& adj, Mask s, int v) {
    Mask seen = adj[v];
    Mask frontier = adj[v] & s;
    while (frontier) {
        int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        Mask fresh = adj[u] & ~seen;
        seen |= fresh;
        frontier |= fresh & s;
    }
    return seen & ~s & ~(Mask{1} << v);
}

} // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

void validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int b = static_cast<int>(td.bags.size());
    if (b == 0) throw std::invalid_argument("tree decomposition: no bags");
    if (static_cast<int>(td.tree_edges.size()) != b - 1)
        throw std::invalid_argument("tree decomposition: edge count does not form a tree");
    std::vector<std::vector<int>> tadj(b);
    for (auto [x, y] : td.tree_edges) {
        if (x < 0 || y < 0 || x >= b || y >= b || x == y)
            throw std::invalid_argument("tree decomposition: bad tree edge");
        tadj[x].push_back(y);
        tadj[y].push_back(x);
    }
    // connectivity of the tree itself
    std::vector<char> seen(b, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : tadj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++cnt;
                q.push(y);
            }
    }
    if (cnt != b) throw std::invalid_argument("tree decomposition: tree is disconnected");

    for (const auto& bag : td.bags) {
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw std::invalid_argument("tree decomposition: bags must be sorted vertex sets");
        for (int v : bag)
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("tree decomposition: bag vertex out of range");
    }

    auto bag_has = [&td](int i, int v) {
        const auto& bag = td.bags[i];
        return std::binary_search(bag.begin(), bag.end(), v);
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        int home = -1;
        for (int i = 0; i < b && home < 0; ++i)
            if (bag_has(i, v)) home = i;
        if (home < 0)
            throw std::invalid_argument("tree decomposition: vertex " + std::to_string(v) +
                                        " not covered by any bag");
        // subtree connectivity: BFS within bags containing v must reach all of them
        std::vector<char> vis(b, 0);
        std::queue<int> qq;
        qq.push(home);
        vis[home] = 1;
        int reached = 1, total = 0;
        for (int i = 0; i < b; ++i) total += bag_has(i, v);
        while (!qq.empty()) {
            int x = qq.front();
            qq.pop();
            for (int y : tadj[x])
                if (!vis[y] && bag_has(y, v)) {
                    vis[y] = 1;
                    ++reached;
                    qq.push(y);
                }
        }
        if (reached != total)
            throw std::invalid_argument("tree decomposition: bags containing vertex " +
                                        std::to_string(v) + " do not form a subtree");
    }
    for (const auto& [u, v] : g.edges()) {
        bool ok = false;
        for (int i = 0; i < b && !ok; ++i) ok = bag_has(i, u) && bag_has(i, v);
        if (!ok)
            throw std::invalid_argument("tree decomposition: edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} not inside any bag");
    }
}

std::pair<int, TreeDecomposition> treewidth_exact(const Graph& g, int vertex_guard) {
    const int n = g.vertex_count();
    const int cap = std::min(vertex_guard, 25);
    if (n > cap)
        throw GuardError("treewidth: |V| = " + std::to_string(n) + " exceeds guard " +
                         std::to_string(cap));
    if (n == 0) return {-1, TreeDecomposition{{{}}, {}}};

    std::vector<Mask> adj(n, 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u] |= Mask{1} << v;
        adj[v] |= Mask{1} << u;
    }

    // tw[S] = least achievable width when the vertices of S are eliminated
    // first; the vertex eliminated last among S contributes |reach| at that
    // point. tw[full] is the treewidth.
    const std::size_t states = std::size_t{1} << n;
    std::vector<std::uint8_t> tw(states, 0);
    for (Mask s = 1; s < states; ++s) {
        int best = n; // width never exceeds n-1
        for (Mask rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            Mask without = s & ~(Mask{1} << v);
            int cost = std::popcount(reach_through(adj, without, v));
            int cand = std::max<int>(tw[without], cost);
            best = std::min(best, cand);
        }
        tw[s] = static_cast<std::uint8_t>(best);
    }
    const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    const int width = tw[full];

    // recover an optimal elimination order back to front
    std::vector<int> order(n);
    Mask s = full;
    for (int pos = n - 1; pos >= 0; --pos) {
        for (Mask rest = s; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            Mask without = s & ~(Mask{1} << v);
            int cost = std::popcount(reach_through(adj, without, v));
            if (std::max<int>(tw[without], cost) == tw[s]) {
                order[pos] = v;
                s = without;
                break;
            }
        }
    }

    // bags from the elimination order: fill-in neighbours eliminated later
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Mask> fill = adj;
    std::vector<std::vector<int>> bags(n);
    std::vector<int> later_first(n, -1); // earliest-eliminated later neighbour
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        Mask later = 0;
        for (Mask rest = fill[v]; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (pos[u] > i) later |= Mask{1} << u;
        }
        std::vector<int> bag = {v};
        for (Mask rest = later; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            bag.push_back(u);
            if (later_first[i] < 0 || pos[u] < later_first[i]) later_first[i] = pos[u];
        }
        std::sort(bag.begin(), bag.end());
        bags[i] = std::move(bag);
        // make later neighbours a clique
        std::vector<int> ls;
        for (Mask rest = later; rest;) {
            int u = std::countr_zero(rest);
            rest &= rest - 1;
            ls.push_back(u);
        }
        for (std::size_t a = 0; a < ls.size(); ++a)
            for (std::size_t b2 = a + 1; b2 < ls.size(); ++b2) {
                fill[ls[a]] |= Mask{1} << ls[b2];
                fill[ls[b2]] |= Mask{1} << ls[a];
            }
    }
    std::vector<std::pair<int, int>> tedges;
    int prev_root = -1;
    for (int i = 0; i < n; ++i) {
        if (later_first[i] >= 0) {
            tedges.push_back({i, later_first[i]});
        } else {
            // roots of components: chain them (their bags share no vertices)
            if (prev_root >= 0) tedges.push_back({prev_root, i});
            prev_root = i;
        }
    }

    TreeDecomposition td{std::move(bags), std::move(tedges)};
    validate_tree_decomposition(g, td);
    if (td.width() != width)
        throw ConsistencyError("treewidth: decomposition width disagrees with the DP value");
    return {width, std::move(td)};
}

} // namespace countlab
