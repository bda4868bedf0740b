#include "countlab/chains.hpp"

#include "countlab/errors.hpp"
#include "countlab/generators.hpp"
#include "countlab/transforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace countlab {

namespace {

struct ChainDecomposition {
    // Vertex sequences p_0..p_L covering every edge exactly once.
    std::vector<std::vector<int>> open_chains; // endpoints of degree != 2
    std::vector<std::vector<int>> cycles;      // 2-regular components, p_0 repeated at the end
    std::vector<int> isolated;
};

ChainDecomposition decompose_chains(const Graph& f) {
    ChainDecomposition out;
    std::vector<char> used(f.edge_count(), 0);

    auto walk = [&](int start, int next) {
        std::vector<int> path = {start, next};
        used[f.edge_index(start, next)] = 1;
        int prev = start, cur = next;
        while (f.degree(cur) == 2 && cur != start) {
            int nb = f.neighbours(cur)[0] == prev ? f.neighbours(cur)[1] : f.neighbours(cur)[0];
            used[f.edge_index(cur, nb)] = 1;
            path.push_back(nb);
            prev = cur;
            cur = nb;
        }
        return path;
    };

    for (int v = 0; v < f.vertex_count(); ++v) {
        if (f.degree(v) == 2) continue;
        if (f.degree(v) == 0) {
            out.isolated.push_back(v);
            continue;
        }
        for (int nb : f.neighbours(v)) {
            if (used[f.edge_index(v, nb)]) continue;
            out.open_chains.push_back(walk(v, nb));
        }
    }
    // leftovers are 2-regular components
    for (int e = 0; e < f.edge_count(); ++e) {
        if (used[e]) continue;
        auto [u, v] = f.edges()[e];
        out.cycles.push_back(walk(u, v));
    }
    return out;
}

} // namespace

bool chain_condition_check(const Graph& f, int r) {
    if (r == 0) return true;
    auto dec = decompose_chains(f);
    for (const auto& path : dec.open_chains) {
        int x = path.front(), y = path.back();
        if (f.degree(x) >= 3 && f.degree(y) >= 3 && x != y) {
            if ((static_cast<int>(path.size()) - 1) % (r + 1) != 0) return false;
        }
    }
    return true;
}

CliqueEmbedding embed_into_subdivided_clique(const Graph& f, int r) {
    if (r < 0) throw std::invalid_argument("embed: negative r");
    const int n = f.vertex_count();

    if (r == 0) {
        CliqueEmbedding out;
        out.clique_order = std::max(1, n);
        out.mapping.resize(n);
        std::iota(out.mapping.begin(), out.mapping.end(), 0);
        return out;
    }
    if (!chain_condition_check(f, r))
        throw std::invalid_argument("embed: chain condition violated");

    auto dec = decompose_chains(f);
    std::vector<int> clique_of(n, -1);
    int next_clique = 0;
    for (int v = 0; v < n; ++v)
        if (f.degree(v) >= 3) clique_of[v] = next_clique++;

    struct Route {
        std::vector<int> path;  // F-vertices p_0..p_L (cycles repeat p_0 at the end)
        std::vector<int> waypoints; // clique vertices z_0..z_t spaced r+1 apart
    };
    std::vector<Route> routes;
    std::set<Edge> used_clique_edges;

    auto claim = [&used_clique_edges](int a, int b) {
        Edge e{std::min(a, b), std::max(a, b)};
        if (!used_clique_edges.insert(e).second)
            throw std::invalid_argument("embed: two chains need the same clique edge");
    };

    auto add_route = [&](std::vector<int> path, std::vector<int> waypoints) {
        for (std::size_t q = 0; q + 1 < waypoints.size(); ++q) claim(waypoints[q], waypoints[q + 1]);
        routes.push_back({std::move(path), std::move(waypoints)});
    };

    for (auto& path : dec.open_chains) {
        const int len = static_cast<int>(path.size()) - 1;
        int x = path.front(), y = path.back();
        bool bx = f.degree(x) >= 3, by = f.degree(y) >= 3;
        if (bx && by) {
            if (len % (r + 1) != 0)
                throw std::invalid_argument("embed: chain condition violated");
            const int t = len / (r + 1);
            if (x == y && t < 3)
                throw std::invalid_argument("embed: cycle through a branch vertex shorter than 3(r+1)");
            std::vector<int> z;
            z.push_back(clique_of[x]);
            for (int i = 1; i < t; ++i) z.push_back(next_clique++);
            z.push_back(clique_of[y]);
            add_route(std::move(path), std::move(z));
        } else {
            if (by && !bx) std::reverse(path.begin(), path.end()); // branch end first, if any
            const int t = (len + r) / (r + 1); // pad the dangling end to a multiple of r+1
            std::vector<int> z;
            z.push_back(f.degree(path.front()) >= 3 ? clique_of[path.front()] : next_clique++);
            for (int i = 0; i < t; ++i) z.push_back(next_clique++);
            add_route(std::move(path), std::move(z));
        }
    }
    for (auto& cyc : dec.cycles) {
        const int len = static_cast<int>(cyc.size()) - 1;
        if (len % (r + 1) != 0)
            throw std::invalid_argument("embed: cycle length not divisible by r+1");
        const int t = len / (r + 1);
        if (t < 3) throw std::invalid_argument("embed: cycle shorter than 3(r+1)");
        std::vector<int> z;
        for (int i = 0; i < t; ++i) z.push_back(next_clique++);
        z.push_back(z.front());
        add_route(std::move(cyc), std::move(z));
    }

    std::vector<int> mapping(n, -1);
    for (int v : dec.isolated) mapping[v] = next_clique++;

    const int m = std::max(1, next_clique);
    Graph clique = make_clique(m);
    Graph target = subdivide(clique, r);

    // i-th interior vertex (1-based) along the subdivided edge, walking a -> b
    auto path_vertex = [&](int a, int b, int i) {
        int idx = clique.edge_index(a, b);
        return a < b ? m + idx * r + (i - 1) : m + idx * r + (r - i);
    };

    for (const auto& route : routes) {
        for (std::size_t j = 0; j < route.path.size(); ++j) {
            const int q = static_cast<int>(j) / (r + 1);
            const int s = static_cast<int>(j) % (r + 1);
            int image = s == 0 ? route.waypoints[q]
                               : path_vertex(route.waypoints[q], route.waypoints[q + 1], s);
            int v = route.path[j];
            if (mapping[v] != -1 && mapping[v] != image)
                throw ConsistencyError("embed: conflicting images for a chain endpoint");
            mapping[v] = image;
        }
    }

    // independent verification: injective homomorphism into the target
    std::set<int> seen;
    for (int v = 0; v < n; ++v) {
        if (mapping[v] < 0 || mapping[v] >= target.vertex_count())
            throw ConsistencyError("embed: unmapped or out-of-range vertex");
        if (!seen.insert(mapping[v]).second) throw ConsistencyError("embed: mapping not injective");
    }
    for (const auto& [u, v] : f.edges())
        if (!target.has_edge(mapping[u], mapping[v]))
            throw ConsistencyError("embed: mapping is not a homomorphism");

    return {m, std::move(mapping)};
}

} // namespace countlab
