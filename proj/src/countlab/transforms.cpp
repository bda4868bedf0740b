#include "countlab/transforms.hpp"

#include "countlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace countlab {

Graph subdivide_each(const Graph& g, const std::vector<int>& counts) {
    if (static_cast<int>(counts.size()) != g.edge_count())
        throw std::invalid_argument("subdivide: one interior count per edge required");
    for (int c : counts)
        if (c < 0) throw std::invalid_argument("subdivide: negative interior count");

    const int n = g.vertex_count();
    std::vector<Edge> edges;
    int next = n;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        int prev = u;
        for (int i = 0; i < counts[e]; ++i) {
            edges.push_back({std::min(prev, next), std::max(prev, next)});
            prev = next++;
        }
        edges.push_back({std::min(prev, v), std::max(prev, v)});
    }
    return Graph(next, std::move(edges));
}

Graph subdivide(const Graph& g, int r) {
    if (r < 0) throw std::invalid_argument("subdivide: negative r");
    return subdivide_each(g, std::vector<int>(g.edge_count(), r));
}

ColouredGraph lift_colouring_each(const ColouredGraph& cg, const std::vector<int>& pattern_counts) {
    const Graph& h = cg.pattern();
    const Graph& g = cg.host();
    const auto& c = cg.colour();
    Graph hs = subdivide_each(h, pattern_counts);

    std::vector<int> host_counts(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u1, u2] = g.edges()[e];
        int pe = h.edge_index(c[u1], c[u2]);
        if (pe < 0 || c[u1] == c[u2])
            throw std::invalid_argument("lift: colour map is not a homomorphism");
        host_counts[e] = pattern_counts[pe];
    }
    Graph gs = subdivide_each(g, host_counts);

    // Interior labels are consecutive per edge, offsets by prefix sums.
    std::vector<int> pat_base(h.edge_count() + 1, h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e) pat_base[e + 1] = pat_base[e] + pattern_counts[e];
    std::vector<int> host_base(g.edge_count() + 1, g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) host_base[e + 1] = host_base[e] + host_counts[e];

    std::vector<int> colour(gs.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) colour[v] = c[v];
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u1, u2] = g.edges()[e];
        int pe = h.edge_index(c[u1], c[u2]);
        const int len = host_counts[e];
        const int plo = std::min(c[u1], c[u2]);
        // Host interiors run from u1 (the smaller endpoint); align with the
        // pattern path, which runs from its lower-labelled endpoint.
        const bool forward = (c[u1] == plo);
        for (int i = 1; i <= len; ++i) {
            int host_vertex = host_base[e] + (i - 1);
            int pos = forward ? i : len + 1 - i;
            colour[host_vertex] = pat_base[pe] + (pos - 1);
        }
    }
    return ColouredGraph(std::move(hs), std::move(gs), std::move(colour));
}

ColouredGraph lift_colouring(const ColouredGraph& cg, int r) {
    if (r < 0) throw std::invalid_argument("lift: negative r");
    return lift_colouring_each(cg, std::vector<int>(cg.pattern().edge_count(), r));
}

ColouredGraph tensor(const ColouredGraph& a, const ColouredGraph& b) {
    if (!(a.pattern() == b.pattern()))
        throw std::invalid_argument("tensor: factors must share the pattern");
    const Graph& g1 = a.host();
    const Graph& g2 = b.host();

    std::vector<std::pair<int, int>> verts; // sorted pair order by construction
    std::vector<std::vector<int>> id(g1.vertex_count(), std::vector<int>(g2.vertex_count(), -1));
    for (int v1 = 0; v1 < g1.vertex_count(); ++v1)
        for (int v2 = 0; v2 < g2.vertex_count(); ++v2)
            if (a.colour_of(v1) == b.colour_of(v2)) {
                id[v1][v2] = static_cast<int>(verts.size());
                verts.push_back({v1, v2});
            }

    std::vector<Edge> edges;
    for (const auto& [u1, v1] : g1.edges())
        for (const auto& [u2, v2] : g2.edges()) {
            // Each host edge pair can align two ways.
            if (id[u1][u2] >= 0 && id[v1][v2] >= 0) {
                int x = id[u1][u2], y = id[v1][v2];
                edges.push_back({std::min(x, y), std::max(x, y)});
            }
            if (id[u1][v2] >= 0 && id[v1][u2] >= 0) {
                int x = id[u1][v2], y = id[v1][u2];
                edges.push_back({std::min(x, y), std::max(x, y)});
            }
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<int> colour(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) colour[i] = a.colour_of(verts[i].first);
    return ColouredGraph(a.pattern(), Graph(static_cast<int>(verts.size()), std::move(edges)),
                         std::move(colour));
}

EdgeSubset EdgeSubset::all(const Graph& h) {
    EdgeSubset s;
    s.indices.resize(h.edge_count());
    std::iota(s.indices.begin(), s.indices.end(), 0);
    return s;
}

ColouredGraph edge_subgraph(const Graph& h, const EdgeSubset& a) {
    std::vector<Edge> edges;
    int prev = -1;
    for (int e : a.indices) {
        if (e < 0 || e >= h.edge_count())
            throw std::invalid_argument("edge subgraph: index outside the pattern's edge set");
        if (e <= prev) throw std::invalid_argument("edge subgraph: indices must be strictly ascending");
        prev = e;
        edges.push_back(h.edges()[e]);
    }
    std::vector<int> id(h.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    return ColouredGraph(h, Graph(h.vertex_count(), std::move(edges)), std::move(id));
}

std::vector<EdgeSubset> enumerate_edge_subsets(const Graph& h, int edge_guard) {
    const int m = h.edge_count();
    if (m > edge_guard)
        throw GuardError("edge subsets: |E| = " + std::to_string(m) + " exceeds guard " +
                         std::to_string(edge_guard));
    std::vector<EdgeSubset> out;
    out.reserve(1u << m);
    // by (size, lexicographic)
    std::vector<int> pick;
    for (int k = 0; k <= m; ++k) {
        pick.assign(k, 0);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            out.push_back({pick});
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

} // namespace countlab
