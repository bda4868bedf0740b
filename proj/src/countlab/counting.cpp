#include "countlab/counting.hpp"

#include "countlab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace countlab {

namespace {

void check_pattern_guard(const Graph& pattern, int guard, const char* what) {
    if (pattern.vertex_count() > guard)
        throw GuardError(std::string(what) + ": pattern has " +
                         std::to_string(pattern.vertex_count()) + " vertices, guard is " +
                         std::to_string(guard));
}

// Greedy connected placement order: repeatedly pick the unplaced vertex with
// the most already-placed neighbours (ties by degree, then label).
std::vector<int> placement_order(const Graph& h) {
    const int n = h.vertex_count();
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    std::vector<int> placed_adj(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v]) continue;
            if (best < 0 || placed_adj[v] > placed_adj[best] ||
                (placed_adj[v] == placed_adj[best] && h.degree(v) > h.degree(best)))
                best = v;
        }
        order.push_back(best);
        placed[best] = 1;
        for (int u : h.neighbours(best)) ++placed_adj[u];
    }
    return order;
}

// Counts maps from `pattern` into the host where vertex v ranges over
// candidates[v] and every pattern edge must land on a host edge. When
// `injective` is set, images must be pairwise distinct; when `reflect` is
// set, pattern NON-edges must land on host non-edges. With `exists_only`
// the search stops after the first hit.
BigCount map_count(const Graph& pattern, const Graph& host,
                   const std::vector<const std::vector<int>*>& candidates, bool injective,
                   bool reflect, bool exists_only = false) {
    const int n = pattern.vertex_count();
    if (n == 0) return 1;
    auto order = placement_order(pattern);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    // earlier-placed neighbours / non-neighbours per position
    std::vector<std::vector<int>> earlier_nb(n), earlier_non(n);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        for (int u : pattern.neighbours(v))
            if (rank[u] < i) earlier_nb[i].push_back(u);
        if (reflect)
            for (int u = 0; u < n; ++u)
                if (u != v && rank[u] < i && !pattern.has_edge(u, v)) earlier_non[i].push_back(u);
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(host.vertex_count(), 0);
    BigCount total = 0;
    auto rec = [&](auto&& self, int i) -> bool { // true = stop the search
        if (i == n) {
            ++total;
            return exists_only;
        }
        int v = order[i];
        for (int cand : *candidates[v]) {
            if (injective && used[cand]) continue;
            bool ok = true;
            for (int u : earlier_nb[i])
                if (!host.has_edge(image[u], cand)) {
                    ok = false;
                    break;
                }
            if (ok && reflect)
                for (int u : earlier_non[i])
                    if (image[u] == cand || host.has_edge(image[u], cand)) {
                        ok = false;
                        break;
                    }
            if (!ok) continue;
            image[v] = cand;
            if (injective) used[cand] = 1;
            bool stop = self(self, i + 1);
            if (injective) used[cand] = 0;
            image[v] = -1;
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
    return total;
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.vertex_count());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void check_enum_guard(const BigCount& bound, unsigned long long guard, const char* what) {
    BigCount cap(static_cast<unsigned long>(guard));
    if (bound > cap)
        throw GuardError(std::string(what) + ": enumeration bound " + bound.get_str() +
                         " exceeds guard " + std::to_string(guard));
}

} // namespace

BigCount count_hom(const Graph& pattern, const Graph& host, int pattern_guard) {
    check_pattern_guard(pattern, pattern_guard, "count_hom");
    auto all = all_vertices(host);
    std::vector<const std::vector<int>*> cands(pattern.vertex_count(), &all);
    return map_count(pattern, host, cands, false, false);
}

BigCount coloured_hom_count(const ColouredGraph& src, const ColouredGraph& dst) {
    if (!(src.pattern() == dst.pattern()))
        throw std::invalid_argument("coloured hom count: sources must share the pattern");
    const Graph& f = src.host();
    std::vector<const std::vector<int>*> cands(f.vertex_count());
    for (int v = 0; v < f.vertex_count(); ++v) cands[v] = &dst.colour_class(src.colour_of(v));
    return map_count(f, dst.host(), cands, false, false);
}

BigCount count_cp_hom(const ColouredGraph& cg) {
    return coloured_hom_count(identity_coloured(cg.pattern()), cg);
}

BigCount injective_hom_count(const Graph& pattern, const Graph& host, int pattern_guard) {
    check_pattern_guard(pattern, pattern_guard, "injective_hom_count");
    auto all = all_vertices(host);
    std::vector<const std::vector<int>*> cands(pattern.vertex_count(), &all);
    return map_count(pattern, host, cands, true, false);
}

BigCount count_sub(const Graph& pattern, const Graph& host, int pattern_guard) {
    check_pattern_guard(pattern, pattern_guard, "count_sub");
    BigCount embeddings = injective_hom_count(pattern, host, pattern_guard);
    BigCount aut = automorphism_count(pattern, std::max(pattern_guard, pattern.vertex_count()));
    if (embeddings % aut != 0)
        throw ConsistencyError("count_sub: embedding count not divisible by automorphisms");
    return embeddings / aut;
}

BigCount count_indsub(const Graph& pattern, const Graph& host, int pattern_guard) {
    check_pattern_guard(pattern, pattern_guard, "count_indsub");
    // enumerate |V(pattern)|-subsets of the host and test isomorphism
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    if (k > n) return 0;
    BigCount total = 0;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<Edge> edges;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (host.has_edge(pick[i], pick[j])) edges.push_back({i, j});
        if (are_isomorphic(pattern, Graph(k, std::move(edges)))) ++total;
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

BigCount count_matchings(const Graph& g, int k, unsigned long long enum_guard) {
    if (k < 0) throw std::invalid_argument("count_matchings: negative k");
    if (k == 0) return 1;
    check_enum_guard(binomial(g.edge_count(), k), enum_guard, "count_matchings");
    const auto& edges = g.edges();
    std::vector<char> used(g.vertex_count(), 0);
    BigCount total = 0;
    auto rec = [&](auto&& self, int from, int need) -> void {
        if (need == 0) {
            ++total;
            return;
        }
        for (int e = from; e <= g.edge_count() - need; ++e) {
            auto [u, v] = edges[e];
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            self(self, e + 1, need - 1);
            used[u] = used[v] = 0;
        }
    };
    rec(rec, 0, k);
    return total;
}

BigCount count_indsets(const Graph& g, int k, unsigned long long enum_guard) {
    if (k < 0) throw std::invalid_argument("count_indsets: negative k");
    if (k == 0) return 1;
    check_enum_guard(binomial(g.vertex_count(), k), enum_guard, "count_indsets");
    std::vector<int> picked;
    BigCount total = 0;
    auto rec = [&](auto&& self, int from, int need) -> void {
        if (need == 0) {
            ++total;
            return;
        }
        for (int v = from; v <= g.vertex_count() - need; ++v) {
            bool ok = true;
            for (int u : picked)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            picked.push_back(v);
            self(self, v + 1, need - 1);
            picked.pop_back();
        }
    };
    rec(rec, 0, k);
    return total;
}

BigCount count_colourful_matchings(const ColouredGraph& cg) {
    const Graph& h = cg.pattern();
    const Graph& g = cg.host();
    const int k = h.edge_count();
    // host edges grouped by their pattern-edge colour
    std::vector<std::vector<Edge>> classes(k);
    for (const auto& [u, v] : g.edges()) {
        int pe = h.edge_index(cg.colour_of(u), cg.colour_of(v));
        classes[pe].push_back({u, v});
    }
    // fill colours smallest class first
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&classes](int a, int b) { return classes[a].size() < classes[b].size(); });
    std::vector<char> used(g.vertex_count(), 0);
    BigCount total = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            ++total;
            return;
        }
        for (const auto& [u, v] : classes[order[i]]) {
            if (used[u] || used[v]) continue;
            used[u] = used[v] = 1;
            self(self, i + 1);
            used[u] = used[v] = 0;
        }
    };
    rec(rec, 0);
    return total;
}

BigCount count_colourful_indsets(const ColouredGraph& cg) {
    const Graph& g = cg.host();
    const int k = cg.pattern().vertex_count();
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&cg](int a, int b) {
        return cg.colour_class(a).size() < cg.colour_class(b).size();
    });
    std::vector<int> picked;
    BigCount total = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == k) {
            ++total;
            return;
        }
        for (int v : cg.colour_class(order[i])) {
            bool ok = true;
            for (int u : picked)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            picked.push_back(v);
            self(self, i + 1);
            picked.pop_back();
        }
    };
    rec(rec, 0);
    return total;
}

BigCount automorphism_count(const Graph& h, int vertex_guard) {
    if (h.vertex_count() > vertex_guard)
        throw GuardError("automorphism_count: |V| = " + std::to_string(h.vertex_count()) +
                         " exceeds guard " + std::to_string(vertex_guard));
    auto all = all_vertices(h);
    std::vector<const std::vector<int>*> cands(h.vertex_count(), &all);
    return map_count(h, h, cands, true, true);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.vertex_count(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.vertex_count(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    auto all = all_vertices(b);
    std::vector<const std::vector<int>*> cands(a.vertex_count(), &all);
    return map_count(a, b, cands, true, true, true) > 0;
}

} // namespace countlab
