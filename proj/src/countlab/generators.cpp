#include "countlab/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace countlab {

namespace {
void require_positive(int k, const char* what) {
    if (k <= 0) throw std::invalid_argument(std::string(what) + ": parameter must be positive");
}
} // namespace

Graph make_clique(int k) {
    require_positive(k, "clique");
    std::vector<Edge> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
    return Graph(k, std::move(edges));
}

Graph make_independent(int k) {
    require_positive(k, "independent");
    return Graph(k, {});
}

Graph make_matching(int k) {
    require_positive(k, "matching");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.push_back({2 * i, 2 * i + 1});
    return Graph(2 * k, std::move(edges));
}

Graph make_path(int n) {
    require_positive(n, "path");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, std::move(edges));
}

Graph make_grid(int k) {
    require_positive(k, "grid");
    auto id = [k](int i, int j) { return i * k + j; };
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (j + 1 < k) edges.push_back({id(i, j), id(i, j + 1)});
            if (i + 1 < k) edges.push_back({id(i, j), id(i + 1, j)});
        }
    return Graph(k * k, std::move(edges));
}

Graph make_wall(int k, int ell) {
    require_positive(k, "wall");
    require_positive(ell, "wall");
    auto id = [ell](int i, int j) { return (i - 1) * ell + (j - 1); }; // 1-based (row, column)
    std::set<Edge> edges;
    auto add = [&edges](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j < ell; ++j) add(id(i, j), id(i, j + 1));
    for (int i = 1; i < k; ++i) {
        add(id(i, 1), id(i + 1, 1));
        add(id(i, ell), id(i + 1, ell));
    }
    for (int i = 1; i < k; ++i)
        for (int j = 1; j <= ell; ++j)
            if ((i + j) % 2 == 0) add(id(i, j), id(i + 1, j));
    return Graph(k * ell, std::vector<Edge>(edges.begin(), edges.end()));
}

} // namespace countlab
