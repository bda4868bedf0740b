#include "countlab/rng.hpp"

#include "countlab/errors.hpp"

#include <stdexcept>

namespace countlab {

Graph random_graph(Rng& rng, int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

ColouredGraph random_surjectively_coloured(Rng& rng, const Graph& pattern, int host_vertices) {
    if (host_vertices < pattern.vertex_count())
        throw std::invalid_argument("random coloured host: too few vertices for surjectivity");
    for (int attempt = 0; attempt < 1000000; ++attempt) {
        Graph host = random_graph(rng, host_vertices);
        std::vector<int> colour(host_vertices);
        for (int v = 0; v < host_vertices; ++v) colour[v] = rng.below(pattern.vertex_count());
        auto chk = check_colouring(pattern, host, colour);
        if (chk.is_hom && chk.is_surjective)
            return ColouredGraph(pattern, std::move(host), std::move(colour));
    }
    throw Error("random coloured host: rejection sampling failed to converge");
}

} // namespace countlab
