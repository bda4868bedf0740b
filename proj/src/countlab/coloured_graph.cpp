#include "countlab/coloured_graph.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace countlab {

ColouringCheck check_colouring(const Graph& pattern, const Graph& host,
                               const std::vector<int>& colour) {
    ColouringCheck out;
    if (static_cast<int>(colour.size()) != host.vertex_count()) return out;
    for (int c : colour)
        if (c < 0 || c >= pattern.vertex_count()) return out;
    out.is_hom = true;
    for (const auto& [u, v] : host.edges()) {
        if (!pattern.has_edge(colour[u], colour[v])) {
            out.is_hom = false;
            break;
        }
    }
    std::vector<char> hit(pattern.vertex_count(), 0);
    for (int c : colour) hit[c] = 1;
    out.is_surjective = out.is_hom;
    for (char h : hit)
        if (!h) out.is_surjective = false;
    return out;
}

ColouredGraph::ColouredGraph(Graph pattern, Graph host, std::vector<int> colour)
    : pattern_(std::move(pattern)), host_(std::move(host)), colour_(std::move(colour)) {
    auto chk = check_colouring(pattern_, host_, colour_);
    if (!chk.is_hom)
        throw std::invalid_argument("coloured graph: colour map is not a homomorphism into the pattern");
    surjective_ = chk.is_surjective;
    classes_.assign(pattern_.vertex_count(), {});
    for (int v = 0; v < host_.vertex_count(); ++v)
        classes_[colour_[v]].push_back(v);
}

ColouredGraph identity_coloured(const Graph& h) {
    std::vector<int> id(h.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    return ColouredGraph(h, h, id);
}

} // namespace countlab
