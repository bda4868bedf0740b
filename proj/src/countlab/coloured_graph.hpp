#pragma once

#include "countlab/graph.hpp"

#include <vector>

namespace countlab {

struct ColouringCheck {
    bool is_hom = false;
    bool is_surjective = false;
};

// Validates an arbitrary vertex map host -> pattern: is it a homomorphism,
// and does its image cover every pattern vertex?
ColouringCheck check_colouring(const Graph& pattern, const Graph& host,
                               const std::vector<int>& colour);

// A host graph together with a homomorphism into a pattern graph. The
// constructor rejects non-homomorphisms; the surjectivity flag is computed
// from the map itself so it can never go stale. Immutable and thread-safe.
class ColouredGraph {
public:
    ColouredGraph(Graph pattern, Graph host, std::vector<int> colour);

    const Graph& pattern() const { return pattern_; }
    const Graph& host() const { return host_; }
    const std::vector<int>& colour() const { return colour_; }
    int colour_of(int host_vertex) const { return colour_[host_vertex]; }
    bool surjective() const { return surjective_; }
    // Host vertices coloured with the given pattern vertex, ascending.
    const std::vector<int>& colour_class(int pattern_vertex) const { return classes_[pattern_vertex]; }

    bool operator==(const ColouredGraph& other) const {
        return pattern_ == other.pattern_ && host_ == other.host_ && colour_ == other.colour_;
    }

private:
    Graph pattern_;
    Graph host_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> classes_;
    bool surjective_ = false;
};

// (H, id_H): the pattern coloured by itself via the identity.
ColouredGraph identity_coloured(const Graph& h);

} // namespace countlab
