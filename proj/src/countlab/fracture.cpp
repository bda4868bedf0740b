#include "countlab/fracture.hpp"

#include "countlab/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace countlab {

namespace {

std::vector<std::vector<int>> incident_edge_indices(const Graph& h) {
    std::vector<std::vector<int>> inc(h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        inc[h.edges()[e].first].push_back(e);
        inc[h.edges()[e].second].push_back(e);
    }
    return inc;
}

void canonicalize(std::vector<std::vector<int>>& partition) {
    for (auto& block : partition) std::sort(block.begin(), block.end());
    std::sort(partition.begin(), partition.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

// Partitions of items[0..d-1] as restricted-growth strings in lexicographic
// order; the all-zeros string (a single block) comes first.
std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& items) {
    std::vector<std::vector<std::vector<int>>> out;
    const int d = static_cast<int>(items.size());
    if (d == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> rgs(d, 0);
    while (true) {
        int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        std::vector<std::vector<int>> part(nblocks);
        for (int i = 0; i < d; ++i) part[rgs[i]].push_back(items[i]);
        out.push_back(std::move(part));
        // next RGS in lex order
        int i = d - 1;
        while (i > 0) {
            int maxPrefix = *std::max_element(rgs.begin(), rgs.begin() + i);
            if (rgs[i] <= maxPrefix) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    return out;
}

BigCount bell_number(int d) {
    // Bell triangle
    std::vector<BigCount> row = {1};
    for (int i = 1; i <= d; ++i) {
        std::vector<BigCount> next(i + 1);
        next[0] = row.back();
        for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
        row = std::move(next);
    }
    return row[0];
}

} // namespace

Fracture::Fracture(const Graph& h, std::vector<std::vector<std::vector<int>>> blocks)
    : blocks_(std::move(blocks)) {
    if (static_cast<int>(blocks_.size()) != h.vertex_count())
        throw std::invalid_argument("fracture: one partition per pattern vertex required");
    auto inc = incident_edge_indices(h);
    for (int v = 0; v < h.vertex_count(); ++v) {
        std::vector<int> seen;
        for (auto& block : blocks_[v]) {
            if (block.empty()) throw std::invalid_argument("fracture: empty block");
            for (int e : block) seen.push_back(e);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("fracture: blocks overlap");
        if (seen != inc[v])
            throw std::invalid_argument("fracture: blocks do not cover the incident edges");
        canonicalize(blocks_[v]);
    }
}

Fracture Fracture::coarsest(const Graph& h) {
    Fracture f;
    auto inc = incident_edge_indices(h);
    f.blocks_.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
        if (!inc[v].empty()) f.blocks_[v].push_back(inc[v]);
    return f;
}

int Fracture::block_of(int v, int edge_index) const {
    for (int b = 0; b < static_cast<int>(blocks_[v].size()); ++b)
        if (std::binary_search(blocks_[v][b].begin(), blocks_[v][b].end(), edge_index)) return b;
    return -1;
}

bool Fracture::is_coarsest() const {
    for (const auto& part : blocks_)
        if (part.size() > 1) return false;
    return true;
}

std::string to_string(const Fracture& f, const Graph& h) {
    std::string out;
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (v) out += ' ';
        out += std::to_string(v) + ":{";
        const auto& part = f.blocks(v);
        for (std::size_t b = 0; b < part.size(); ++b) {
            if (b) out += '|';
            for (std::size_t i = 0; i < part[b].size(); ++i) {
                if (i) out += ',';
                const auto& e = h.edges()[part[b][i]];
                out += std::to_string(e.first) + "-" + std::to_string(e.second);
            }
        }
        out += '}';
    }
    return out;
}

BigCount fracture_count(const Graph& h) {
    BigCount total = 1;
    for (int v = 0; v < h.vertex_count(); ++v) total *= bell_number(h.degree(v));
    return total;
}

std::vector<Fracture> enumerate_fractures(const Graph& h, std::size_t guard) {
    BigCount total = fracture_count(h);
    if (total > BigCount(static_cast<unsigned long>(guard)))
        throw GuardError("fracture enumeration: " + total.get_str() +
                         " fractures exceed guard " + std::to_string(guard));

    auto inc = incident_edge_indices(h);
    const int n = h.vertex_count();
    std::vector<std::vector<std::vector<std::vector<int>>>> choices(n);
    for (int v = 0; v < n; ++v) {
        choices[v] = set_partitions(inc[v]);
        for (auto& part : choices[v]) canonicalize(part);
    }

    std::vector<Fracture> out;
    out.reserve(total.get_ui());
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Fracture f;
        f.blocks_.resize(n);
        for (int v = 0; v < n; ++v) f.blocks_[v] = choices[v][idx[v]];
        out.push_back(std::move(f));
        int v = n - 1;
        while (v >= 0) {
            if (++idx[v] < choices[v].size()) break;
            idx[v] = 0;
            --v;
        }
        if (v < 0) break;
    }
    return out;
}

Fracture finest_fracture(const Graph& h) {
    std::vector<std::vector<std::vector<int>>> blocks(h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        blocks[h.edges()[e].first].push_back({e});
        blocks[h.edges()[e].second].push_back({e});
    }
    return Fracture(h, std::move(blocks));
}

ColouredGraph fractured_graph(const Graph& h, const Fracture& rho) {
    if (rho.vertex_count() != h.vertex_count())
        throw std::invalid_argument("fractured graph: fracture does not match the pattern");
    // id of (v, block b): vertices ordered by (v, block rank)
    std::vector<int> base(h.vertex_count() + 1, 0);
    for (int v = 0; v < h.vertex_count(); ++v) base[v + 1] = base[v] + rho.block_count(v);
    const int nv = base[h.vertex_count()];

    std::vector<Edge> edges;
    edges.reserve(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        auto [u, v] = h.edges()[e];
        int bu = rho.block_of(u, e);
        int bv = rho.block_of(v, e);
        if (bu < 0 || bv < 0) throw std::invalid_argument("fractured graph: fracture misses an edge");
        edges.push_back({base[u] + bu, base[v] + bv});
    }
    std::vector<int> colour(nv);
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int b = 0; b < rho.block_count(v); ++b) colour[base[v] + b] = v;
    return ColouredGraph(h, Graph(nv, std::move(edges)), std::move(colour));
}

} // namespace countlab
