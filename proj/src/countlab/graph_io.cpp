#include "countlab/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace countlab {

namespace {

struct Section {
    int n = -1;
    int m = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> colours;
};

// Reads one p-section; stops at EOF or a %marker line (left in `pending`).
Section parse_section(std::istream& in, std::optional<std::string>& pending) {
    Section s;
    std::string line;
    auto next_line = [&](std::string& out) {
        if (pending) {
            out = *pending;
            pending.reset();
            return true;
        }
        return static_cast<bool>(std::getline(in, out));
    };
    while (next_line(line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag[0] == '%') {
            pending = line;
            break;
        }
        if (tag == "p") {
            if (s.n >= 0) throw std::invalid_argument("graph file: repeated p line");
            if (!(ls >> s.n >> s.m) || s.n < 0 || s.m < 0)
                throw std::invalid_argument("graph file: malformed p line");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw std::invalid_argument("graph file: malformed e line");
            if (u >= v) throw std::invalid_argument("graph file: e lines require u < v");
            s.edges.push_back({u, v});
        } else if (tag == "c") {
            int v, c;
            if (!(ls >> v >> c)) throw std::invalid_argument("graph file: malformed c line");
            s.colours.push_back({v, c});
        } else {
            throw std::invalid_argument("graph file: unknown line tag '" + tag + "'");
        }
    }
    if (s.n < 0) throw std::invalid_argument("graph file: missing p line");
    if (s.m != static_cast<int>(s.edges.size()))
        throw std::invalid_argument("graph file: edge count disagrees with p line");
    return s;
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::optional<std::string> pending;
    Section s = parse_section(in, pending);
    if (pending) throw std::invalid_argument("graph file: unexpected section marker");
    if (!s.colours.empty()) throw std::invalid_argument("graph file: colour lines in an uncoloured graph");
    return Graph(s.n, std::move(s.edges));
}

ColouredGraph parse_coloured_graph(std::istream& in) {
    std::string line;
    std::optional<std::string> pending;
    // scan for %pattern
    bool seen_pattern = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag[0] == '#') continue;
        if (tag == "%pattern") {
            seen_pattern = true;
            break;
        }
        throw std::invalid_argument("coloured graph file: expected %pattern marker");
    }
    if (!seen_pattern) throw std::invalid_argument("coloured graph file: missing %pattern section");
    Section ps = parse_section(in, pending);
    if (!ps.colours.empty())
        throw std::invalid_argument("coloured graph file: colour lines in the pattern section");
    if (!pending || *pending != "%host")
        throw std::invalid_argument("coloured graph file: missing %host section");
    pending.reset();
    Section hs = parse_section(in, pending);
    if (pending) throw std::invalid_argument("coloured graph file: unexpected extra section");

    Graph pattern(ps.n, std::move(ps.edges));
    Graph host(hs.n, std::move(hs.edges));
    std::vector<int> colour(hs.n, -1);
    for (auto [v, c] : hs.colours) {
        if (v < 0 || v >= hs.n) throw std::invalid_argument("coloured graph file: colour for unknown vertex");
        if (colour[v] != -1) throw std::invalid_argument("coloured graph file: repeated colour line");
        colour[v] = c;
    }
    for (int v = 0; v < hs.n; ++v)
        if (colour[v] == -1)
            throw std::invalid_argument("coloured graph file: vertex " + std::to_string(v) + " has no colour");
    return ColouredGraph(std::move(pattern), std::move(host), std::move(colour));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph(in);
}

ColouredGraph read_coloured_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coloured graph file: " + path);
    return parse_coloured_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

void write_coloured_graph(std::ostream& out, const ColouredGraph& cg) {
    out << "%pattern\n";
    write_graph(out, cg.pattern());
    out << "%host\n";
    write_graph(out, cg.host());
    for (int v = 0; v < cg.host().vertex_count(); ++v)
        out << "c " << v << ' ' << cg.colour_of(v) << '\n';
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace countlab
