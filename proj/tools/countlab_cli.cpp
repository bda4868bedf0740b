// countlab: exact counting, transforms, interpolation reductions, and
// dichotomy verdicts for small-pattern graph counting.
//
// Exit codes: 0 ok, 2 usage or invalid input, 3 guard exceeded,
// 4 oracle promise violation, 5 internal consistency failure.

#include "countlab/chains.hpp"
#include "countlab/classify.hpp"
#include "countlab/counting.hpp"
#include "countlab/errors.hpp"
#include "countlab/fracture.hpp"
#include "countlab/generators.hpp"
#include "countlab/graph_io.hpp"
#include "countlab/guards.hpp"
#include "countlab/hom_td.hpp"
#include "countlab/hombasis.hpp"
#include "countlab/invariants.hpp"
#include "countlab/linalg.hpp"
#include "countlab/oracle.hpp"
#include "countlab/reductions.hpp"
#include "countlab/selftest.hpp"
#include "countlab/shallow_minor.hpp"
#include "countlab/transforms.hpp"
#include "countlab/treewidth.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace countlab;
using nlohmann::json;

namespace {

struct Options {
    std::string pattern_path;
    std::string host_path;
    std::string in_path;
    std::string out_path;
    std::string trace_path;
    int r = 0;
    int k = 0;
    bool as_json = false;
    std::uint64_t seed = 0;
    int trials = 50;
    std::vector<std::string> guard_overrides;
    Guards guards;

    void apply_guards() {
        for (const auto& spec : guard_overrides) {
            auto eq = spec.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--guard expects name=value, got: " + spec);
            guards.set(spec.substr(0, eq), std::stoull(spec.substr(eq + 1)));
        }
    }
};

void emit(const Options& opt, const std::string& key, const std::string& value) {
    if (opt.as_json) {
        json j;
        j[key] = value;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << value << '\n';
    }
}

void emit_count(const Options& opt, const BigCount& value) { emit(opt, "count", value.get_str()); }

void write_graph_output(const Options& opt, const Graph& g) {
    if (opt.out_path.empty()) {
        write_graph(std::cout, g);
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + opt.out_path);
        write_graph(out, g);
    }
}

void write_coloured_output(const Options& opt, const ColouredGraph& cg) {
    if (opt.out_path.empty()) {
        write_coloured_graph(std::cout, cg);
    } else {
        std::ofstream out(opt.out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + opt.out_path);
        write_coloured_graph(out, cg);
    }
}

void write_trace(const Options& opt, const CountingOracle& oracle) {
    if (opt.trace_path.empty()) return;
    std::ofstream out(opt.trace_path);
    if (!out) throw std::invalid_argument("cannot open trace file: " + opt.trace_path);
    for (const auto& rec : oracle.log()) out << rec.to_line() << '\n';
}

Graph parse_generate_kind(const std::string& kind, int k, int ell) {
    if (kind == "clique") return make_clique(k);
    if (kind == "matching") return make_matching(k);
    if (kind == "independent") return make_independent(k);
    if (kind == "path") return make_path(k);
    if (kind == "cycle") return make_cycle(k);
    if (kind == "grid") return make_grid(k);
    if (kind == "wall") return make_wall(k, ell);
    throw std::invalid_argument("unknown generator kind: " + kind);
}

Finiteness parse_finiteness(const std::string& s) {
    if (s == "finite") return Finiteness::finite;
    if (s == "infinite") return Finiteness::infinite;
    if (s == "unknown") return Finiteness::unknown;
    throw std::invalid_argument("finiteness flag must be finite|infinite|unknown, got: " + s);
}

json verdict_json(const Verdict& v) {
    json j;
    j["class"] = to_string(v.klass);
    j["lower_bound"] = to_string(v.bound);
    j["citation"] = v.citation;
    return j;
}

int report_results(const Options& opt, const std::vector<CheckResult>& results) {
    int failures = 0;
    for (const auto& res : results) {
        if (!res.pass) ++failures;
        if (opt.as_json) {
            json j;
            j["name"] = res.name;
            j["pass"] = res.pass;
            j["detail"] = res.detail;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (res.pass ? "PASS" : "FAIL") << "  " << res.name;
            if (!res.detail.empty()) std::cout << " — " << res.detail;
            std::cout << '\n';
        }
    }
    return failures == 0 ? 0 : 5;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"countlab — exact pattern-counting laboratory"};
    app.require_subcommand(1);
    Options opt;

    app.add_option("--seed", opt.seed, "seed for randomized checks");
    app.add_option("--trials", opt.trials, "trial count for randomized checks");
    app.add_flag("--json", opt.as_json, "structured output");
    app.add_option("--guard", opt.guard_overrides, "override a named guard, name=value")
        ->take_all();

    // count
    auto* count = app.add_subcommand("count", "exact counting");
    std::string count_what;
    count->add_option("what", count_what,
                      "hom|hom-td|sub|indsub|cphom|matchings|indsets|colmatch|colindset")
        ->required();
    count->add_option("--pattern", opt.pattern_path, "pattern graph file");
    count->add_option("--host", opt.host_path, "host graph file");
    count->add_option("--in", opt.in_path, "coloured graph file / plain graph file");
    count->add_option("--k", opt.k, "size parameter for matchings/indsets");

    // transform
    auto* transform = app.add_subcommand("transform", "graph transformations");
    std::string transform_what;
    int gen_k = 0, gen_ell = 0, fracture_index = 0;
    std::string gen_kind, edge_list;
    transform->add_option("what", transform_what,
                          "subdivide|lift|tensor|fracture|edge-subgraph|generate|export-dot")
        ->required();
    transform->add_option("--in", opt.in_path, "input file");
    transform->add_option("--with", opt.host_path, "second coloured graph (tensor)");
    transform->add_option("--r", opt.r, "subdivision count");
    transform->add_option("--index", fracture_index, "fracture index (enumeration order)");
    transform->add_option("--edges", edge_list, "comma-separated edge indices");
    transform->add_option("--kind", gen_kind, "generator kind");
    transform->add_option("--k", gen_k, "generator size");
    transform->add_option("--ell", gen_ell, "wall length");
    transform->add_option("--out", opt.out_path, "output file (default stdout)");

    // basis
    auto* basis = app.add_subcommand("basis", "interpolation matrices and coefficients");
    std::string basis_what;
    basis->add_option("what", basis_what, "matrix-m|matrix-n|det-m|det-n|match-coeffs|indset-coeffs")
        ->required();
    basis->add_option("--in", opt.in_path, "pattern graph file")->required();

    // reduce
    auto* reduce = app.add_subcommand("reduce", "oracle reductions");
    std::string reduce_what;
    std::string divisors_arg;
    reduce->add_option("what", reduce_what,
                       "match-pipeline|indset-pipeline|uncolour-matchings|uncolour-indsets|"
                       "cphom-from-hom|wall-lift")
        ->required();
    reduce->add_option("--in", opt.in_path, "coloured graph file")->required();
    reduce->add_option("--r", opt.r, "subdivision count");
    reduce->add_option("--k", opt.k, "wall height");
    reduce->add_option("--divisors", divisors_arg, "comma-separated per-edge divisors");
    reduce->add_option("--trace", opt.trace_path, "write the oracle query log here");
    reduce->add_option("--out", opt.out_path, "output file for wall-lift");

    // invariant
    auto* inv = app.add_subcommand("invariant", "exact invariants");
    std::string inv_what;
    int depth = 0;
    inv->add_option("what", inv_what,
                    "omega|alpha|beta|beta-ind|matching|matching-ind|treewidth|shallow-minor")
        ->required();
    inv->add_option("--in", opt.in_path, "graph file")->required();
    inv->add_option("--minor", opt.pattern_path, "minor candidate (shallow-minor)");
    inv->add_option("--depth", depth, "shallow minor depth");

    // classify
    auto* cls = app.add_subcommand("classify", "dichotomy verdicts over declared class flags");
    std::string cls_what, p_closure = "hereditary";
    std::string p_size = "unknown", p_m = "unknown", p_mind = "unknown", p_betaind = "unknown",
                p_omega = "unknown", p_alpha = "unknown", p_tw = "unknown";
    std::string h_density = "unknown", h_omega = "unknown", h_beta = "unknown",
                h_alpha = "unknown";
    cls->add_option("what", cls_what, "sub|indsub|hom")->required();
    cls->add_option("--pattern-closure", p_closure, "monotone|hereditary|minor-closed");
    cls->add_option("--pattern-size", p_size, "finiteness of |H|");
    cls->add_option("--pattern-m", p_m, "finiteness of the matching number");
    cls->add_option("--pattern-mind", p_mind, "finiteness of the induced matching number");
    cls->add_option("--pattern-betaind", p_betaind, "finiteness of the induced biclique number");
    cls->add_option("--pattern-omega", p_omega, "finiteness of the clique number");
    cls->add_option("--pattern-alpha", p_alpha, "finiteness of the independence number");
    cls->add_option("--pattern-tw", p_tw, "finiteness of the treewidth");
    cls->add_option("--host-density", h_density, "nowhere-dense|somewhere-dense|unknown");
    cls->add_option("--host-omega", h_omega, "finiteness of the host clique number");
    cls->add_option("--host-beta", h_beta, "finiteness of the host biclique number");
    cls->add_option("--host-alpha", h_alpha, "finiteness of the host independence number");

    // verify
    auto* verify = app.add_subcommand("verify", "property suites and acceptance criteria");
    std::string suite = "all";
    verify->add_option("suite", suite, "all|acceptance|" + [] {
        std::string s;
        for (const auto& n : suite_names()) s += n + "|";
        s.pop_back();
        return s;
    }());

    try {
        app.parse(argc, argv);
        opt.apply_guards();

        if (count->parsed()) {
            if (count_what == "hom" || count_what == "hom-td" || count_what == "sub" ||
                count_what == "indsub") {
                Graph pattern = read_graph_file(opt.pattern_path);
                Graph host = read_graph_file(opt.host_path);
                if (count_what == "hom")
                    emit_count(opt, count_hom(pattern, host, opt.guards.pattern_vertices));
                else if (count_what == "hom-td") {
                    auto [w, td] = treewidth_exact(pattern, opt.guards.treewidth_vertices);
                    emit_count(opt, count_hom_td(pattern, td, host, opt.guards.dp_table));
                } else if (count_what == "sub")
                    emit_count(opt, count_sub(pattern, host, opt.guards.pattern_vertices));
                else
                    emit_count(opt, count_indsub(pattern, host, opt.guards.pattern_vertices));
            } else if (count_what == "cphom" || count_what == "colmatch" ||
                       count_what == "colindset") {
                ColouredGraph cg = read_coloured_graph_file(opt.in_path);
                if (count_what == "cphom") emit_count(opt, count_cp_hom(cg));
                else if (count_what == "colmatch") emit_count(opt, count_colourful_matchings(cg));
                else emit_count(opt, count_colourful_indsets(cg));
            } else if (count_what == "matchings" || count_what == "indsets") {
                Graph g = read_graph_file(opt.in_path);
                if (count_what == "matchings")
                    emit_count(opt, count_matchings(g, opt.k, opt.guards.enumeration));
                else emit_count(opt, count_indsets(g, opt.k, opt.guards.enumeration));
            } else {
                throw std::invalid_argument("unknown count subcommand: " + count_what);
            }
        } else if (transform->parsed()) {
            if (transform_what == "subdivide") {
                write_graph_output(opt, subdivide(read_graph_file(opt.in_path), opt.r));
            } else if (transform_what == "lift") {
                write_coloured_output(opt,
                                      lift_colouring(read_coloured_graph_file(opt.in_path), opt.r));
            } else if (transform_what == "tensor") {
                ColouredGraph a = read_coloured_graph_file(opt.in_path);
                ColouredGraph b = read_coloured_graph_file(opt.host_path);
                write_coloured_output(opt, tensor(a, b));
            } else if (transform_what == "fracture") {
                Graph h = read_graph_file(opt.in_path);
                auto fractures = enumerate_fractures(h, opt.guards.fractures);
                if (fracture_index < 0 || fracture_index >= static_cast<int>(fractures.size()))
                    throw std::invalid_argument("fracture index out of range (have " +
                                                std::to_string(fractures.size()) + ")");
                write_coloured_output(opt, fractured_graph(h, fractures[fracture_index]));
            } else if (transform_what == "edge-subgraph") {
                Graph h = read_graph_file(opt.in_path);
                EdgeSubset a;
                std::istringstream ss(edge_list);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) a.indices.push_back(std::stoi(tok));
                write_coloured_output(opt, edge_subgraph(h, a));
            } else if (transform_what == "generate") {
                write_graph_output(opt, parse_generate_kind(gen_kind, gen_k, gen_ell));
            } else if (transform_what == "export-dot") {
                std::cout << to_dot(read_graph_file(opt.in_path));
            } else {
                throw std::invalid_argument("unknown transform: " + transform_what);
            }
        } else if (basis->parsed()) {
            Graph h = read_graph_file(opt.in_path);
            if (basis_what == "matrix-m") {
                std::cout << matrix_M(h, opt.guards.fractures).to_text();
            } else if (basis_what == "matrix-n") {
                std::cout << matrix_N(h, opt.guards.edge_subsets).to_text();
            } else if (basis_what == "det-m") {
                Rational d = determinant_exact(matrix_M(h, opt.guards.fractures));
                emit(opt, "determinant", d.get_num().get_str() + "/" + d.get_den().get_str());
            } else if (basis_what == "det-n") {
                Rational d = determinant_exact(matrix_N(h, opt.guards.edge_subsets));
                emit(opt, "determinant", d.get_num().get_str() + "/" + d.get_den().get_str());
            } else if (basis_what == "match-coeffs") {
                MatchCoefficients mc = match_coefficients(h, opt.guards.fractures);
                for (std::size_t i = 0; i < mc.value.size(); ++i)
                    std::cout << mc.value[i].get_num().get_str() << '/'
                              << mc.value[i].get_den().get_str() << "  # "
                              << to_string(mc.fractures[i], h) << '\n';
            } else if (basis_what == "indset-coeffs") {
                IndsetCoefficients ic = indset_coefficients(h, opt.guards.edge_subsets);
                for (std::size_t i = 0; i < ic.value.size(); ++i) {
                    std::cout << ic.value[i].get_num().get_str() << '/'
                              << ic.value[i].get_den().get_str() << "  #";
                    for (int e : ic.subsets[i].indices) std::cout << ' ' << e;
                    std::cout << '\n';
                }
            } else {
                throw std::invalid_argument("unknown basis subcommand: " + basis_what);
            }
        } else if (reduce->parsed()) {
            ColouredGraph cg = read_coloured_graph_file(opt.in_path);
            if (reduce_what == "match-pipeline") {
                CountingOracle oracle = matching_pipeline_oracle(opt.r, opt.guards);
                BigCount got = recover_cphom_via_matchings(cg, opt.r, oracle, opt.guards);
                write_trace(opt, oracle);
                emit_count(opt, got);
            } else if (reduce_what == "indset-pipeline") {
                CountingOracle oracle =
                    indset_pipeline_oracle(lift_colouring(cg, opt.r).host(), opt.guards);
                BigCount got = recover_cphom_via_indsets(cg, opt.r, oracle, opt.guards);
                write_trace(opt, oracle);
                emit_count(opt, got);
            } else if (reduce_what == "uncolour-matchings") {
                CountingOracle oracle =
                    brute_force_oracle(OracleProblem::matchings, SubgraphsOf{cg.host()}, opt.guards);
                BigCount got = colourful_from_uncoloured_matchings(cg, oracle);
                write_trace(opt, oracle);
                emit_count(opt, got);
            } else if (reduce_what == "uncolour-indsets") {
                CountingOracle oracle =
                    brute_force_oracle(OracleProblem::indsets, SubgraphsOf{cg.host()}, opt.guards);
                BigCount got = colourful_from_uncoloured_indsets(cg, oracle);
                write_trace(opt, oracle);
                emit_count(opt, got);
            } else if (reduce_what == "cphom-from-hom") {
                CountingOracle oracle =
                    brute_force_oracle(OracleProblem::hom, SubgraphsOf{cg.host()}, opt.guards);
                BigCount got = cphom_from_hom(cg, oracle, opt.guards);
                write_trace(opt, oracle);
                emit_count(opt, got);
            } else if (reduce_what == "wall-lift") {
                std::vector<int> divisors;
                std::istringstream ss(divisors_arg);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) divisors.push_back(std::stoi(tok));
                WallLift lift = wall_lift(opt.k, divisors, opt.r, cg);
                write_coloured_output(opt, lift.coloured);
            } else {
                throw std::invalid_argument("unknown reduction: " + reduce_what);
            }
        } else if (inv->parsed()) {
            Graph g = read_graph_file(opt.in_path);
            if (inv_what == "treewidth") {
                auto [w, td] = treewidth_exact(g, opt.guards.treewidth_vertices);
                if (opt.as_json) {
                    json j;
                    j["width"] = w;
                    j["bags"] = td.bags;
                    j["tree_edges"] = td.tree_edges;
                    std::cout << j.dump() << '\n';
                } else {
                    std::cout << w << '\n';
                    for (std::size_t i = 0; i < td.bags.size(); ++i) {
                        std::cout << "bag " << i << ":";
                        for (int v : td.bags[i]) std::cout << ' ' << v;
                        std::cout << '\n';
                    }
                    for (auto [x, y] : td.tree_edges)
                        std::cout << "link " << x << ' ' << y << '\n';
                }
            } else if (inv_what == "shallow-minor") {
                Graph f = read_graph_file(opt.pattern_path);
                bool yes = is_shallow_minor(f, g, depth, opt.guards.shallow_vertices);
                emit(opt, "shallow_minor", yes ? "true" : "false");
            } else {
                int value =
                    invariant(g, invariant_kind_from_name(inv_what), opt.guards.invariant_vertices);
                emit(opt, inv_what, std::to_string(value));
            }
        } else if (cls->parsed()) {
            PatternClassFlags p;
            if (p_closure == "monotone") p.closure = PatternClosure::monotone;
            else if (p_closure == "hereditary") p.closure = PatternClosure::hereditary;
            else if (p_closure == "minor-closed") p.closure = PatternClosure::minor_closed;
            else throw std::invalid_argument("unknown pattern closure: " + p_closure);
            p.size = parse_finiteness(p_size);
            p.matching = parse_finiteness(p_m);
            p.induced_matching = parse_finiteness(p_mind);
            p.induced_biclique = parse_finiteness(p_betaind);
            p.clique = parse_finiteness(p_omega);
            p.independence = parse_finiteness(p_alpha);
            p.treewidth = parse_finiteness(p_tw);
            HostClassFlags g;
            if (h_density == "nowhere-dense") g.density = Density::nowhere_dense;
            else if (h_density == "somewhere-dense") g.density = Density::somewhere_dense;
            else if (h_density == "unknown") g.density = Density::unknown;
            else throw std::invalid_argument("unknown host density: " + h_density);
            g.clique = parse_finiteness(h_omega);
            g.biclique = parse_finiteness(h_beta);
            g.independence = parse_finiteness(h_alpha);

            Verdict v;
            if (cls_what == "sub") v = classify_sub(p, g);
            else if (cls_what == "indsub") v = classify_indsub(p, g);
            else if (cls_what == "hom") v = classify_hom(p, g);
            else throw std::invalid_argument("unknown classify subcommand: " + cls_what);
            if (opt.as_json) std::cout << verdict_json(v).dump() << '\n';
            else std::cout << to_string(v) << '\n';
        } else if (verify->parsed()) {
            std::vector<CheckResult> results;
            if (suite == "all") {
                for (const auto& name : suite_names()) {
                    auto part = run_suite(name, opt.seed, opt.trials);
                    for (auto& res : part) res.name = name + ": " + res.name;
                    results.insert(results.end(), part.begin(), part.end());
                }
                auto acc = acceptance_suite(opt.seed);
                for (auto& res : acc) res.name = "acceptance: " + res.name;
                results.insert(results.end(), acc.begin(), acc.end());
            } else {
                results = run_suite(suite, opt.seed, opt.trials);
            }
            return report_results(opt, results);
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return 3;
    } catch (const PromiseError& e) {
        std::cerr << "promise violation: " << e.what() << '\n';
        return 4;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return 5;
    } catch (const SingularError& e) {
        std::cerr << "singular system: " << e.what() << '\n';
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
