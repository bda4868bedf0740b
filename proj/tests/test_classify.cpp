#include "countlab/classify.hpp"
#include "countlab/errors.hpp"
#include "countlab/selftest.hpp"

#include <doctest.h>

using namespace countlab;

namespace {

PatternClassFlags matchings_cls() {
    PatternClassFlags p;
    p.closure = PatternClosure::hereditary;
    p.size = Finiteness::infinite;
    p.matching = Finiteness::infinite;
    p.induced_matching = Finiteness::infinite;
    p.induced_biclique = Finiteness::finite;
    p.clique = Finiteness::finite;
    p.independence = Finiteness::infinite;
    p.treewidth = Finiteness::finite;
    return p;
}

HostClassFlags sparse_host() {
    HostClassFlags g;
    g.density = Density::nowhere_dense;
    g.clique = Finiteness::finite;
    g.biclique = Finiteness::finite;
    g.independence = Finiteness::infinite;
    return g;
}

HostClassFlags dense_host(Finiteness omega, Finiteness beta) {
    HostClassFlags g;
    g.density = Density::somewhere_dense;
    g.clique = omega;
    g.biclique = beta;
    g.independence = Finiteness::infinite;
    return g;
}

} // namespace

TEST_CASE("subgraph verdicts by table cell") {
    // bounded matching number: polynomial everywhere
    PatternClassFlags bounded = matchings_cls();
    bounded.matching = Finiteness::finite;
    bounded.induced_matching = Finiteness::finite;
    CHECK(classify_sub(bounded, dense_host(Finiteness::infinite, Finiteness::infinite)).klass ==
          VerdictClass::P);

    // unbounded induced matchings, host with unbounded bicliques but bounded cliques
    Verdict v = classify_sub(matchings_cls(), dense_host(Finiteness::finite, Finiteness::infinite));
    CHECK(v.klass == VerdictClass::hard);
    CHECK(v.bound == LowerBoundForm::n_to_o_k_over_log_k);

    // bicliques: hard-with-tight-bound on biclique-rich hosts, easy otherwise
    PatternClassFlags bicliques = matchings_cls();
    bicliques.induced_matching = Finiteness::finite;
    bicliques.induced_biclique = Finiteness::infinite;
    bicliques.treewidth = Finiteness::infinite;
    Verdict tight = classify_sub(bicliques, dense_host(Finiteness::finite, Finiteness::infinite));
    CHECK(tight.klass == VerdictClass::hard_tight);
    CHECK(tight.bound == LowerBoundForm::n_to_o_k);
    CHECK(classify_sub(bicliques, dense_host(Finiteness::finite, Finiteness::finite)).klass ==
          VerdictClass::P);

    // sparse hosts: FPT for the matching row, P for the others
    CHECK(classify_sub(matchings_cls(), sparse_host()).klass == VerdictClass::FPT);
    CHECK(classify_sub(bicliques, sparse_host()).klass == VerdictClass::P);
}

TEST_CASE("induced-subgraph verdicts by table cell") {
    PatternClassFlags finite_patterns;
    finite_patterns.closure = PatternClosure::hereditary;
    finite_patterns.size = Finiteness::finite;
    CHECK(classify_indsub(finite_patterns, dense_host(Finiteness::infinite, Finiteness::infinite))
              .klass == VerdictClass::P);

    PatternClassFlags indsets;
    indsets.closure = PatternClosure::hereditary;
    indsets.size = Finiteness::infinite;
    indsets.matching = Finiteness::finite;
    indsets.induced_matching = Finiteness::finite;
    indsets.induced_biclique = Finiteness::finite;
    indsets.clique = Finiteness::finite;
    indsets.independence = Finiteness::infinite;
    indsets.treewidth = Finiteness::finite;
    Verdict v = classify_indsub(indsets, dense_host(Finiteness::infinite, Finiteness::infinite));
    CHECK(v.klass == VerdictClass::hard_tight);
    CHECK(v.bound == LowerBoundForm::n_to_o_k);
    v = classify_indsub(indsets, dense_host(Finiteness::finite, Finiteness::infinite));
    CHECK(v.klass == VerdictClass::hard);
    CHECK(v.bound == LowerBoundForm::n_to_o_k_over_log_k);
    CHECK(classify_indsub(indsets, sparse_host()).klass == VerdictClass::FPT);

    PatternClassFlags cliques;
    cliques.closure = PatternClosure::hereditary;
    cliques.size = Finiteness::infinite;
    cliques.matching = Finiteness::infinite;
    cliques.induced_matching = Finiteness::finite;
    cliques.induced_biclique = Finiteness::finite;
    cliques.clique = Finiteness::infinite;
    cliques.independence = Finiteness::finite;
    cliques.treewidth = Finiteness::infinite;
    CHECK(classify_indsub(cliques, dense_host(Finiteness::finite, Finiteness::infinite)).klass ==
          VerdictClass::P);
    CHECK(classify_indsub(cliques, dense_host(Finiteness::infinite, Finiteness::infinite)).klass ==
          VerdictClass::hard_tight);
}

TEST_CASE("homomorphism verdicts") {
    PatternClassFlags trees = matchings_cls();
    trees.closure = PatternClosure::monotone;
    Verdict v = classify_hom(trees, dense_host(Finiteness::infinite, Finiteness::infinite));
    CHECK(v.klass == VerdictClass::P);

    PatternClassFlags grids = trees;
    grids.treewidth = Finiteness::infinite;
    v = classify_hom(grids, dense_host(Finiteness::infinite, Finiteness::infinite));
    CHECK(v.klass == VerdictClass::hard);
    CHECK(v.bound == LowerBoundForm::n_to_o_tw);
    CHECK(classify_hom(grids, sparse_host()).klass == VerdictClass::FPT);

    PatternClassFlags hereditary_only = grids;
    hereditary_only.closure = PatternClosure::hereditary;
    CHECK_THROWS_AS(classify_hom(hereditary_only, sparse_host()), std::invalid_argument);

    // minor-closed classes are monotone, so they are accepted
    PatternClassFlags minor = grids;
    minor.closure = PatternClosure::minor_closed;
    CHECK(classify_hom(minor, sparse_host()).klass == VerdictClass::FPT);
}

TEST_CASE("inconsistent flags are rejected with the violated implication") {
    PatternClassFlags bad = matchings_cls();
    bad.induced_matching = Finiteness::finite; // now nothing witnesses the infinite matchings
    try {
        classify_sub(bad, sparse_host());
        CHECK(false);
    } catch (const FlagError& e) {
        CHECK(std::string(e.what()).find("Theorem 2.6") != std::string::npos);
    }

    PatternClassFlags bad2;
    bad2.closure = PatternClosure::hereditary;
    bad2.size = Finiteness::infinite;
    bad2.independence = Finiteness::finite;
    bad2.clique = Finiteness::finite;
    try {
        classify_indsub(bad2, sparse_host());
        CHECK(false);
    } catch (const FlagError& e) {
        CHECK(std::string(e.what()).find("Theorem 2.5") != std::string::npos);
    }

    HostClassFlags bad_host;
    bad_host.density = Density::nowhere_dense;
    bad_host.clique = Finiteness::infinite;
    CHECK_THROWS_AS(validate_host_flags(bad_host), FlagError);
}

TEST_CASE("unknown flags yield open verdicts, never guesses") {
    PatternClassFlags p = matchings_cls();
    HostClassFlags g;
    g.density = Density::unknown;
    CHECK(classify_sub(p, g).klass == VerdictClass::unclassified);
    // but a bounded matching number decides without host information
    p.matching = Finiteness::finite;
    p.induced_matching = Finiteness::finite;
    CHECK(classify_sub(p, g).klass == VerdictClass::P);
}

TEST_CASE("full dichotomy fixture and totality") {
    // the acceptance fixture covers the 16 + 9 cells and the rejections
    for (const auto& res : run_suite("classify", 0, 10)) CHECK(res.pass);
}
