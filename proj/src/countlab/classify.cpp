#include "countlab/classify.hpp"

#include "countlab/errors.hpp"

#include <array>
#include <stdexcept>

namespace countlab {

namespace {

using F = Finiteness;

// x unbounded forces y unbounded (per-graph inequalities lifted to classes)
struct Implication {
    F PatternClassFlags::* from;
    F PatternClassFlags::* to;
    const char* reason;
};

constexpr std::array<Implication, 10> kPatternImplications = {{
    {&PatternClassFlags::induced_matching, &PatternClassFlags::matching,
     "an induced matching is a matching"},
    {&PatternClassFlags::induced_matching, &PatternClassFlags::independence,
     "one endpoint per induced-matching edge is independent"},
    {&PatternClassFlags::induced_biclique, &PatternClassFlags::matching,
     "a k-by-k biclique contains a k-matching"},
    {&PatternClassFlags::induced_biclique, &PatternClassFlags::independence,
     "one side of an induced biclique is independent"},
    {&PatternClassFlags::induced_biclique, &PatternClassFlags::treewidth,
     "a k-by-k biclique has treewidth k"},
    {&PatternClassFlags::clique, &PatternClassFlags::matching,
     "a 2k-clique contains a k-matching"},
    {&PatternClassFlags::clique, &PatternClassFlags::treewidth,
     "a k-clique has treewidth k-1"},
    {&PatternClassFlags::matching, &PatternClassFlags::size,
     "unbounded matching number needs arbitrarily large graphs"},
    {&PatternClassFlags::independence, &PatternClassFlags::size,
     "unbounded independence number needs arbitrarily large graphs"},
    {&PatternClassFlags::treewidth, &PatternClassFlags::size,
     "unbounded treewidth needs arbitrarily large graphs"},
}};

PatternClassFlags normalize_pattern(PatternClassFlags p) {
    if (p.size == F::finite) {
        // a finite class bounds every invariant
        for (F PatternClassFlags::* field :
             {&PatternClassFlags::matching, &PatternClassFlags::induced_matching,
              &PatternClassFlags::induced_biclique, &PatternClassFlags::clique,
              &PatternClassFlags::independence, &PatternClassFlags::treewidth}) {
            if (p.*field == F::infinite)
                throw FlagError("inconsistent pattern flags: a finite class bounds every invariant");
            p.*field = F::finite;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& rule : kPatternImplications) {
            if (p.*(rule.from) != F::infinite) continue;
            if (p.*(rule.to) == F::finite)
                throw FlagError(std::string("inconsistent pattern flags: ") + rule.reason);
            if (p.*(rule.to) == F::unknown) {
                p.*(rule.to) = F::infinite;
                changed = true;
            }
        }
    }
    if (p.matching == F::infinite && p.clique == F::finite &&
        p.induced_biclique == F::finite && p.induced_matching == F::finite)
        throw FlagError(
            "inconsistent pattern flags: unbounded matching number forces unbounded clique, "
            "induced biclique, or induced matching number (Theorem 2.6)");
    if (p.size == F::infinite && p.independence == F::finite && p.clique == F::finite)
        throw FlagError(
            "inconsistent pattern flags: an infinite class has unbounded independence or clique "
            "number (Theorem 2.5)");
    return p;
}

HostClassFlags normalize_host(HostClassFlags g) {
    if (g.clique == F::infinite) {
        if (g.biclique == F::finite)
            throw FlagError(
                "inconsistent host flags: unbounded cliques contain unbounded bicliques");
        g.biclique = F::infinite;
    }
    if (g.density == Density::nowhere_dense) {
        if (g.clique == F::infinite)
            throw FlagError(
                "inconsistent host flags: a monotone class with unbounded clique number contains "
                "every clique and is somewhere dense");
        if (g.biclique == F::infinite)
            throw FlagError(
                "inconsistent host flags: a monotone class with unbounded biclique number "
                "contains the 1-subdivision of every clique and is somewhere dense");
        g.clique = F::finite;
        g.biclique = F::finite;
    }
    if (g.density == Density::somewhere_dense && g.clique == F::finite &&
        g.independence == F::finite)
        throw FlagError(
            "inconsistent host flags: an infinite class has unbounded independence or clique "
            "number (Theorem 2.5)");
    return g;
}

Verdict verdict(VerdictClass klass, LowerBoundForm bound, std::string citation) {
    return Verdict{klass, bound, std::move(citation)};
}

Verdict unclassified() {
    return verdict(VerdictClass::unclassified, LowerBoundForm::none,
                   "open: unknown flags fall outside the classified cases");
}

} // namespace

std::string to_string(Finiteness f) {
    switch (f) {
        case F::finite: return "finite";
        case F::infinite: return "infinite";
        case F::unknown: return "unknown";
    }
    return "?";
}

std::string to_string(Density d) {
    switch (d) {
        case Density::nowhere_dense: return "nowhere-dense";
        case Density::somewhere_dense: return "somewhere-dense";
        case Density::unknown: return "unknown";
    }
    return "?";
}

std::string to_string(PatternClosure c) {
    switch (c) {
        case PatternClosure::monotone: return "monotone";
        case PatternClosure::hereditary: return "hereditary";
        case PatternClosure::minor_closed: return "minor-closed";
    }
    return "?";
}

std::string to_string(VerdictClass v) {
    switch (v) {
        case VerdictClass::P: return "P";
        case VerdictClass::FPT: return "FPT";
        case VerdictClass::hard: return "#W[1]-hard";
        case VerdictClass::hard_tight: return "#W[1]-hard (tight)";
        case VerdictClass::unclassified: return "unclassified";
    }
    return "?";
}

std::string to_string(LowerBoundForm b) {
    switch (b) {
        case LowerBoundForm::none: return "none";
        case LowerBoundForm::n_to_o_k_over_log_k: return "no f(k)*n^{o(k/log k)} under ETH";
        case LowerBoundForm::n_to_o_k: return "no f(k)*n^{o(k)} under ETH";
        case LowerBoundForm::n_to_o_tw: return "no f(|H|)*n^{o(tw(H))} under ETH";
    }
    return "?";
}

std::string to_string(const Verdict& v) {
    std::string out = to_string(v.klass);
    if (v.bound != LowerBoundForm::none) out += "; " + to_string(v.bound);
    if (!v.citation.empty()) out += " [" + v.citation + "]";
    return out;
}

void validate_pattern_flags(const PatternClassFlags& flags) { (void)normalize_pattern(flags); }
void validate_host_flags(const HostClassFlags& flags) { (void)normalize_host(flags); }

Verdict classify_sub(const PatternClassFlags& pattern, const HostClassFlags& host) {
    PatternClassFlags p = normalize_pattern(pattern);
    HostClassFlags g = normalize_host(host);

    if (p.matching == F::finite)
        return verdict(VerdictClass::P, LowerBoundForm::none, "Table 1, row 1");
    if (p.matching == F::unknown) return unclassified();

    // row 2: unbounded induced matchings
    if (p.induced_matching == F::infinite) {
        switch (g.density) {
            case Density::nowhere_dense:
                return verdict(VerdictClass::FPT, LowerBoundForm::none, "Table 1, row 2, column 1");
            case Density::somewhere_dense:
                return verdict(VerdictClass::hard, LowerBoundForm::n_to_o_k_over_log_k,
                               "Table 1, row 2 (somewhere dense)");
            case Density::unknown: return unclassified();
        }
    }
    if (p.induced_matching == F::unknown) return unclassified();

    // row 3: bounded induced matchings, unbounded induced bicliques
    if (p.induced_biclique == F::infinite) {
        if (g.density == Density::unknown) return unclassified();
        if (g.density == Density::nowhere_dense)
            return verdict(VerdictClass::P, LowerBoundForm::none, "Table 1, row 3, column 1");
        if (g.clique == F::infinite)
            return verdict(VerdictClass::hard_tight, LowerBoundForm::n_to_o_k,
                           "Table 1, row 3, column 2");
        if (g.clique == F::unknown) return unclassified();
        if (g.biclique == F::infinite)
            return verdict(VerdictClass::hard_tight, LowerBoundForm::n_to_o_k,
                           "Table 1, row 3, column 3");
        if (g.biclique == F::unknown) return unclassified();
        return verdict(VerdictClass::P, LowerBoundForm::none, "Table 1, row 3, column 4");
    }
    if (p.induced_biclique == F::unknown) return unclassified();

    // row 4: both bounded, so the clique number is unbounded
    if (g.density == Density::unknown) return unclassified();
    if (g.density == Density::nowhere_dense)
        return verdict(VerdictClass::P, LowerBoundForm::none, "Table 1, row 4, column 1");
    if (g.clique == F::infinite)
        return verdict(VerdictClass::hard_tight, LowerBoundForm::n_to_o_k,
                       "Table 1, row 4, column 2");
    if (g.clique == F::unknown) return unclassified();
    return verdict(VerdictClass::P, LowerBoundForm::none, "Table 1, row 4, columns 3-4");
}

Verdict classify_indsub(const PatternClassFlags& pattern, const HostClassFlags& host) {
    PatternClassFlags p = normalize_pattern(pattern);
    HostClassFlags g = normalize_host(host);

    if (p.size == F::finite)
        return verdict(VerdictClass::P, LowerBoundForm::none, "Table 2, row 1");
    if (p.size == F::unknown) return unclassified();

    if (p.independence == F::infinite) {
        switch (g.density) {
            case Density::nowhere_dense:
                return verdict(VerdictClass::FPT, LowerBoundForm::none, "Table 2, row 2, column 1");
            case Density::somewhere_dense:
                if (g.clique == F::infinite)
                    return verdict(VerdictClass::hard_tight, LowerBoundForm::n_to_o_k,
                                   "Table 2, row 2, column 2");
                if (g.clique == F::unknown) return unclassified();
                if (g.independence == F::unknown) return unclassified();
                return verdict(VerdictClass::hard, LowerBoundForm::n_to_o_k_over_log_k,
                               "Table 2, row 2, column 3");
            case Density::unknown: return unclassified();
        }
    }
    if (p.independence == F::unknown) return unclassified();

    // row 3: bounded independence forces unbounded cliques
    if (g.density == Density::unknown) return unclassified();
    if (g.density == Density::nowhere_dense)
        return verdict(VerdictClass::P, LowerBoundForm::none, "Table 2, row 3, column 1");
    if (g.clique == F::infinite)
        return verdict(VerdictClass::hard_tight, LowerBoundForm::n_to_o_k,
                       "Table 2, row 3, column 2");
    if (g.clique == F::unknown) return unclassified();
    if (g.independence == F::unknown) return unclassified();
    return verdict(VerdictClass::P, LowerBoundForm::none, "Table 2, row 3, column 3");
}

Verdict classify_hom(const PatternClassFlags& pattern, const HostClassFlags& host) {
    if (pattern.closure == PatternClosure::hereditary)
        throw std::invalid_argument(
            "classify hom: hereditary-but-not-monotone pattern classes are unsupported "
            "(bounded treewidth is not the right criterion there)");
    PatternClassFlags p = normalize_pattern(pattern);
    HostClassFlags g = normalize_host(host);

    if (p.treewidth == F::finite)
        return verdict(VerdictClass::P, LowerBoundForm::none,
                       "Theorem 3.6(1): time |H|^{O(1)} * n^{t+1} given a width-t decomposition");
    if (g.density == Density::nowhere_dense)
        return verdict(VerdictClass::FPT, LowerBoundForm::none, "Theorem 1.8(1)");
    if (p.treewidth == F::infinite && g.density == Density::somewhere_dense)
        return verdict(VerdictClass::hard, LowerBoundForm::n_to_o_tw, "Theorem 3.6(2)");
    return unclassified();
}

} // namespace countlab
