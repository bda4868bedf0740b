#pragma once

#include <string>

namespace countlab {

// Class-level properties are declared, never computed: finiteness of an
// invariant over an infinite class and density are not decidable from
// finite data. The rule tables below transcribe the published dichotomies
// over these declared flags, rejecting combinations that contradict known
// implications between the invariants.

enum class Finiteness { finite, infinite, unknown };
enum class PatternClosure { monotone, hereditary, minor_closed };
enum class Density { nowhere_dense, somewhere_dense, unknown };

std::string to_string(Finiteness f);
std::string to_string(Density d);
std::string to_string(PatternClosure c);

struct PatternClassFlags {
    PatternClosure closure = PatternClosure::hereditary;
    Finiteness size = Finiteness::unknown;              // |H|
    Finiteness matching = Finiteness::unknown;          // m
    Finiteness induced_matching = Finiteness::unknown;  // m_ind
    Finiteness induced_biclique = Finiteness::unknown;  // beta_ind
    Finiteness clique = Finiteness::unknown;            // omega
    Finiteness independence = Finiteness::unknown;      // alpha
    Finiteness treewidth = Finiteness::unknown;         // tw
};

struct HostClassFlags {
    // host classes are always monotone here
    Density density = Density::unknown;
    Finiteness clique = Finiteness::unknown;        // omega
    Finiteness biclique = Finiteness::unknown;      // beta
    Finiteness independence = Finiteness::unknown;  // alpha
};

enum class VerdictClass { P, FPT, hard, hard_tight, unclassified };

enum class LowerBoundForm {
    none,
    n_to_o_k_over_log_k, // no f(k) * n^{o(k / log k)}
    n_to_o_k,            // no f(k) * n^{o(k)}
    n_to_o_tw,           // no f(|H|) * n^{o(tw(H))}
};

struct Verdict {
    VerdictClass klass = VerdictClass::unclassified;
    LowerBoundForm bound = LowerBoundForm::none;
    std::string citation;

    bool tractable() const { return klass == VerdictClass::P || klass == VerdictClass::FPT; }
    bool hard() const { return klass == VerdictClass::hard || klass == VerdictClass::hard_tight; }
};

std::string to_string(VerdictClass v);
std::string to_string(LowerBoundForm b);
std::string to_string(const Verdict& v);

// Throw FlagError naming the violated implication when the declared flags
// are impossible; also derive forced values (e.g. a finite class has every
// invariant finite) before classification.
void validate_pattern_flags(const PatternClassFlags& flags);
void validate_host_flags(const HostClassFlags& flags);

// Subgraph-counting dichotomy for hereditary patterns over monotone hosts.
Verdict classify_sub(const PatternClassFlags& pattern, const HostClassFlags& host);

// Induced-subgraph-counting dichotomy for hereditary patterns.
Verdict classify_indsub(const PatternClassFlags& pattern, const HostClassFlags& host);

// Homomorphism-counting trichotomy for monotone patterns; hereditary-only
// pattern classes are rejected as unsupported.
Verdict classify_hom(const PatternClassFlags& pattern, const HostClassFlags& host);

} // namespace countlab
