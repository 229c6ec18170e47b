#pragma once

#include "homreg/graph.hpp"
#include "homreg/hadamard.hpp"
#include "homreg/operations.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace homreg {

// The four outcomes for two classes that both induce disjoint unions of cliques.
enum class Clause { Homogeneous, Matching, BlowUp, ExtendedHadamard };
const char* to_string(Clause c);

// Clauses that hold for classes r and b, in the order above. Empty when a class does not
// induce a disjoint union of cliques or when none holds.
std::vector<Clause> bichromatic_clauses(const ColouredGraph& g, Colour r, Colour b);
// First holding clause of a two-coloured graph, or nullopt.
std::optional<Clause> bichromatic_clause(const ColouredGraph& g);

// Class x induces sK_t with t >= 2 and the members of each clique have equal neighbourhoods
// outside x.
bool is_homogeneous_blow_up_of(const ColouredGraph& g, Colour x);

enum class CoreKind { Family, ExtendedHadamard, UnknownPrimitive, Unknown };
const char* to_string(CoreKind k);

struct Levels {
    int cap = 0;               // min(k_cap, order)
    int max_tr = 0;
    std::optional<int> max_uh; // absent when the vertex limit refused the check
};

struct CoreVerdict {
    ColouredGraph graph;
    CoreKind kind = CoreKind::Unknown;
    std::string label;        // e.g. "rook(3)", "co(schlafli)", "extended_hadamard(syl(2))"
    bool complemented = false; // family matched after complementing the core
    // Colour complementations applied before recognising an extended Hadamard graph.
    std::vector<std::pair<Colour, Colour>> toggles;
    std::optional<HadamardMatrix> hadamard;
    std::optional<Clause> clause; // for two-coloured cores
    Levels levels;
};

struct ClassificationVerdict {
    int k_cap = 0;
    ReductionTrace trace;
    std::vector<CoreVerdict> cores;
    std::optional<Clause> clause; // for two-coloured inputs
    Levels levels;
};

// Reduces g, labels each core against the monochromatic families (directly and after
// complementation) and as an extended Hadamard graph, and measures TR and UH levels up to
// k_cap. Every label is re-verified against a freshly built reference graph.
ClassificationVerdict classify(const ColouredGraph& g, int k_cap, bool force_uh = false);

// Extended Hadamard matrix of g after some of the complementations (0,0), (1,1), (0,1),
// trying the fewest toggles first; the toggles used are written to `toggles`.
std::optional<HadamardMatrix> recognize_extended_hadamard_up_to_complement(
    const ColouredGraph& g, std::vector<std::pair<Colour, Colour>>* toggles = nullptr);

// Re-checks a core label by isomorphism or recognition.
bool verify_label(const CoreVerdict& v);

// Monochromatic family label of g itself (not its complement), or nullopt.
std::optional<std::string> family_label(const ColouredGraph& g);

// ---- theorem harnesses ----

struct HarnessCheck {
    std::string name;
    long instances = 0;       // instances examined
    long passing = 0;         // instances passing the regularity hypothesis
    long counterexamples = 0; // hypothesis passes but conclusion fails
    std::vector<std::string> notes;
    bool ok() const { return counterexamples == 0; }
};

struct HarnessReport {
    std::string suite;
    std::vector<HarnessCheck> checks;
    bool ok() const;
};

struct BichromaticBounds {
    int max_blue_primitive = 3; // blue class size attached to the primitive red cores
    int max_class = 6;          // class size bound for the clique-union pairs
    int corpus = 400;           // generated instances for the irreducible-core check
};

// Calls `leaf` on graphs formed by adding a new colour class inducing `cliques` disjoint
// `size`-cliques to a base of at most 20 vertices. Interchangeable new vertices are
// enumerated once, and partial extensions with two isomorphic subsets of at most three
// vertices that have different common-neighbour counts into a base colour are cut. Every
// 3-TR extension is reached up to isomorphism. Returns the number of leaves.
long enumerate_clique_extensions(const ColouredGraph& base, int cliques, int size,
                                 const std::function<void(const ColouredGraph&)>& leaf);

HarnessReport verify_bichromatic_theorems(const BichromaticBounds& bounds = {});
HarnessReport verify_trichromatic_theorem(int y_max = 4);
// Constructive automorphisms of the Sylvester matrices (t = 2..5) and the rank-12 tables.
HarnessReport verify_hadamard_lemmas();
// The lemma checks plus the counting identities, the regularity hierarchy and recognition.
HarnessReport verify_hadamard_theorems();

} // namespace homreg
