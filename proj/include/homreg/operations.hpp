#pragma once

#include "homreg/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homreg {

// Toggles every pair between classes c and c2 (inside the class when c == c2).
ColouredGraph colour_complement(const ColouredGraph& g, Colour c, Colour c2);

// Replaces each vertex of the independent class r by a t-clique. Copies of a vertex are
// numbered consecutively in place of the original.
ColouredGraph blow_up(const ColouredGraph& g, Colour r, int t);

// Duplicates the independent class r into a fresh colour joined to r by a perfect matching.
// The fresh colour receives id new_colour (default: c); ids >= new_colour shift up by one.
// Duplicates are appended after the original vertices in the order of r.
ColouredGraph matching_extension(const ColouredGraph& g, Colour r, std::optional<Colour> new_colour = {});

// Vertices and colours of b are placed after those of a.
ColouredGraph disjoint_union(const ColouredGraph& a, const ColouredGraph& b);

enum class Connection { Homogeneous, Matching, Other };
const char* to_string(Connection c);
Connection connection_type(const ColouredGraph& g, Colour r, Colour b);

enum class StepKind { SplitUnion, UndoBlowUp, UndoMatching };
const char* to_string(StepKind k);

// One inverse operation. The colour complementations in `toggles` are applied first, then
// the structural step. Colour ids refer to the graph the step is applied to.
struct ReductionStep {
    StepKind kind = StepKind::SplitUnion;
    std::vector<std::pair<Colour, Colour>> toggles;
    Colour r = -1;                         // blow-up class, or kept class of a matching
    Colour b = -1;                         // removed duplicate class of a matching
    int t = 0;                             // blow-up clique size
    std::vector<std::vector<Colour>> parts; // union: original colour ids of each part, ascending
};

struct Reduction {
    ReductionStep step;
    std::vector<ColouredGraph> results; // one graph, or one per union part
};

inline constexpr int kMaxReductionColours = 16;

// First applicable inverse step under the priority union, blow-up, matching (lowest colour
// ids first), or nullopt if the graph is reduced.
std::optional<Reduction> detect_reduction(const ColouredGraph& g);

// Forward operation of a step: rebuilds a graph isomorphic to the pre-step graph.
ColouredGraph apply_forward(const ReductionStep& step, const std::vector<ColouredGraph>& results);

struct ReductionNode {
    ColouredGraph graph;
    std::optional<ReductionStep> step; // absent for cores
    std::vector<ReductionNode> children;
};

struct ReductionTrace {
    ReductionNode root;
    std::vector<ColouredGraph> cores;  // left-to-right leaves
    bool verified = false;             // recomposition reproduced the input up to isomorphism
    int num_steps() const;
};

// Applies detect_reduction to a fixpoint, recursing into union parts, and verifies the
// recomposition. Throws IntegrityError if the recomposition check fails.
ReductionTrace reduce(const ColouredGraph& g);

} // namespace homreg
