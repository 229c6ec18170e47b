#pragma once

#include "homreg/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace homreg {

// Points 0..v-1 and a multiset of blocks. Each block is a sorted point list; the block
// list itself is kept sorted so equal multisets compare equal.
struct IncidenceStructure {
    int v = 0;
    std::vector<std::vector<int>> blocks;

    int num_blocks() const { return static_cast<int>(blocks.size()); }
    bool operator==(const IncidenceStructure&) const = default;
};

// Validates and normalises (sorts) the blocks.
IncidenceStructure make_incidence(int v, std::vector<std::vector<int>> blocks);

struct DesignReport {
    int v = 0;
    int b = 0;
    int t = 0;
    std::optional<int> k;          // uniform block size
    std::optional<long> lambda;    // lambda_t if constant over all t-subsets
    bool symmetric = false;        // b == v
    std::optional<bool> degenerate; // only defined for uniform structures

    bool is_design() const { return k.has_value() && lambda.has_value(); }
};

DesignReport design_check(const IncidenceStructure& s, int t);

// Points = class p (ascending), one block per vertex of class bc: its neighbourhood in p.
IncidenceStructure incidence_from_colour_classes(const ColouredGraph& g, Colour p, Colour bc);

// Points = cb (ascending), one block N(r) & cb per r in cr. cr must be a maximal clique
// inside its colour class, cb a clique inside a different class.
IncidenceStructure clique_pair_design(const ColouredGraph& g, const std::vector<Vertex>& cr,
                                      const std::vector<Vertex>& cb);

// Text format:
//   inc <v> <b>
//   b lines, each listing one block's points (1-indexed); an empty block is written as "-"
IncidenceStructure read_inc(std::istream& in);
IncidenceStructure read_inc_file(const std::filesystem::path& path);
void write_inc(std::ostream& out, const IncidenceStructure& s);

} // namespace homreg
