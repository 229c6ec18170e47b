#pragma once

#include "homreg/designs.hpp"
#include "homreg/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace homreg {

// Every constructor checks its defining parameters and throws IntegrityError on mismatch.

ColouredGraph rook(int m);                // vertex (i,j) -> m*i + j
ColouredGraph cycle(int t);               // t >= 3
ColouredGraph union_cliques(int s, int t);
ColouredGraph complete(int t);

enum class Sporadic { Clebsch, Schlafli, Shrikhande, HigmanSims, McLaughlin };
ColouredGraph sporadic(Sporadic which);
std::optional<Sporadic> parse_sporadic(const std::string& name);

// Vertices are the integers 0..4^d-1 read as vectors of F_2^{2d}. Plus type uses
// x1x2+...+x_{2d-1}x_{2d}; minus type replaces the last pair with x^2+xy+y^2.
ColouredGraph affine_polar(int d, bool plus);
int quadratic_form_f2(int d, bool plus, unsigned v);
// Largest dimension of a totally singular subspace, by exhaustive search.
int max_totally_singular_dimension(int d, bool plus);
inline constexpr int kAffinePolarMaxD = 5;

// Points (colour 0) and lines (colour 1) of the elliptic quadric in PG(5,q).
ColouredGraph gq_q5minus(int q);
bool gq_supported(int q);

struct WittSupport {
    std::vector<std::uint32_t> octads;   // weight-8 Golay words as 24-bit masks, ascending
    IncidenceStructure s5824;            // S(5,8,24)
    IncidenceStructure s3622;            // S(3,6,22): octads through points 22 and 23, those removed
};
WittSupport witt_support();

// Dispatch used by the command line: family names rook, cycle, union_cliques, complete,
// clebsch, schlafli, shrikhande, higman_sims, mclaughlin, affine_polar, gq_q5minus.
struct FamilySpec {
    std::string tag;
    int m = 0, d = 0, q = 0, s = 0, t = 0;
    bool plus = true;
};
ColouredGraph generate(const FamilySpec& spec);

} // namespace homreg
