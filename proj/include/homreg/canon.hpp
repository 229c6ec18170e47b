#pragma once

#include "homreg/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace homreg {

// perm[v] is the image of v.
using Perm = std::vector<Vertex>;

Perm identity_perm(int n);
Perm compose(const Perm& first, const Perm& then); // v -> then[first[v]]
Perm inverse(const Perm& p);
bool is_automorphism(const ColouredGraph& g, const Perm& p);

struct CanonicalForm {
    std::string code;              // byte string, equal iff isomorphic
    std::vector<Vertex> labelling; // labelling[position] = vertex
};

// Canonical form of g with the listed vertices individualized in order. Two calls on the
// same graph return equal codes exactly when some automorphism maps one tuple onto the other.
CanonicalForm canonical_form(const ColouredGraph& g, std::span<const Vertex> individualized = {});
std::string canonical_code(const ColouredGraph& g);

// Colour-preserving isomorphism a -> b, or nullopt. With allow_colour_permutation the
// colour classes may be matched by any bijection of colour ids.
std::optional<Perm> are_isomorphic(const ColouredGraph& a, const ColouredGraph& b,
                                   bool allow_colour_permutation = false);

struct PermGroup {
    int degree = 0;
    std::vector<Perm> generators;
    std::vector<Vertex> base;
    std::vector<int> orbit_sizes;    // basic orbit lengths along the base
    boost::multiprecision::cpp_int order;
};

// Colour-preserving automorphism group with an exact order.
PermGroup automorphism_group(const ColouredGraph& g);

// For each vertex, the least vertex of its orbit under the generated group.
std::vector<Vertex> orbit_representatives(int n, const std::vector<Perm>& generators);

} // namespace homreg
