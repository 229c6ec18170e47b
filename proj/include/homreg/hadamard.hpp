#pragma once

#include "homreg/graph.hpp"

#include <Eigen/Core>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace homreg {

// Square matrix with entries in {-1, +1}.
using SignMatrix = Eigen::MatrixXi;

bool is_sign_matrix(const SignMatrix& m);
bool is_hadamard(const SignMatrix& m); // H * H^T == s * I

// A validated Hadamard matrix. Indices are 0-based everywhere in the library.
class HadamardMatrix {
public:
    HadamardMatrix() = default;
    explicit HadamardMatrix(SignMatrix m); // throws if not Hadamard

    int rank() const { return static_cast<int>(m_.rows()); }
    int operator()(int i, int j) const { return m_(i, j); }
    const SignMatrix& matrix() const { return m_; }
    bool operator==(const HadamardMatrix& o) const { return m_ == o.m_; }

private:
    SignMatrix m_;
};

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);
HadamardMatrix sylvester(int t); // rank 2^t
HadamardMatrix had12();

// Text format: "hm <s>" then s rows of s characters from {+,-}.
HadamardMatrix read_hm(std::istream& in);
HadamardMatrix read_hm_file(const std::filesystem::path& path);
void write_hm(std::ostream& out, const HadamardMatrix& h);

// Vertex layout for rank s: r_i^+ = 2i, r_i^- = 2i+1, c_j^+ = 2s+2j, c_j^- = 2s+2j+1.
// Rows are red (colour 0), columns blue (colour 1). Accepts any square sign matrix.
ColouredGraph extended_hadamard(const SignMatrix& h);
// G(H): the same vertices without the matching edges, uncoloured.
ColouredGraph hadamard_graph(const SignMatrix& h);

// Counting identities of G(H): s-regularity, s/2 common neighbours for vertices at distance 2,
// and s/4 common neighbours for triples at pairwise distance 2. Checked over all pairs and triples.
struct HadamardGraphIdentities {
    bool regular = false;
    bool pairs = false;
    bool triples = false;
    long distance_two_pairs = 0;
    long distance_two_triples = 0;
    bool all() const { return regular && pairs && triples; }
};
HadamardGraphIdentities hadamard_graph_identities(const SignMatrix& h);

// Equivalence under row/column permutations and negations, decided by isomorphism of the
// extended graphs. Accepts any square sign matrices.
bool are_equivalent(const SignMatrix& a, const SignMatrix& b);

// Inverse of extended_hadamard up to relabelling. Red pair-cliques are ordered by their
// smaller vertex, which plays the role of r_i^+; likewise for blue.
std::optional<HadamardMatrix> recognize_extended_hadamard(const ColouredGraph& g);

// Signed permutation: basis vector l goes to sign[l] * e_{perm[l]}.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;

    int degree() const { return static_cast<int>(perm.size()); }
    int entry(int k, int l) const { return perm[l] == k ? sign[l] : 0; }
    bool operator==(const SignedPerm&) const = default;
};
SignedPerm identity_signed(int n);
SignedPerm compose(const SignedPerm& first, const SignedPerm& then); // matrix product then * first
SignedPerm inverse(const SignedPerm& p);
SignedPerm kronecker(const SignedPerm& a, const SignedPerm& b);
SignMatrix to_matrix(const SignedPerm& p);
SignedPerm diagonal(const std::vector<int>& signs);
SignedPerm permutation(const std::vector<int>& perm);

// (A,B) acts on H as A H B^{-1}.
struct MonomialPair {
    SignedPerm a, b;
    int degree() const { return a.degree(); }
    bool operator==(const MonomialPair&) const = default;
};
MonomialPair compose(const MonomialPair& first, const MonomialPair& then);
MonomialPair inverse(const MonomialPair& p);
MonomialPair kronecker(const MonomialPair& x, const MonomialPair& y);

bool verify_automorphism(const SignMatrix& h, const MonomialPair& p);
std::vector<int> nu(const MonomialPair& p); // permutation part of A

struct OmegaSet {
    int column = 0;
    std::vector<int> members;
    bool contains(int j) const;
};
OmegaSet omega(const SignMatrix& h, int c);

// Automorphism of Syl(2^t) with A_ii = -1 and A_jj = 1 for the other j in {0,1,2}.
MonomialPair sylvester_clique_swap(int t, int i);
// Automorphism of Syl(2^t) with A_00 = A_11 = 1 and B_cj != 0; requires j in omega_c.
MonomialPair sylvester_column_map(int t, int c, int j);

struct Had12LemmaPairs {
    std::vector<MonomialPair> row_pairs;    // index i: A_ii = -1, other A_jj = 1 (j < 3)
    std::vector<MonomialPair> column_pairs; // index j: maps column 0 to column j
};
// Decodes the rank-12 tables; throws IntegrityError naming any row that fails.
Had12LemmaPairs had12_lemma_pairs();
// Composed pair with A_00 = A_11 = 1 and B_cj != 0 for j in omega_c(had12).
MonomialPair had12_column_map(const Had12LemmaPairs& pairs, int c, int j);

} // namespace homreg
