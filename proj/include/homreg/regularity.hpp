#pragma once

#include "homreg/canon.hpp"
#include "homreg/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homreg {

// (n,d,lambda,mu). lambda is undefined for edgeless graphs and mu for complete graphs.
struct SrgParams {
    long n = 0;
    long d = 0;
    std::optional<long> lambda;
    std::optional<long> mu;

    bool complete() const { return !mu.has_value(); }
    bool edgeless() const { return !lambda.has_value(); }
    bool operator==(const SrgParams&) const = default;
};
std::string to_string(const SrgParams& p);

// Parameters of the underlying uncoloured graph, or nullopt if it is not strongly regular.
std::optional<SrgParams> srg_parameters(const ColouredGraph& g);
bool is_primitive(const ColouredGraph& g);

enum class Property { TR, UH };
const char* to_string(Property p);

// Failure evidence: two vertex tuples whose induced subgraphs are isomorphic via
// first[i] -> second[i], yet behave differently.
struct Witness {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
    // TR only: colour class and the two common-neighbourhood counts.
    Colour colour = -1;
    long lambda_first = 0;
    long lambda_second = 0;
};

struct RegularityVerdict {
    Property property = Property::TR;
    int k = 0;
    bool holds = true;
    int failed_level = 0; // smallest m <= k at which the property fails
    std::optional<Witness> witness;
};

// Global cap for worker threads (0 = hardware concurrency).
void set_thread_count(int n);
int thread_count();

RegularityVerdict is_k_tuple_regular(const ColouredGraph& g, int k);

// Refuses graphs with more than kUhVertexLimit vertices unless force is set.
inline constexpr int kUhVertexLimit = 48;
RegularityVerdict is_k_ultrahomogeneous(const ColouredGraph& g, int k, bool force = false);

// Largest level <= k_max at which the property holds (0 if it fails at 1).
int max_regularity(const ColouredGraph& g, Property p, int k_max, bool force = false);

// Re-checks a failure witness independently of the checker that produced it.
bool validate_witness(const ColouredGraph& g, const RegularityVerdict& v);

// G[N^R(b)] and G[R \ N^R(b)]; an empty part is returned as nullopt.
std::pair<std::optional<ColouredGraph>, std::optional<ColouredGraph>>
colour_subconstituents(const ColouredGraph& g, Colour r, Vertex b);

// (s,t) if the underlying graph is sK_t.
std::optional<std::pair<int, int>> recognize_clique_union(const ColouredGraph& g);

struct RookOrShrikhande {
    enum Kind { Rook, Shrikhande, Neither } kind = Neither;
    int m = 0;
};
RookOrShrikhande recognize_rook_or_shrikhande(const ColouredGraph& g);

} // namespace homreg
