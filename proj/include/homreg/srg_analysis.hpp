#pragma once

#include "homreg/graph.hpp"
#include "homreg/regularity.hpp"

#include <boost/rational.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homreg {

using Rational = boost::rational<long long>;

// d(d - lambda - 1) == (n - d - 1) mu. Throws if lambda or mu is undefined.
bool srg_identity_check(const SrgParams& p);

enum class Rejection { Feasible, D2, Lambda2, Mu2 };
const char* to_string(Rejection r);

// Parameters of H[V2] forced by those of H and H[V1] when both parts are strongly regular.
struct PartitionDerivation {
    SrgParams whole;
    SrgParams part1;
    long n2 = 0;
    Rational d2;
    std::optional<Rational> lambda2; // undefined when d2 == 0
    std::optional<Rational> mu2;     // undefined when d2 == n2 - 1
    Rejection reason = Rejection::Feasible;
};

// Requires whole primitive and 1 <= n1 < n.
PartitionDerivation derive_partition(const SrgParams& whole, const SrgParams& part1);

struct Candidate {
    std::string label; // empty for rows taken from the parameter list
    SrgParams params;
    enum class Source { ParameterList, Imprimitive } source = Source::ParameterList;
};
using ParameterTable = std::vector<Candidate>;

// Rows of a CSV file with header n,d,lambda,mu, in file order.
ParameterTable load_parameter_list(const std::filesystem::path& path);
std::filesystem::path default_parameter_list();

// K_t (t <= t_max), co(K_s) (2 <= s <= s_max), sK_t (s,t >= 2, ordered by t then s) and
// co(sK_t) (s <= t_max, t <= s_max, ordered by s then t), all with at most n_max vertices.
// s_max and t_max are the independence and clique numbers of the host graph.
ParameterTable enumerate_imprimitive_candidates(int n_max, int s_max, int t_max);

struct PruneReport {
    SrgParams whole;
    std::vector<Candidate> candidates; // those passing the prefilter, in input order
    std::vector<PartitionDerivation> rows;
    int pruned = 0;
    int feasible = 0;
};

// Keeps candidates with n1 <= n/2, d1 <= d, lambda1 <= lambda, mu1 <= mu, then derives each.
PruneReport prune_partitions(const SrgParams& whole, const ParameterTable& candidates);

// Round-half-up to three places; integers print bare.
std::string format_rational(const Rational& x);
// One header line plus one CSV row per candidate:
// label,n1,d1,lambda1,mu1,n2,d2,lambda2,mu2,reason
std::string format_appendix(const PruneReport& r);

// Host data for the two graphs of the pruning tables.
struct PruneHost {
    std::string name;
    SrgParams params;
    int independence_number = 0;
    int clique_number = 0;
};
std::optional<PruneHost> prune_host(const std::string& name);
// Parameter-list rows followed by the imprimitive candidates, pruned against the host.
PruneReport prune_host_partitions(const PruneHost& host, const ParameterTable& list);

inline constexpr int kBruteForceMaxOrder = 30;
// A partition into two non-empty parts that both induce strongly regular graphs (degenerate
// cases included), with vertex 0 in the first part; nullopt after exhaustive search.
std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> brute_force_partition(const ColouredGraph& g);

// Clique number by branch and bound.
int clique_number(const ColouredGraph& g);

} // namespace homreg
