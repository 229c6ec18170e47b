#pragma once

// Brute-force oracles and generators shared by the unit tests. Everything here is
// deliberately naive: no canonical forms, no orbit pruning, no shared code with the library
// beyond the graph container.

#include "homreg/canon.hpp"
#include "homreg/catalog.hpp"
#include "homreg/graph.hpp"
#include "homreg/hadamard.hpp"
#include "homreg/operations.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace test {

using homreg::Colour;
using homreg::ColouredGraph;
using homreg::Edge;
using homreg::Vertex;

inline ColouredGraph graph(int n, std::vector<Colour> colours, std::vector<Edge> edges)
{
    if (colours.empty()) colours.assign(n, 0);
    return homreg::make_graph(n, colours, edges);
}

// Random graph with exactly `c` colours (c <= n) and edge probability p.
inline ColouredGraph random_graph(std::mt19937& rng, int n, int c, double p)
{
    std::vector<Colour> cols(n);
    std::iota(cols.begin(), cols.begin() + c, 0);
    std::uniform_int_distribution<int> pick(0, c - 1);
    for (int v = c; v < n; ++v) cols[v] = pick(rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return homreg::make_graph(n, cols, es);
}

inline ColouredGraph random_graph(std::mt19937& rng, int n_min, int n_max, int c_max)
{
    const int n = std::uniform_int_distribution<int>(n_min, n_max)(rng);
    const int c = std::uniform_int_distribution<int>(1, std::min(c_max, n))(rng);
    const double p = std::uniform_real_distribution<double>(0.15, 0.85)(rng);
    return random_graph(rng, n, c, p);
}

// Relabels vertex v as perm[v].
inline ColouredGraph permuted(const ColouredGraph& g, const std::vector<Vertex>& perm)
{
    const int n = g.order();
    std::vector<Colour> cols(n);
    for (Vertex v = 0; v < n; ++v) cols[perm[v]] = g.colour(v);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
    std::sort(es.begin(), es.end());
    return homreg::make_graph(n, cols, es);
}

// Restricted growth strings of length n: each colouring up to renaming of colour ids.
inline std::vector<std::vector<Colour>> colourings_up_to_renaming(int n)
{
    std::vector<std::vector<Colour>> out;
    std::vector<Colour> cur(n, 0);
    auto rec = [&](auto&& self, int i, int used) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (Colour c = 0; c <= used && c < n; ++c) {
            cur[i] = c;
            self(self, i + 1, std::max(used, c + 1));
        }
    };
    rec(rec, 0, 0);
    return out;
}

// Every labelled graph with the given colouring, as an edge bitmask over the pairs (u<v).
inline ColouredGraph graph_from_mask(int n, const std::vector<Colour>& cols, unsigned long mask)
{
    std::vector<Edge> es;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) es.emplace_back(u, v);
    return homreg::make_graph(n, cols, es);
}

// Graphs on n vertices up to isomorphism, by vertex augmentation and dedup through the
// library's canonical code (itself cross-checked against the permutation oracle).
inline std::vector<ColouredGraph> uncoloured_graphs_up_to_iso(int n)
{
    std::vector<ColouredGraph> cur{graph(1, {}, {})};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> seen;
        std::vector<ColouredGraph> next;
        for (const auto& g : cur)
            for (unsigned nb = 0; nb < (1u << (m - 1)); ++nb) {
                auto es = g.edges();
                for (int v = 0; v < m - 1; ++v)
                    if ((nb >> v) & 1u) es.emplace_back(v, m - 1);
                auto h = homreg::make_graph(m, es);
                if (seen.insert(homreg::canonical_code(h)).second) next.push_back(h);
            }
        cur = std::move(next);
    }
    return cur;
}

// ---- isomorphism oracle ----

// Lexicographically least (colours, adjacency) string over all n! relabellings.
inline std::string oracle_canonical(const ColouredGraph& g)
{
    const int n = g.order();
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::string best;
    do {
        std::string s;
        for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + g.colour(p[i])));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.push_back(g.adjacent(p[i], p[j]) ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Same order as oracle_canonical but only over relabellings that list the colour classes in
// ascending colour order, which is where the minimum always lies. Still brute force.
inline std::string oracle_canonical_sorted(const ColouredGraph& g)
{
    const int n = g.order();
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::stable_sort(p.begin(), p.end(), [&](Vertex a, Vertex b) { return g.colour(a) < g.colour(b); });
    std::vector<int> starts{0};
    for (int i = 1; i < n; ++i)
        if (g.colour(p[i]) != g.colour(p[i - 1])) starts.push_back(i);
    starts.push_back(n);
    std::string best;
    // Odometer over the permutations of each class block.
    while (true) {
        std::string s;
        for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('a' + g.colour(p[i])));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.push_back(g.adjacent(p[i], p[j]) ? '1' : '0');
        if (best.empty() || s < best) best = s;
        std::size_t blk = 0;
        for (; blk + 1 < starts.size(); ++blk)
            if (std::next_permutation(p.begin() + starts[blk], p.begin() + starts[blk + 1])) break;
        if (blk + 1 == starts.size()) break;
    }
    return best;
}

// Tuple map a[i] -> b[i] is a colour-preserving isomorphism of the induced subgraphs.
inline bool tuple_iso(const ColouredGraph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (g.colour(a[i]) != g.colour(b[i])) return false;
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (g.adjacent(a[i], a[j]) != g.adjacent(b[i], b[j])) return false;
    }
    return true;
}

// ---- regularity oracles ----

inline void subsets_of_size(int n, int m, std::vector<std::vector<Vertex>>& out)
{
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

inline std::vector<int> lambda_vector(const ColouredGraph& g, const std::vector<Vertex>& u)
{
    std::vector<int> lam(g.num_colours(), 0);
    for (Vertex x = 0; x < g.order(); ++x) {
        bool all = true;
        for (Vertex y : u)
            if (x == y || !g.adjacent(x, y)) all = false;
        if (all) ++lam[g.colour(x)];
    }
    return lam;
}

// Some bijection a -> b is a colour-preserving isomorphism.
inline bool sets_isomorphic(const ColouredGraph& g, const std::vector<Vertex>& a, std::vector<Vertex> b)
{
    std::sort(b.begin(), b.end());
    do {
        if (tuple_iso(g, a, b)) return true;
    } while (std::next_permutation(b.begin(), b.end()));
    return false;
}

// Smallest m <= k at which k-TR fails, comparing every pair of m-subsets; 0 if it holds.
inline int oracle_tr_failure(const ColouredGraph& g, int k)
{
    for (int m = 1; m <= std::min(k, g.order()); ++m) {
        std::vector<std::vector<Vertex>> subs;
        subsets_of_size(g.order(), m, subs);
        std::vector<std::vector<int>> lam;
        for (const auto& s : subs) lam.push_back(lambda_vector(g, s));
        for (std::size_t i = 0; i < subs.size(); ++i)
            for (std::size_t j = i + 1; j < subs.size(); ++j)
                if (lam[i] != lam[j] && sets_isomorphic(g, subs[i], subs[j])) return m;
    }
    return 0;
}

inline std::vector<std::vector<Vertex>> all_automorphisms(const ColouredGraph& g)
{
    const int n = g.order();
    std::vector<Vertex> p(n), id(n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<Vertex>> out;
    do {
        if (tuple_iso(g, id, p)) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

// Smallest m <= k at which k-UH fails, over every ordered pair of m-tuples; 0 if it holds.
inline int oracle_uh_failure(const ColouredGraph& g, int k)
{
    const auto auts = all_automorphisms(g);
    for (int m = 1; m <= std::min(k, g.order()); ++m) {
        std::vector<std::vector<Vertex>> subs;
        subsets_of_size(g.order(), m, subs);
        for (const auto& a : subs)
            for (const auto& bs : subs) {
                auto b = bs;
                do {
                    if (!tuple_iso(g, a, b)) continue;
                    bool extends = false;
                    for (const auto& p : auts) {
                        bool ok = true;
                        for (int i = 0; i < m && ok; ++i) ok = p[a[i]] == b[i];
                        if (ok) {
                            extends = true;
                            break;
                        }
                    }
                    if (!extends) return m;
                } while (std::next_permutation(b.begin(), b.end()));
            }
    }
    return 0;
}

// ---- Hadamard equivalence oracle ----

// Exhaustive over signed row permutations A; for each, the columns of A*a must be a signed
// permutation of the columns of b. Covers all (s!*2^s)^2 monomial pairs.
inline bool oracle_equivalent(const homreg::SignMatrix& a, const homreg::SignMatrix& b)
{
    const int s = static_cast<int>(a.rows());
    if (b.rows() != s) return false;
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned signs = 0; signs < (1u << s); ++signs) {
            homreg::SignMatrix x(s, s);
            for (int i = 0; i < s; ++i)
                for (int j = 0; j < s; ++j) x(i, j) = ((signs >> i) & 1u ? -1 : 1) * a(perm[i], j);
            std::vector<bool> used(s, false);
            bool ok = true;
            for (int j = 0; j < s && ok; ++j) {
                bool found = false;
                for (int l = 0; l < s && !found; ++l) {
                    if (used[l]) continue;
                    if (x.col(j) == b.col(l) || x.col(j) == -b.col(l)) {
                        used[l] = true;
                        found = true;
                    }
                }
                ok = found;
            }
            if (ok) return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// ---- operation corpus ----

inline bool independent(const ColouredGraph& g, Colour c)
{
    auto vs = g.vertices_of_colour(c);
    for (Vertex u : vs)
        for (Vertex v : vs)
            if (u < v && g.adjacent(u, v)) return false;
    return true;
}

// Random graph in which colour class 0 is independent.
inline ColouredGraph with_independent_class(std::mt19937& rng, int n_max, int c_max)
{
    auto g = random_graph(rng, 1, n_max, c_max);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (!(g.colour(u) == 0 && g.colour(v) == 0)) es.push_back({u, v});
    return homreg::make_graph(g.order(), g.colouring(), es);
}

// Catalog bichromatic corpus used for the preservation checks.
inline std::vector<ColouredGraph> catalog_bichromatic()
{
    using namespace homreg;
    auto eh = [](int t) { return extended_hadamard(sylvester(t).matrix()); };
    return {eh(1),
            eh(2),
            colour_complement(eh(1), 0, 1),
            colour_complement(eh(1), 0, 0),
            disjoint_union(cycle(5), complete(1)),
            disjoint_union(rook(3), complement(complete(2))),
            matching_extension(complement(complete(3)), 0),
            colour_complement(disjoint_union(cycle(5), complete(2)), 0, 1)};
}

// ---- Hadamard helpers ----

inline homreg::SignMatrix random_sign_matrix(std::mt19937& rng, int s)
{
    homreg::SignMatrix m(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) m(i, j) = rng() % 2 ? 1 : -1;
    return m;
}

inline homreg::SignedPerm random_signed_perm(std::mt19937& rng, int s)
{
    homreg::SignedPerm p;
    p.perm.resize(s);
    std::iota(p.perm.begin(), p.perm.end(), 0);
    std::shuffle(p.perm.begin(), p.perm.end(), rng);
    for (int i = 0; i < s; ++i) p.sign.push_back(rng() % 2 ? 1 : -1);
    return p;
}

// A * m * B^{-1}.
inline homreg::SignMatrix act(const homreg::MonomialPair& p, const homreg::SignMatrix& m)
{
    return homreg::to_matrix(p.a) * m * homreg::to_matrix(homreg::inverse(p.b));
}

} // namespace test
