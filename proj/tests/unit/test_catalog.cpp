#include "support.hpp"

#include "homreg/catalog.hpp"
#include "homreg/designs.hpp"
#include "homreg/error.hpp"
#include "homreg/regularity.hpp"
#include "homreg/srg_analysis.hpp"

#include <doctest.h>

using namespace homreg;

namespace {

SrgParams P(long n, long d, std::optional<long> l, std::optional<long> m) { return SrgParams{n, d, l, m}; }

// Every vertex neighbourhood induces a graph isomorphic to h.
bool all_neighbourhoods(const ColouredGraph& g, const ColouredGraph& h)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        auto nb = g.neighbours(v).members();
        if (!are_isomorphic(induced(g, nb), h)) return false;
    }
    return true;
}

} // namespace

TEST_SUITE("catalog") {

TEST_CASE("rook's graphs")
{
    CHECK(srg_parameters(rook(3)) == P(9, 4, 1, 2));
    CHECK(rook(1).order() == 1);
    for (int m = 2; m <= 6; ++m) CHECK(srg_parameters(rook(m)) == P(m * m, 2 * m - 2, m - 2, 2));
    CHECK(all_neighbourhoods(rook(4), union_cliques(2, 3)));
    CHECK(all_neighbourhoods(sporadic(Sporadic::Shrikhande), cycle(6)));
    CHECK(srg_parameters(sporadic(Sporadic::Shrikhande)) == P(16, 6, 2, 2));
}

TEST_CASE("cycles, cliques and clique unions")
{
    CHECK(srg_parameters(cycle(5)) == P(5, 2, 0, 1));
    CHECK_FALSE(srg_parameters(cycle(6)).has_value());
    CHECK(recognize_clique_union(union_cliques(2, 3)) == std::pair{2, 3});
    CHECK(recognize_clique_union(union_cliques(1, 4)) == std::pair{1, 4});
    CHECK(are_isomorphic(union_cliques(1, 4), complete(4)).has_value());
    CHECK_THROWS_AS(cycle(2), Error);
}

TEST_CASE("sporadic graphs")
{
    CHECK(srg_parameters(sporadic(Sporadic::Clebsch)) == P(16, 5, 0, 2));
    CHECK(srg_parameters(sporadic(Sporadic::Schlafli)) == P(27, 16, 10, 8));
    CHECK(srg_parameters(sporadic(Sporadic::HigmanSims)) == P(100, 22, 0, 6));
    CHECK(srg_parameters(sporadic(Sporadic::McLaughlin)) == P(275, 112, 30, 56));
    CHECK(sporadic(Sporadic::McLaughlin).num_edges() == 15400);
    CHECK(parse_sporadic("schlafli") == Sporadic::Schlafli);
    CHECK_FALSE(parse_sporadic("petersen").has_value());
}

TEST_CASE("affine polar graphs")
{
    // d = 1, plus type: the nonzero singular vectors of x1*x2 are 10 and 01, giving C4.
    auto a1 = affine_polar(1, true);
    CHECK(a1.order() == 4);
    CHECK(are_isomorphic(a1, cycle(4)).has_value());
    for (int d = 2; d <= 3; ++d)
        for (bool plus : {true, false}) {
            auto g = affine_polar(d, plus);
            CHECK(g.order() == (1 << (2 * d)));
            auto p = srg_parameters(g);
            REQUIRE(p.has_value());
            CHECK(srg_identity_check(*p));
            CHECK(max_totally_singular_dimension(d, plus) == (plus ? d : d - 1));
        }
    CHECK(max_totally_singular_dimension(1, true) == 1);
    CHECK(max_totally_singular_dimension(1, false) == 0);
    CHECK(max_totally_singular_dimension(2, false) == 1);
    CHECK_THROWS_AS(affine_polar(kAffinePolarMaxD + 1, true), Error);
}

TEST_CASE("generalized quadrangle incidence graphs")
{
    auto q2 = gq_q5minus(2);
    REQUIRE(q2.num_colours() == 2);
    CHECK(q2.class_size(0) == 27);
    CHECK(q2.class_size(1) == 45);
    for (Vertex v = 0; v < q2.order(); ++v) {
        CHECK(q2.degree(v) == (q2.colour(v) == 0 ? 5 : 3));
        for (Vertex u : q2.neighbours(v).members()) CHECK(q2.colour(u) != q2.colour(v));
    }
    CHECK_FALSE(srg_parameters(q2).has_value());
    for (int q : {2, 3}) {
        auto g = gq_q5minus(q);
        auto lines = g.vertices_of_colour(1);
        for (Vertex l : lines) CHECK(g.degree(l) == q + 1);
        // Two distinct lines meet in at most one point.
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                std::vector<Vertex> u{lines[i], lines[j]};
                CHECK(lambda(g, u, 0) <= 1);
            }
    }
    CHECK_FALSE(gq_supported(4 * 4));
}

TEST_CASE("Steiner systems from the Golay code")
{
    auto w = witt_support();
    CHECK(w.octads.size() == 759);
    CHECK(w.s5824.num_blocks() == 759);
    CHECK(w.s3622.num_blocks() == 77);
    CHECK(w.s3622.v == 22);
    auto r = design_check(w.s3622, 3);
    CHECK(r.is_design());
    CHECK(*r.k == 6);
    CHECK(*r.lambda == 1);
    CHECK_FALSE(r.symmetric);
    auto r5 = design_check(w.s5824, 5);
    CHECK(*r5.k == 8);
    CHECK(*r5.lambda == 1);
}

TEST_CASE("strongly regular induced subgraphs of rook(3) and rook(4) are clique unions or rook graphs")
{
    for (int m : {3, 4}) {
        auto g = rook(m);
        const int n = g.order();
        long srg = 0;
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            std::vector<Vertex> vs;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1u) vs.push_back(v);
            auto h = induced(g, vs);
            if (!srg_parameters(h)) continue;
            ++srg;
            const bool clique_union = recognize_clique_union(h).has_value();
            bool rook_like = false;
            for (int k = 2; k <= m; ++k)
                if (h.order() == k * k && are_isomorphic(h, rook(k))) rook_like = true;
            CHECK((clique_union || rook_like));
        }
        CHECK(srg > 0);
    }
}

TEST_CASE("recognizers")
{
    CHECK(recognize_rook_or_shrikhande(rook(4)).kind == RookOrShrikhande::Rook);
    CHECK(recognize_rook_or_shrikhande(rook(4)).m == 4);
    CHECK(recognize_rook_or_shrikhande(sporadic(Sporadic::Shrikhande)).kind == RookOrShrikhande::Shrikhande);
    CHECK(recognize_rook_or_shrikhande(sporadic(Sporadic::Clebsch)).kind == RookOrShrikhande::Neither);
    CHECK_FALSE(recognize_clique_union(cycle(5)).has_value());
}

TEST_CASE("generate dispatch")
{
    FamilySpec s;
    s.tag = "rook";
    s.m = 3;
    CHECK(generate(s) == rook(3));
    s.tag = "nonsense";
    CHECK_THROWS_AS(generate(s), Error);
}

} // TEST_SUITE
