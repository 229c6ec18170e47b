#include "homreg/designs.hpp"

#include "homreg/error.hpp"
#include "homreg/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

namespace homreg {

IncidenceStructure make_incidence(int v, std::vector<std::vector<int>> blocks)
{
    if (v < 0) throw Error("point count must be non-negative");
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= v) throw Error("block point " + std::to_string(b[i]) + " out of range");
            if (i > 0 && b[i] == b[i - 1]) throw Error("block repeats point " + std::to_string(b[i]));
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return {v, std::move(blocks)};
}

namespace {

// Adds every t-subset of block to counts.
void count_subsets(const std::vector<int>& block, int t, std::vector<int>& cur, std::size_t from,
                   std::map<std::vector<int>, long>& counts)
{
    if (static_cast<int>(cur.size()) == t) {
        ++counts[cur];
        return;
    }
    const std::size_t need = t - cur.size();
    for (std::size_t i = from; i + need <= block.size(); ++i) {
        cur.push_back(block[i]);
        count_subsets(block, t, cur, i + 1, counts);
        cur.pop_back();
    }
}

// Binomial coefficient, saturating well above any count compared against it.
long long binom(int n, int k)
{
    if (k < 0 || k > n) return 0;
    long double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r > 4e18L ? static_cast<long long>(4e18) : static_cast<long long>(r + 0.5L);
}

} // namespace

DesignReport design_check(const IncidenceStructure& s, int t)
{
    if (t < 0 || t > s.v) throw Error("design strength t must lie in [0, v]");
    DesignReport r;
    r.v = s.v;
    r.b = s.num_blocks();
    r.t = t;
    r.symmetric = r.b == r.v;
    if (!s.blocks.empty()) {
        const int k = static_cast<int>(s.blocks.front().size());
        if (std::all_of(s.blocks.begin(), s.blocks.end(), [&](const auto& b) { return static_cast<int>(b.size()) == k; }))
            r.k = k;
    }
    if (r.k) r.degenerate = *r.k == 0 || *r.k == 1 || *r.k == s.v - 1 || *r.k == s.v;

    std::map<std::vector<int>, long> counts;
    std::vector<int> cur;
    for (const auto& b : s.blocks) count_subsets(b, t, cur, 0, counts);
    if (counts.empty()) {
        r.lambda = 0;
    } else if (static_cast<long long>(counts.size()) == binom(s.v, t)) {
        const long first = counts.begin()->second;
        if (std::all_of(counts.begin(), counts.end(), [&](const auto& kv) { return kv.second == first; }))
            r.lambda = first;
    }
    return r;
}

IncidenceStructure incidence_from_colour_classes(const ColouredGraph& g, Colour p, Colour bc)
{
    if (p < 0 || p >= g.num_colours() || bc < 0 || bc >= g.num_colours()) throw Error("invalid colour id");
    if (p == bc) throw Error("point and block classes must differ");
    auto points = g.vertices_of_colour(p);
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> blocks;
    for (Vertex b : g.vertices_of_colour(bc)) {
        std::vector<int> block;
        for (Vertex x : (g.neighbours(b) & g.colour_class(p)).members()) block.push_back(index[x]);
        blocks.push_back(std::move(block));
    }
    return make_incidence(static_cast<int>(points.size()), std::move(blocks));
}

namespace {

void require_clique(const ColouredGraph& g, const std::vector<Vertex>& c, const char* name)
{
    if (c.empty()) throw Error(std::string(name) + " is empty");
    for (Vertex v : c)
        if (v < 0 || v >= g.order()) throw Error(std::string(name) + " has a vertex out of range");
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (g.colour(c[i]) != g.colour(c[0])) throw Error(std::string(name) + " spans several colour classes");
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (c[i] == c[j] || !g.adjacent(c[i], c[j])) throw Error(std::string(name) + " is not a clique");
    }
}

} // namespace

IncidenceStructure clique_pair_design(const ColouredGraph& g, const std::vector<Vertex>& cr,
                                      const std::vector<Vertex>& cb)
{
    require_clique(g, cr, "CR");
    require_clique(g, cb, "CB");
    if (g.colour(cr[0]) == g.colour(cb[0])) throw Error("CR and CB lie in the same colour class");
    VertexSet common = g.colour_class(g.colour(cr[0]));
    for (Vertex v : cr) {
        common &= g.neighbours(v);
        common.reset(v);
    }
    if (!common.empty()) throw Error("CR is not a maximal clique of its colour class");

    std::vector<Vertex> points = cb;
    std::sort(points.begin(), points.end());
    std::vector<std::vector<int>> blocks;
    for (Vertex r : cr) {
        std::vector<int> block;
        for (std::size_t i = 0; i < points.size(); ++i)
            if (g.adjacent(r, points[i])) block.push_back(static_cast<int>(i));
        blocks.push_back(std::move(block));
    }
    return make_incidence(static_cast<int>(points.size()), std::move(blocks));
}

IncidenceStructure read_inc(std::istream& in)
{
    std::vector<int> at;
    auto lines = tokenize_lines(in, &at);
    if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "inc") throw Error("missing 'inc v b' header");
    const int v = parse_int(lines[0][1], "v");
    const int b = parse_int(lines[0][2], "b");
    if (v < 0 || b < 0) throw Error("bad inc header values");
    if (static_cast<int>(lines.size()) != 1 + b)
        throw Error("inc body has " + std::to_string(lines.size() - 1) + " blocks, header promises " + std::to_string(b));
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= b; ++i) try {
        std::vector<int> block;
        if (!(lines[i].size() == 1 && lines[i][0] == "-"))
            for (const auto& tok : lines[i]) {
                const int p = parse_int(tok, "point");
                if (p < 1 || p > v) throw Error("point out of range: " + tok);
                block.push_back(p - 1);
            }
        blocks.push_back(std::move(block));
    } catch (const Error& e) {
        rethrow_at_line(at[i], e);
    }
    return make_incidence(v, std::move(blocks));
}

IncidenceStructure read_inc_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return read_inc(in);
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

void write_inc(std::ostream& out, const IncidenceStructure& s)
{
    out << "inc " << s.v << ' ' << s.num_blocks() << '\n';
    for (const auto& b : s.blocks) {
        if (b.empty()) out << '-';
        for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i] + 1;
        out << '\n';
    }
}

} // namespace homreg
