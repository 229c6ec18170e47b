#include "homreg/catalog.hpp"

#include "homreg/error.hpp"
#include "homreg/graph_io.hpp"
#include "homreg/regularity.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <functional>
#include <map>
#include <set>

namespace homreg {

namespace {

void expect_srg(const ColouredGraph& g, const SrgParams& want, const std::string& name)
{
    auto got = srg_parameters(g);
    if (!got || !(*got == want))
        throw IntegrityError(name + " failed its parameter check: expected " + to_string(want) + ", got " +
                             (got ? to_string(*got) : std::string("a graph that is not strongly regular")));
}

} // namespace

ColouredGraph rook(int m)
{
    if (m < 1) throw Error("rook: m must be at least 1");
    std::vector<Edge> edges;
    for (int a = 0; a < m * m; ++a)
        for (int b = a + 1; b < m * m; ++b)
            if (a / m == b / m || a % m == b % m) edges.emplace_back(a, b);
    ColouredGraph g = make_graph(m * m, edges);
    if (m >= 2) expect_srg(g, {m * m, 2L * m - 2, m - 2L, 2L}, "rook(" + std::to_string(m) + ")");
    return g;
}

ColouredGraph cycle(int t)
{
    if (t < 3) throw Error("cycle: order must be at least 3");
    std::vector<Edge> edges;
    for (int i = 0; i < t; ++i) edges.emplace_back(std::min(i, (i + 1) % t), std::max(i, (i + 1) % t));
    return make_graph(t, edges);
}

ColouredGraph union_cliques(int s, int t)
{
    if (s < 1 || t < 1) throw Error("union_cliques: s and t must be at least 1");
    std::vector<Edge> edges;
    for (int c = 0; c < s; ++c)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) edges.emplace_back(c * t + i, c * t + j);
    return make_graph(s * t, edges);
}

ColouredGraph complete(int t) { return union_cliques(1, t); }

namespace {

ColouredGraph clebsch()
{
    std::vector<Edge> edges;
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) {
            int x = u ^ v;
            if (std::popcount(static_cast<unsigned>(x)) == 1 || x == 15) edges.emplace_back(u, v);
        }
    ColouredGraph g = make_graph(16, edges);
    expect_srg(g, {16, 5, 0L, 2L}, "Clebsch graph");
    return g;
}

// Complement of the intersection graph of the 27 lines on a cubic surface:
// a_i (0..5), b_i (6..11), c_ij (12..26).
ColouredGraph schlafli()
{
    struct Line {
        char kind;
        int i, j;
    };
    std::vector<Line> lines;
    for (int i = 0; i < 6; ++i) lines.push_back({'a', i, -1});
    for (int i = 0; i < 6; ++i) lines.push_back({'b', i, -1});
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) lines.push_back({'c', i, j});
    auto meet = [](const Line& x, const Line& y) {
        if (x.kind == 'c' && y.kind == 'c') return x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j;
        if (x.kind == 'c' || y.kind == 'c') {
            const Line& c = x.kind == 'c' ? x : y;
            const Line& o = x.kind == 'c' ? y : x;
            return o.i == c.i || o.i == c.j;
        }
        return x.kind != y.kind && x.i != y.i;
    };
    std::vector<Edge> edges;
    for (int u = 0; u < 27; ++u)
        for (int v = u + 1; v < 27; ++v)
            if (!meet(lines[u], lines[v])) edges.emplace_back(u, v);
    ColouredGraph g = make_graph(27, edges);
    expect_srg(g, {27, 16, 10L, 8L}, "Schlafli graph");
    return g;
}

// Cayley graph on Z_4 x Z_4 with connection set {+-(1,0), +-(0,1), +-(1,1)}.
ColouredGraph shrikhande()
{
    std::vector<Edge> edges;
    for (int u = 0; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) {
            int da = ((v / 4 - u / 4) % 4 + 4) % 4, db = ((v % 4 - u % 4) % 4 + 4) % 4;
            bool adj = (da == 0 && (db == 1 || db == 3)) || (db == 0 && (da == 1 || da == 3)) ||
                       (da == db && (da == 1 || da == 3));
            if (adj) edges.emplace_back(u, v);
        }
    ColouredGraph g = make_graph(16, edges);
    expect_srg(g, {16, 6, 2L, 2L}, "Shrikhande graph");
    for (Vertex v = 0; v < 16; ++v) {
        auto nb = induced(g, g.neighbours(v).members());
        if (!are_isomorphic(nb, cycle(6))) throw IntegrityError("Shrikhande graph: a neighbourhood is not C6");
    }
    return g;
}

ColouredGraph higman_sims()
{
    const WittSupport w = witt_support();
    const auto& blocks = w.s3622.blocks;
    std::vector<Edge> edges;
    for (int p = 0; p < 22; ++p) edges.emplace_back(0, 1 + p);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int p : blocks[b]) edges.emplace_back(1 + p, 23 + static_cast<int>(b));
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(blocks[a].begin(), blocks[a].end(), blocks[b].begin(), blocks[b].end(),
                                  std::back_inserter(common));
            if (common.empty()) edges.emplace_back(23 + static_cast<int>(a), 23 + static_cast<int>(b));
        }
    ColouredGraph g = make_graph(100, edges);
    expect_srg(g, {100, 22, 0L, 6L}, "Higman-Sims graph");
    return g;
}

ColouredGraph mclaughlin()
{
    const auto path = data_dir() / "mclaughlin.cg";
    ColouredGraph g;
    try {
        g = read_cg_file(path);
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        throw IntegrityError(std::string("bundled McLaughlin data is corrupt: ") + e.what());
    }
    if (!g.is_monochromatic()) throw IntegrityError(path.string() + ": McLaughlin graph must be monochromatic");
    expect_srg(g, {275, 112, 30L, 56L}, "McLaughlin graph (" + path.string() + ")");
    return g;
}

} // namespace

ColouredGraph sporadic(Sporadic which)
{
    switch (which) {
    case Sporadic::Clebsch: return clebsch();
    case Sporadic::Schlafli: return schlafli();
    case Sporadic::Shrikhande: return shrikhande();
    case Sporadic::HigmanSims: return higman_sims();
    case Sporadic::McLaughlin: return mclaughlin();
    }
    throw Error("unknown sporadic graph");
}

std::optional<Sporadic> parse_sporadic(const std::string& name)
{
    static const std::map<std::string, Sporadic> names{{"clebsch", Sporadic::Clebsch},
                                                       {"schlafli", Sporadic::Schlafli},
                                                       {"shrikhande", Sporadic::Shrikhande},
                                                       {"higman_sims", Sporadic::HigmanSims},
                                                       {"mclaughlin", Sporadic::McLaughlin}};
    auto it = names.find(name);
    if (it == names.end()) return std::nullopt;
    return it->second;
}

int quadratic_form_f2(int d, bool plus, unsigned v)
{
    int q = 0;
    for (int i = 0; i < d; ++i) {
        int x = (v >> (2 * i)) & 1u, y = (v >> (2 * i + 1)) & 1u;
        if (i == d - 1 && !plus)
            q ^= x ^ (x & y) ^ y; // x^2 + xy + y^2 with x^2 = x over F_2
        else
            q ^= x & y;
    }
    return q;
}

int max_totally_singular_dimension(int d, bool plus)
{
    if (d < 1 || d > kAffinePolarMaxD) throw Error("affine polar: d must lie in [1, 5]");
    const unsigned size = 1u << (2 * d);
    std::vector<unsigned> singular;
    for (unsigned v = 1; v < size; ++v)
        if (quadratic_form_f2(d, plus, v) == 0) singular.push_back(v);
    int best = 0;
    std::vector<unsigned> span{0};
    // Extends span by singular vectors larger than the last one added; a subspace is
    // totally singular iff every element of it is singular.
    std::function<void(std::size_t, int)> grow = [&](std::size_t from, int dim) {
        best = std::max(best, dim);
        if (best == d) return; // Witt index never exceeds half the dimension
        for (std::size_t i = from; i < singular.size() && best < d; ++i) {
            const unsigned v = singular[i];
            if (std::find(span.begin(), span.end(), v) != span.end()) continue;
            bool ok = std::all_of(span.begin(), span.end(),
                                  [&](unsigned w) { return quadratic_form_f2(d, plus, v ^ w) == 0; });
            if (!ok) continue;
            const std::size_t old = span.size();
            for (std::size_t j = 0; j < old; ++j) span.push_back(span[j] ^ v);
            grow(i + 1, dim + 1);
            span.resize(old);
        }
    };
    grow(0, 0);
    return best;
}

ColouredGraph affine_polar(int d, bool plus)
{
    if (d < 1 || d > kAffinePolarMaxD) throw Error("affine polar: d must lie in [1, 5]");
    const int n = 1 << (2 * d);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (quadratic_form_f2(d, plus, static_cast<unsigned>(u ^ v)) == 0) edges.emplace_back(u, v);
    ColouredGraph g = make_graph(n, edges);
    const std::string name = std::string("affine polar graph G") + (plus ? "+" : "-") + "(F_2^" + std::to_string(2 * d) + ")";
    const int want_dim = plus ? d : d - 1;
    if (max_totally_singular_dimension(d, plus) != want_dim)
        throw IntegrityError(name + ": quadratic form has the wrong type");
    const long e = plus ? 1 : -1;
    const long deg = (1L << (2 * d - 1)) + e * (1L << (d - 1)) - 1;
    auto p = srg_parameters(g);
    if (!p || p->d != deg) throw IntegrityError(name + " failed its parameter check");
    return g;
}

namespace {

struct Field {
    int q = 0;
    std::vector<int> add, mul;
    int plus(int a, int b) const { return add[a * q + b]; }
    int times(int a, int b) const { return mul[a * q + b]; }
    int inv(int a) const
    {
        for (int b = 1; b < q; ++b)
            if (times(a, b) == 1) return b;
        throw IntegrityError("field element has no inverse");
    }
};

Field make_field(int q)
{
    Field f;
    f.q = q;
    f.add.resize(q * q);
    f.mul.resize(q * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (q == 4) {
                // Elements are polynomials over F_2 modulo x^2 + x + 1, encoded as bit pairs.
                f.add[a * q + b] = a ^ b;
                int p = 0;
                for (int i = 0; i < 2; ++i)
                    if ((b >> i) & 1) p ^= a << i;
                if (p & 4) p ^= 0b111;
                f.mul[a * q + b] = p;
            } else {
                f.add[a * q + b] = (a + b) % q;
                f.mul[a * q + b] = (a * b) % q;
            }
        }
    return f;
}

} // namespace

bool gq_supported(int q) { return q == 2 || q == 3 || q == 4 || q == 5; }

ColouredGraph gq_q5minus(int q)
{
    if (!gq_supported(q)) throw Error("gq_q5minus: q must be one of 2, 3, 4, 5");
    const Field f = make_field(q);
    // Irreducible tail x^2 + b x y + c y^2: first (b,c) for which z^2 + b z + c has no root.
    int tb = -1, tc = -1;
    for (int b = 0; b < q && tb < 0; ++b)
        for (int c = 1; c < q && tb < 0; ++c) {
            bool root = false;
            for (int z = 0; z < q; ++z)
                if (f.plus(f.plus(f.times(z, z), f.times(b, z)), c) == 0) root = true;
            if (!root) tb = b, tc = c;
        }
    if (tb < 0) throw IntegrityError("no irreducible binary quadratic form found");

    using Vec = std::array<int, 6>;
    auto form = [&](const Vec& x) {
        int s = f.plus(f.times(x[0], x[1]), f.times(x[2], x[3]));
        s = f.plus(s, f.times(x[4], x[4]));
        s = f.plus(s, f.times(tb, f.times(x[4], x[5])));
        return f.plus(s, f.times(tc, f.times(x[5], x[5])));
    };
    auto encode = [&](const Vec& x) {
        int idx = 0;
        for (int i = 5; i >= 0; --i) idx = idx * q + x[i];
        return idx;
    };
    auto normalise = [&](Vec x) {
        int lead = 0;
        while (lead < 6 && x[lead] == 0) ++lead;
        const int s = f.inv(x[lead]);
        for (auto& c : x) c = f.times(c, s);
        return x;
    };

    int total = 1;
    for (int i = 0; i < 6; ++i) total *= q;
    std::vector<Vec> points;
    std::map<int, int> point_id;
    for (int idx = 1; idx < total; ++idx) {
        Vec x;
        for (int i = 0, r = idx; i < 6; ++i, r /= q) x[i] = r % q;
        if (form(x) != 0 || normalise(x) != x) continue;
        point_id[idx] = static_cast<int>(points.size());
        points.push_back(x);
    }
    std::set<std::vector<int>> lines;
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            Vec sum;
            for (int i = 0; i < 6; ++i) sum[i] = f.plus(points[a][i], points[b][i]);
            // Polar form B(p,r) = Q(p+r) - Q(p) - Q(r); both points are singular.
            if (form(sum) != 0) continue;
            std::vector<int> line{static_cast<int>(b)};
            for (int s = 0; s < q; ++s) {
                Vec x;
                for (int i = 0; i < 6; ++i) x[i] = f.plus(points[a][i], f.times(s, points[b][i]));
                line.push_back(point_id.at(encode(normalise(x))));
            }
            std::sort(line.begin(), line.end());
            lines.insert(std::move(line));
        }

    const int np = static_cast<int>(points.size()), nl = static_cast<int>(lines.size());
    const int q3 = q * q * q;
    if (np != (q + 1) * (q3 + 1) || nl != (q * q + 1) * (q3 + 1))
        throw IntegrityError("G(Q5-(" + std::to_string(q) + ")): wrong number of points or lines");
    std::vector<Colour> colours(np, 0);
    colours.resize(np + nl, 1);
    std::vector<Edge> edges;
    int li = np;
    for (const auto& line : lines) {
        for (int p : line) edges.emplace_back(p, li);
        ++li;
    }
    std::sort(edges.begin(), edges.end());
    ColouredGraph g = make_graph(np + nl, colours, edges);
    for (Vertex v = 0; v < g.order(); ++v) {
        const int want = v < np ? q * q + 1 : q + 1;
        if (g.degree(v) != want) throw IntegrityError("G(Q5-(q)) is not biregular");
        if ((g.neighbours(v) & g.colour_class(g.colour(v))).count() != 0)
            throw IntegrityError("G(Q5-(q)) has an edge inside a colour class");
    }
    if (girth(g) != 8) throw IntegrityError("G(Q5-(q)) does not have girth 8");
    return g;
}

namespace {

std::vector<std::uint32_t> read_golay_generator()
{
    const auto path = data_dir() / "golay_gen.txt";
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    auto lines = tokenize_lines(in);
    if (lines.size() != 12) throw IntegrityError(path.string() + ": expected 12 generator rows");
    std::vector<std::uint32_t> rows;
    for (const auto& line : lines) {
        if (line.size() != 24) throw IntegrityError(path.string() + ": generator rows must have 24 entries");
        std::uint32_t r = 0;
        for (int j = 0; j < 24; ++j) {
            if (line[j] == "1")
                r |= 1u << j;
            else if (line[j] != "0")
                throw IntegrityError(path.string() + ": generator entries must be 0 or 1");
        }
        rows.push_back(r);
    }
    return rows;
}

} // namespace

WittSupport witt_support()
{
    const auto gen = read_golay_generator();
    std::map<int, int> weights;
    WittSupport w;
    for (std::uint32_t mask = 0; mask < 4096; ++mask) {
        std::uint32_t word = 0;
        for (int i = 0; i < 12; ++i)
            if ((mask >> i) & 1u) word ^= gen[i];
        const int wt = std::popcount(word);
        ++weights[wt];
        if (wt == 8) w.octads.push_back(word);
    }
    const std::map<int, int> golay{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
    if (weights != golay) throw IntegrityError("bundled Golay generator does not span the extended Golay code");
    std::sort(w.octads.begin(), w.octads.end());

    std::vector<std::vector<int>> b24, b22;
    const std::uint32_t fixed = (1u << 22) | (1u << 23);
    for (std::uint32_t o : w.octads) {
        std::vector<int> pts;
        for (int j = 0; j < 24; ++j)
            if ((o >> j) & 1u) pts.push_back(j);
        b24.push_back(pts);
        if ((o & fixed) == fixed) b22.emplace_back(pts.begin(), pts.end() - 2);
    }
    w.s5824 = make_incidence(24, std::move(b24));
    w.s3622 = make_incidence(22, std::move(b22));
    if (w.s3622.num_blocks() != 77) throw IntegrityError("S(3,6,22) derivation produced the wrong block count");
    return w;
}

ColouredGraph generate(const FamilySpec& spec)
{
    if (spec.tag == "rook") return rook(spec.m);
    if (spec.tag == "cycle") return cycle(spec.t);
    if (spec.tag == "union_cliques") return union_cliques(spec.s, spec.t);
    if (spec.tag == "complete") return complete(spec.t);
    if (spec.tag == "affine_polar") return affine_polar(spec.d, spec.plus);
    if (spec.tag == "gq_q5minus") return gq_q5minus(spec.q);
    if (auto s = parse_sporadic(spec.tag)) return sporadic(*s);
    throw Error("unknown family '" + spec.tag + "'");
}

} // namespace homreg
