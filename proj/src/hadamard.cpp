#include "homreg/hadamard.hpp"

#include "homreg/canon.hpp"
#include "homreg/error.hpp"
#include "homreg/graph_io.hpp"
#include "homreg/regularity.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace homreg {

bool is_sign_matrix(const SignMatrix& m)
{
    return m.rows() == m.cols() && m.rows() > 0 && (m.array().abs() == 1).all();
}

bool is_hadamard(const SignMatrix& m)
{
    if (!is_sign_matrix(m)) return false;
    const SignMatrix gram = m * m.transpose();
    return gram == SignMatrix::Identity(m.rows(), m.cols()) * static_cast<int>(m.rows());
}

HadamardMatrix::HadamardMatrix(SignMatrix m) : m_(std::move(m))
{
    if (!is_hadamard(m_)) throw Error("matrix is not a Hadamard matrix");
}

SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b)
{
    SignMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index s = 0; s < a.cols(); ++s)
            k.block(r * b.rows(), s * b.cols(), b.rows(), b.cols()) = a(r, s) * b;
    return k;
}

HadamardMatrix sylvester(int t)
{
    if (t < 1) throw Error("sylvester: t must be at least 1");
    if (t > 12) throw RefusedError("sylvester: rank 2^t is capped at 4096");
    SignMatrix s2(2, 2);
    s2 << 1, 1, 1, -1;
    SignMatrix h = s2;
    for (int i = 1; i < t; ++i) h = kronecker(s2, h);
    return HadamardMatrix(std::move(h));
}

namespace {

const char* const kHad12Rows[12] = {
    "++++++++++++", "+++------+++", "+++---+++---", "+--+---++-++", "+---+-+-++-+", "+----+++-++-",
    "+-+-++-+---+", "+-++-+--++--", "+-+++-+---+-", "++--++--+-+-", "++-+-++----+", "++-++--+-+--",
};

} // namespace

HadamardMatrix had12()
{
    SignMatrix h(12, 12);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) h(i, j) = kHad12Rows[i][j] == '+' ? 1 : -1;
    if (!is_hadamard(h)) throw IntegrityError("built-in rank-12 matrix is not Hadamard");
    return HadamardMatrix(std::move(h));
}

HadamardMatrix read_hm(std::istream& in)
{
    std::vector<int> at;
    auto lines = tokenize_lines(in, &at);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "hm") throw Error("missing 'hm s' header");
    const int s = parse_int(lines[0][1], "s");
    if (s <= 0) throw Error("bad hm rank");
    if (static_cast<int>(lines.size()) != 1 + s) throw Error("hm body must have " + std::to_string(s) + " rows");
    SignMatrix h(s, s);
    for (int i = 0; i < s; ++i) {
        if (lines[1 + i].size() != 1 || static_cast<int>(lines[1 + i][0].size()) != s)
            rethrow_at_line(at[1 + i], Error("hm row " + std::to_string(i + 1) + " must have " + std::to_string(s) + " signs"));
        for (int j = 0; j < s; ++j) {
            char ch = lines[1 + i][0][j];
            if (ch != '+' && ch != '-')
                rethrow_at_line(at[1 + i], Error("hm row " + std::to_string(i + 1) + " has a character other than +/-"));
            h(i, j) = ch == '+' ? 1 : -1;
        }
    }
    if (!is_hadamard(h)) throw Error("rows are not pairwise orthogonal");
    return HadamardMatrix(std::move(h));
}

HadamardMatrix read_hm_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return read_hm(in);
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

void write_hm(std::ostream& out, const HadamardMatrix& h)
{
    out << "hm " << h.rank() << '\n';
    for (int i = 0; i < h.rank(); ++i) {
        for (int j = 0; j < h.rank(); ++j) out << (h(i, j) > 0 ? '+' : '-');
        out << '\n';
    }
}

namespace {

std::vector<Edge> hadamard_edges(const SignMatrix& h)
{
    if (!is_sign_matrix(h)) throw Error("expected a square matrix with entries +1 and -1");
    const int s = static_cast<int>(h.rows());
    std::vector<Edge> edges;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            const int rp = 2 * i, rm = 2 * i + 1, cp = 2 * s + 2 * j, cm = cp + 1;
            if (h(i, j) == 1) {
                edges.emplace_back(rp, cp);
                edges.emplace_back(rm, cm);
            } else {
                edges.emplace_back(rp, cm);
                edges.emplace_back(rm, cp);
            }
        }
    return edges;
}

} // namespace

ColouredGraph hadamard_graph(const SignMatrix& h)
{
    auto edges = hadamard_edges(h);
    return make_graph(4 * static_cast<int>(h.rows()), edges);
}

ColouredGraph extended_hadamard(const SignMatrix& h)
{
    auto edges = hadamard_edges(h);
    const int s = static_cast<int>(h.rows());
    for (int i = 0; i < 2 * s; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    std::vector<Colour> colours(4 * s, 0);
    std::fill(colours.begin() + 2 * s, colours.end(), 1);
    return make_graph(4 * s, colours, edges);
}

HadamardGraphIdentities hadamard_graph_identities(const SignMatrix& h)
{
    const ColouredGraph g = hadamard_graph(h);
    const int n = g.order();
    const long s = h.rows();
    HadamardGraphIdentities r;
    r.regular = true;
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) != s) r.regular = false;
    // dist(u,v) == 2 iff u != v, not adjacent and with a common neighbour.
    std::vector<std::vector<char>> d2(n, std::vector<char>(n, 0));
    r.pairs = true;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            const int common = (g.neighbours(u) & g.neighbours(v)).count();
            if (common == 0) continue;
            d2[u][v] = d2[v][u] = 1;
            ++r.distance_two_pairs;
            if (2L * common != s) r.pairs = false;
        }
    r.triples = true;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (!d2[u][v]) continue;
            const VertexSet uv = g.neighbours(u) & g.neighbours(v);
            for (Vertex w = v + 1; w < n; ++w) {
                if (!d2[u][w] || !d2[v][w]) continue;
                ++r.distance_two_triples;
                if (4L * (uv & g.neighbours(w)).count() != s) r.triples = false;
            }
        }
    return r;
}

bool are_equivalent(const SignMatrix& a, const SignMatrix& b)
{
    if (a.rows() != b.rows()) return false;
    return are_isomorphic(extended_hadamard(a), extended_hadamard(b)).has_value();
}

std::optional<HadamardMatrix> recognize_extended_hadamard(const ColouredGraph& g)
{
    if (g.num_colours() != 2 || g.order() % 4 != 0) return std::nullopt;
    std::vector<std::vector<std::pair<Vertex, Vertex>>> pairs(2);
    for (Colour c = 0; c < 2; ++c) {
        auto members = g.vertices_of_colour(c);
        auto cu = recognize_clique_union(induced(g, members));
        if (!cu || cu->second != 2) return std::nullopt;
        for (Vertex v : members) {
            VertexSet mate = g.neighbours(v) & g.colour_class(c);
            Vertex w = mate.first();
            if (v < w) pairs[c].emplace_back(v, w);
        }
    }
    const int s = static_cast<int>(pairs[0].size());
    if (static_cast<int>(pairs[1].size()) != s) return std::nullopt;
    SignMatrix h(s, s);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            auto [rp, rm] = pairs[0][i];
            auto [cp, cm] = pairs[1][j];
            const bool pp = g.adjacent(rp, cp), pm = g.adjacent(rp, cm), mp = g.adjacent(rm, cp), mm = g.adjacent(rm, cm);
            if (pp && mm && !pm && !mp)
                h(i, j) = 1;
            else if (pm && mp && !pp && !mm)
                h(i, j) = -1;
            else
                return std::nullopt;
        }
    if (!is_hadamard(h)) return std::nullopt;
    return HadamardMatrix(std::move(h));
}

SignedPerm identity_signed(int n)
{
    SignedPerm p;
    p.perm.resize(n);
    for (int i = 0; i < n; ++i) p.perm[i] = i;
    p.sign.assign(n, 1);
    return p;
}

SignedPerm compose(const SignedPerm& first, const SignedPerm& then)
{
    if (first.degree() != then.degree()) throw Error("signed permutations of different degree");
    SignedPerm r = first;
    for (int l = 0; l < first.degree(); ++l) {
        r.perm[l] = then.perm[first.perm[l]];
        r.sign[l] = first.sign[l] * then.sign[first.perm[l]];
    }
    return r;
}

SignedPerm inverse(const SignedPerm& p)
{
    SignedPerm r = p;
    for (int l = 0; l < p.degree(); ++l) {
        r.perm[p.perm[l]] = l;
        r.sign[p.perm[l]] = p.sign[l];
    }
    return r;
}

SignedPerm kronecker(const SignedPerm& a, const SignedPerm& b)
{
    const int m = b.degree();
    SignedPerm r;
    r.perm.resize(a.degree() * m);
    r.sign.resize(a.degree() * m);
    for (int s = 0; s < a.degree(); ++s)
        for (int w = 0; w < m; ++w) {
            r.perm[s * m + w] = a.perm[s] * m + b.perm[w];
            r.sign[s * m + w] = a.sign[s] * b.sign[w];
        }
    return r;
}

SignMatrix to_matrix(const SignedPerm& p)
{
    SignMatrix m = SignMatrix::Zero(p.degree(), p.degree());
    for (int l = 0; l < p.degree(); ++l) m(p.perm[l], l) = p.sign[l];
    return m;
}

SignedPerm diagonal(const std::vector<int>& signs)
{
    SignedPerm p = identity_signed(static_cast<int>(signs.size()));
    p.sign = signs;
    return p;
}

SignedPerm permutation(const std::vector<int>& perm)
{
    SignedPerm p;
    p.perm = perm;
    p.sign.assign(perm.size(), 1);
    return p;
}

MonomialPair compose(const MonomialPair& first, const MonomialPair& then)
{
    return {compose(first.a, then.a), compose(first.b, then.b)};
}

MonomialPair inverse(const MonomialPair& p) { return {inverse(p.a), inverse(p.b)}; }

MonomialPair kronecker(const MonomialPair& x, const MonomialPair& y)
{
    return {kronecker(x.a, y.a), kronecker(x.b, y.b)};
}

bool verify_automorphism(const SignMatrix& h, const MonomialPair& p)
{
    const int s = static_cast<int>(h.rows());
    if (p.a.degree() != s || p.b.degree() != s)
        throw Error("monomial pair of degree " + std::to_string(p.degree()) + " applied to a rank " +
                    std::to_string(s) + " matrix");
    // A H B^{-1} = H  <=>  A H = H B  <=>  H(sA(i), sB(j)) = a_i b_j H(i, j)
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            if (h(p.a.perm[i], p.b.perm[j]) != p.a.sign[i] * p.b.sign[j] * h(i, j)) return false;
    return true;
}

std::vector<int> nu(const MonomialPair& p) { return p.a.perm; }

bool OmegaSet::contains(int j) const { return std::find(members.begin(), members.end(), j) != members.end(); }

OmegaSet omega(const SignMatrix& h, int c)
{
    if (h.rows() < 2 || c < 0 || c >= h.cols()) throw Error("omega: column out of range");
    OmegaSet o;
    o.column = c;
    for (int j = 0; j < h.cols(); ++j) {
        const bool same = h(0, j) == h(0, c) && h(1, j) == h(1, c);
        const bool neg = h(0, j) == -h(0, c) && h(1, j) == -h(1, c);
        if (same || neg) o.members.push_back(j);
    }
    return o;
}

namespace {

const SignedPerm& swap2()
{
    static const SignedPerm p = permutation({1, 0});
    return p;
}

} // namespace

MonomialPair sylvester_clique_swap(int t, int i)
{
    if (t < 2) throw Error("sylvester_clique_swap: t must be at least 2");
    if (i < 0 || i > 2) throw Error("sylvester_clique_swap: row must be 1, 2 or 3");
    if (t > 12) throw RefusedError("sylvester: rank 2^t is capped at 4096");
    const SignedPerm id2 = identity_signed(2), flip = diagonal({1, -1});
    MonomialPair p;
    switch (i) {
    case 0: {
        SignedPerm neg_swap = swap2();
        neg_swap.sign = {-1, -1};
        p = {kronecker(flip, diagonal({-1, 1})), kronecker(swap2(), neg_swap)};
        break;
    }
    case 1: p = {kronecker(id2, flip), kronecker(id2, swap2())}; break;
    default: p = {kronecker(flip, id2), kronecker(swap2(), id2)}; break;
    }
    for (int level = 2; level < t; ++level) p = {kronecker(id2, p.a), kronecker(id2, p.b)};
    return p;
}

MonomialPair sylvester_column_map(int t, int c, int j)
{
    if (t < 1) throw Error("sylvester_column_map: t must be at least 1");
    if (t > 12) throw RefusedError("sylvester: rank 2^t is capped at 4096");
    const int size = 1 << t;
    if (c < 0 || c >= size || j < 0 || j >= size) throw Error("sylvester_column_map: column out of range");
    if (!omega(sylvester(t).matrix(), c).contains(j))
        throw Error("sylvester_column_map: column " + std::to_string(j + 1) + " is not in omega_" + std::to_string(c + 1));
    // Base rank 2: omega_c = {c}, so the identity works.
    if (t == 1) return {identity_signed(2), identity_signed(2)};
    const int half = size / 2;
    MonomialPair inner = sylvester_column_map(t - 1, c % half, j % half);
    if ((c < half) == (j < half)) return {kronecker(identity_signed(2), inner.a), kronecker(identity_signed(2), inner.b)};
    return {kronecker(diagonal({1, -1}), inner.a), kronecker(swap2(), inner.b)};
}

namespace {

struct TableRow {
    const char* sigma_a;
    std::vector<int> inv_a;
    const char* sigma_b;
    std::vector<int> inv_b;
};

// Cycle notation with 1-indexed points, e.g. "(4 12 5 9)(7 10 11 8)".
SignedPerm decode(const char* cycles, const std::vector<int>& inverted, int n)
{
    SignedPerm p = identity_signed(n);
    std::string text(cycles);
    for (char& ch : text)
        if (ch == '(' || ch == ')') ch = ch == '(' ? '[' : ']';
    std::size_t pos = 0;
    while ((pos = text.find('[', pos)) != std::string::npos) {
        std::size_t end = text.find(']', pos);
        std::istringstream cyc(text.substr(pos + 1, end - pos - 1));
        std::vector<int> pts;
        for (int x; cyc >> x;) pts.push_back(x - 1);
        for (std::size_t k = 0; k < pts.size(); ++k) p.perm[pts[k]] = pts[(k + 1) % pts.size()];
        pos = end;
    }
    for (int l : inverted) p.sign[l - 1] = -1;
    return p;
}

std::vector<int> all12()
{
    std::vector<int> v(12);
    for (int i = 0; i < 12; ++i) v[i] = i + 1;
    return v;
}

} // namespace

Had12LemmaPairs had12_lemma_pairs()
{
    const std::vector<TableRow> rows{
        {"(4 12 5 9)(7 10 11 8)", {1, 6, 7, 8, 10, 11}, "(1 6)(2 4 3 5)(7 10 8 11)(9 12)", all12()},
        {"(4 10 5 8)(7 9 11 12)", {2, 6, 7, 9, 11, 12}, "(1 9)(2 7 3 8)(4 11 5 10)(6 12)", {}},
        {"(4 11 5 7)(8 12 10 9)", {3, 6, 8, 9, 10, 12}, "(1 12)(2 10 3 11)(4 7 5 8)(6 9)", {}},
    };
    const std::vector<TableRow> cols{
        {"(3 12 11)(4 9 6)(5 7 8)", {}, "(3 10 12)(4 7 8)(5 6 9)", {}},
        {"(3 12)(4 8)(5 6)(7 9)", {4, 5, 6, 7, 8, 9}, "(1 2)(3 10)(4 7)(5 9)", {}},
        {"(3 9 7 8)(4 10 12 5)", {4, 5, 6, 10, 11, 12}, "(1 3)(2 11 12 10)(4 8)(5 6 9 7)", {}},
        {"(3 10 5 6)(4 8 9 11)", {2, 3, 5, 6, 7, 10}, "(1 4)(2 8 10 5)(3 7 12 9)(6 11)", {}},
        {"(3 11 8 6)(5 9 10 7)", {2, 3, 4, 6, 8, 11}, "(1 5)(2 8 10 4)(3 9)(6 12 7 11)", {}},
        {"(3 12 4 5)(6 7 8 10)", {2, 3, 4, 5, 9, 12}, "(1 6)(2 7 12 4)(3 9 11 8)(5 10)", {}},
        {"(3 11 9 6)(4 8 12 7)", {2, 4, 7, 8, 10, 12}, "(1 7)(2 4 11 8)(3 6)(5 10 9 12)", {}},
        {"(3 12 4 6)(5 9 8 11)", {2, 5, 8, 9, 10, 11}, "(1 8)(2 4 11 7)(3 5 12 6)(9 10)", {}},
        {"(3 10 8 5)(6 7 11 9)", {2, 6, 7, 9, 11, 12}, "(1 9)(2 6 10 7)(3 5)(4 12 8 11)", {}},
        {"(3 11 4 9)(5 12 8 6)", {3, 4, 7, 9, 10, 11}, "(1 10)(2 3 11 12)(4 6 7 5)(8 9)", {}},
        {"(3 12)(4 10)(5 7)(8 11)", {3, 5, 7, 8, 11, 12}, "(1 11)(2 12)(4 5)(6 8)", {}},
        {"(3 12)(4 11)(6 9)(8 10)", {3, 6, 8, 9, 10, 12}, "(1 12)(2 11)(6 8)(7 9)", {}},
    };
    const SignMatrix h = had12().matrix();
    Had12LemmaPairs out;
    for (int i = 0; i < 3; ++i) {
        MonomialPair p{decode(rows[i].sigma_a, rows[i].inv_a, 12), decode(rows[i].sigma_b, rows[i].inv_b, 12)};
        const std::string name = "row-swap table row i=" + std::to_string(i + 1);
        if (!verify_automorphism(h, p)) throw IntegrityError(name + " is not an automorphism of had12");
        for (int k = 0; k < 3; ++k)
            if (p.a.entry(k, k) != (k == i ? -1 : 1)) throw IntegrityError(name + " has the wrong diagonal signs");
        out.row_pairs.push_back(std::move(p));
    }
    for (int j = 0; j < 12; ++j) {
        MonomialPair p{decode(cols[j].sigma_a, cols[j].inv_a, 12), decode(cols[j].sigma_b, cols[j].inv_b, 12)};
        const std::string name = "column table row j=" + std::to_string(j + 1);
        if (!verify_automorphism(h, p)) throw IntegrityError(name + " is not an automorphism of had12");
        if (p.b.perm[0] != j) throw IntegrityError(name + " does not map column 1 to column " + std::to_string(j + 1));
        out.column_pairs.push_back(std::move(p));
    }
    return out;
}

MonomialPair had12_column_map(const Had12LemmaPairs& pairs, int c, int j)
{
    if (c < 0 || c >= 12 || j < 0 || j >= 12) throw Error("had12_column_map: column out of range");
    if (!omega(had12().matrix(), c).contains(j))
        throw Error("had12_column_map: column " + std::to_string(j + 1) + " is not in omega_" + std::to_string(c + 1));
    // Undo the pair taking column 1 to j, then apply the one taking column 1 to c.
    return compose(inverse(pairs.column_pairs[j]), pairs.column_pairs[c]);
}

} // namespace homreg
