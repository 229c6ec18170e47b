#include "homreg/operations.hpp"

#include "homreg/canon.hpp"
#include "homreg/error.hpp"
#include "homreg/regularity.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace homreg {

namespace {

void check_colour(const ColouredGraph& g, Colour c)
{
    if (c < 0 || c >= g.num_colours()) throw Error("invalid colour id " + std::to_string(c));
}

bool independent(const ColouredGraph& g, Colour c)
{
    for (Vertex v : g.vertices_of_colour(c))
        if (!(g.neighbours(v) & g.colour_class(c)).empty()) return false;
    return true;
}

bool clique(const ColouredGraph& g, Colour c)
{
    const int size = g.class_size(c);
    for (Vertex v : g.vertices_of_colour(c))
        if ((g.neighbours(v) & g.colour_class(c)).count() != size - 1) return false;
    return true;
}

long cross_edges(const ColouredGraph& g, Colour r, Colour b)
{
    long e = 0;
    for (Vertex v : g.vertices_of_colour(r)) e += (g.neighbours(v) & g.colour_class(b)).count();
    return e;
}

bool homogeneous(const ColouredGraph& g, Colour r, Colour b)
{
    const long e = cross_edges(g, r, b);
    return e == 0 || e == static_cast<long>(g.class_size(r)) * g.class_size(b);
}

// Cross edges (complemented when flip is set) form a perfect matching; mate[r] = b.
std::optional<std::vector<Vertex>> perfect_matching(const ColouredGraph& g, Colour r, Colour b, bool flip)
{
    if (g.class_size(r) != g.class_size(b)) return std::nullopt;
    std::vector<Vertex> mate(g.order(), -1);
    VertexSet used(g.order());
    for (Vertex v : g.vertices_of_colour(r)) {
        VertexSet nb = g.neighbours(v) & g.colour_class(b);
        if (flip) nb = g.colour_class(b) - nb;
        if (nb.count() != 1) return std::nullopt;
        Vertex w = nb.first();
        if (used.test(w)) return std::nullopt;
        used.set(w);
        mate[v] = w;
    }
    return mate;
}

ColouredGraph apply_toggles(ColouredGraph g, const std::vector<std::pair<Colour, Colour>>& toggles)
{
    for (auto [c, d] : toggles) g = colour_complement(g, c, d);
    return g;
}

} // namespace

ColouredGraph colour_complement(const ColouredGraph& g, Colour c, Colour c2)
{
    check_colour(g, c);
    check_colour(g, c2);
    ColouredGraph h = g;
    for (Vertex u : g.vertices_of_colour(c))
        for (Vertex v : g.vertices_of_colour(c2))
            if (u != v && (c != c2 || u < v)) h.toggle_edge(u, v);
    return h;
}

ColouredGraph blow_up(const ColouredGraph& g, Colour r, int t)
{
    check_colour(g, r);
    if (t < 2) throw Error("blow_up: clique size must be at least 2");
    if (!independent(g, r)) throw Error("blow_up: colour class " + std::to_string(r) + " is not independent");
    std::vector<int> first(g.order());
    std::vector<Colour> colours;
    for (Vertex v = 0; v < g.order(); ++v) {
        first[v] = static_cast<int>(colours.size());
        colours.insert(colours.end(), g.colour(v) == r ? t : 1, g.colour(v));
    }
    auto copies = [&](Vertex v) { return g.colour(v) == r ? t : 1; };
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.order(); ++v)
        for (int i = 0; i < copies(v); ++i)
            for (int j = i + 1; j < copies(v); ++j) edges.emplace_back(first[v] + i, first[v] + j);
    for (auto [u, v] : g.edges())
        for (int i = 0; i < copies(u); ++i)
            for (int j = 0; j < copies(v); ++j) edges.emplace_back(first[u] + i, first[v] + j);
    std::sort(edges.begin(), edges.end());
    return make_graph(static_cast<int>(colours.size()), colours, edges);
}

ColouredGraph matching_extension(const ColouredGraph& g, Colour r, std::optional<Colour> new_colour)
{
    check_colour(g, r);
    const Colour nc = new_colour.value_or(g.num_colours());
    if (nc < 0 || nc > g.num_colours())
        throw Error("matching_extension: new colour id must lie in [0, " + std::to_string(g.num_colours()) + "]");
    if (!independent(g, r)) throw Error("matching_extension: colour class " + std::to_string(r) + " is not independent");
    const auto members = g.vertices_of_colour(r);
    const int n = g.order(), m = static_cast<int>(members.size());
    std::vector<Colour> colours(n + m);
    for (Vertex v = 0; v < n; ++v) colours[v] = g.colour(v) >= nc ? g.colour(v) + 1 : g.colour(v);
    for (int i = 0; i < m; ++i) colours[n + i] = nc;
    std::vector<Edge> edges = g.edges();
    for (int i = 0; i < m; ++i) {
        edges.emplace_back(members[i], n + i);
        for (Vertex x : g.neighbours(members[i]).members()) edges.emplace_back(x, n + i);
    }
    std::sort(edges.begin(), edges.end());
    return make_graph(n + m, colours, edges);
}

ColouredGraph disjoint_union(const ColouredGraph& a, const ColouredGraph& b)
{
    std::vector<Colour> colours = a.colouring();
    for (Colour c : b.colouring()) colours.push_back(c + a.num_colours());
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return make_graph(a.order() + b.order(), colours, edges);
}

const char* to_string(Connection c)
{
    switch (c) {
    case Connection::Homogeneous: return "homogeneous";
    case Connection::Matching: return "matching";
    default: return "other";
    }
}

Connection connection_type(const ColouredGraph& g, Colour r, Colour b)
{
    check_colour(g, r);
    check_colour(g, b);
    if (r == b) throw Error("connection_type: classes must differ");
    if (homogeneous(g, r, b)) return Connection::Homogeneous;
    if (perfect_matching(g, r, b, false) || perfect_matching(g, r, b, true)) return Connection::Matching;
    return Connection::Other;
}

const char* to_string(StepKind k)
{
    switch (k) {
    case StepKind::SplitUnion: return "split_union";
    case StepKind::UndoBlowUp: return "undo_blow_up";
    default: return "undo_matching";
    }
}

namespace {

// Colour classes linked by non-homogeneous pairs; a disconnected link graph means some
// complementation state turns g into a colour disjoint union.
std::optional<Reduction> detect_union(const ColouredGraph& g)
{
    const int c = g.num_colours();
    std::vector<int> comp(c);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (Colour x = 0; x < c; ++x)
        for (Colour y = x + 1; y < c; ++y)
            if (!homogeneous(g, x, y)) comp[find(y)] = find(x);
    std::vector<std::vector<Colour>> parts;
    std::vector<int> part_of(c, -1);
    for (Colour x = 0; x < c; ++x) {
        int root = find(x);
        if (part_of[root] < 0) {
            part_of[root] = static_cast<int>(parts.size());
            parts.emplace_back();
        }
        parts[part_of[root]].push_back(x);
    }
    if (parts.size() < 2) return std::nullopt;
    Reduction red;
    red.step.kind = StepKind::SplitUnion;
    red.step.parts = parts;
    for (Colour x = 0; x < c; ++x)
        for (Colour y = x + 1; y < c; ++y)
            if (find(x) != find(y) && cross_edges(g, x, y) > 0) red.step.toggles.emplace_back(x, y);
    ColouredGraph h = apply_toggles(g, red.step.toggles);
    for (const auto& part : parts) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < g.order(); ++v)
            if (std::find(part.begin(), part.end(), g.colour(v)) != part.end()) vs.push_back(v);
        red.results.push_back(induced(h, vs));
    }
    return red;
}

std::optional<Reduction> detect_blow_up(const ColouredGraph& g)
{
    for (Colour r = 0; r < g.num_colours(); ++r) {
        const auto members = g.vertices_of_colour(r);
        for (bool flip : {false, true}) {
            ColouredGraph h = flip ? colour_complement(g, r, r) : g;
            auto cu = recognize_clique_union(induced(h, members));
            if (!cu || cu->second < 2) continue;
            // Members of each clique must be twins outside the class.
            VertexSet outside = h.colour_class(r);
            outside.fill();
            outside -= h.colour_class(r);
            std::vector<Vertex> keep;
            bool twins = true;
            VertexSet seen(g.order());
            for (Vertex v : members) {
                if (seen.test(v)) continue;
                VertexSet cl = h.neighbours(v) & h.colour_class(r);
                cl.set(v);
                const VertexSet ext = h.neighbours(v) & outside;
                for (Vertex u : cl.members()) {
                    seen.set(u);
                    if (!((h.neighbours(u) & outside) == ext)) twins = false;
                }
                keep.push_back(v);
            }
            if (!twins) continue;
            Reduction red;
            red.step.kind = StepKind::UndoBlowUp;
            red.step.r = r;
            red.step.t = cu->second;
            if (flip) red.step.toggles.emplace_back(r, r);
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.colour(v) != r) keep.push_back(v);
            std::sort(keep.begin(), keep.end());
            red.results.push_back(induced(h, keep));
            return red;
        }
    }
    return std::nullopt;
}

std::optional<Reduction> detect_matching(const ColouredGraph& g)
{
    const int c = g.num_colours();
    for (Colour r = 0; r < c; ++r)
        for (Colour b = r + 1; b < c; ++b) {
            if (g.class_size(r) != g.class_size(b)) continue;
            std::vector<std::pair<Colour, Colour>> toggles;
            if (!independent(g, r)) {
                if (!clique(g, r)) continue;
                toggles.emplace_back(r, r);
            }
            if (!independent(g, b)) {
                if (!clique(g, b)) continue;
                toggles.emplace_back(b, b);
            }
            auto mate = perfect_matching(g, r, b, false);
            if (!mate) {
                mate = perfect_matching(g, r, b, true);
                if (!mate) continue;
                toggles.emplace_back(r, b);
            }
            // Every other class must see each matched pair identically, or each oppositely.
            bool ok = true;
            for (Colour x = 0; x < c && ok; ++x) {
                if (x == r || x == b) continue;
                int relation = 0; // +1 same, -1 opposite
                for (Vertex v : g.vertices_of_colour(r)) {
                    const Vertex w = (*mate)[v];
                    for (Vertex y : g.vertices_of_colour(x)) {
                        const int rel = g.adjacent(y, v) == g.adjacent(y, w) ? 1 : -1;
                        if (relation == 0) relation = rel;
                        if (rel != relation) ok = false;
                    }
                }
                if (ok && relation < 0) toggles.emplace_back(std::min(r, x), std::max(r, x));
            }
            if (!ok) continue;
            std::sort(toggles.begin(), toggles.end());
            Reduction red;
            red.step.kind = StepKind::UndoMatching;
            red.step.r = r;
            red.step.b = b;
            red.step.toggles = toggles;
            ColouredGraph h = apply_toggles(g, toggles);
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < g.order(); ++v)
                if (g.colour(v) != b) keep.push_back(v);
            red.results.push_back(induced(h, keep));
            return red;
        }
    return std::nullopt;
}

} // namespace

std::optional<Reduction> detect_reduction(const ColouredGraph& g)
{
    if (g.num_colours() > kMaxReductionColours)
        throw RefusedError("detect_reduction supports at most " + std::to_string(kMaxReductionColours) + " colours");
    if (auto r = detect_union(g)) return r;
    if (auto r = detect_blow_up(g)) return r;
    return detect_matching(g);
}

ColouredGraph apply_forward(const ReductionStep& step, const std::vector<ColouredGraph>& results)
{
    ColouredGraph g;
    switch (step.kind) {
    case StepKind::SplitUnion: {
        if (results.size() != step.parts.size()) throw Error("union step needs one graph per part");
        std::vector<Colour> colours;
        std::vector<Edge> edges;
        int offset = 0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            const auto& part = results[i];
            if (part.num_colours() != static_cast<int>(step.parts[i].size()))
                throw Error("union part has the wrong number of colours");
            for (Colour c : part.colouring()) colours.push_back(step.parts[i][c]);
            for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
            offset += part.order();
        }
        std::sort(edges.begin(), edges.end());
        g = make_graph(offset, colours, edges);
        break;
    }
    case StepKind::UndoBlowUp:
        if (results.size() != 1) throw Error("blow-up step needs one graph");
        g = blow_up(results[0], step.r, step.t);
        break;
    case StepKind::UndoMatching: {
        if (results.size() != 1) throw Error("matching step needs one graph");
        // The kept class keeps its id once the removed class b is reinserted.
        const Colour r = step.r < step.b ? step.r : step.r - 1;
        g = matching_extension(results[0], r, step.b);
        break;
    }
    }
    return apply_toggles(g, step.toggles);
}

int ReductionTrace::num_steps() const
{
    std::function<int(const ReductionNode&)> count = [&](const ReductionNode& n) {
        int s = n.step ? 1 : 0;
        for (const auto& c : n.children) s += count(c);
        return s;
    };
    return count(root);
}

namespace {

ReductionNode reduce_node(const ColouredGraph& g, std::vector<ColouredGraph>& cores)
{
    ReductionNode node;
    node.graph = g;
    auto red = detect_reduction(g);
    if (!red) {
        cores.push_back(g);
        return node;
    }
    node.step = red->step;
    for (const auto& part : red->results) node.children.push_back(reduce_node(part, cores));
    return node;
}

ColouredGraph recompose(const ReductionNode& node)
{
    if (!node.step) return node.graph;
    std::vector<ColouredGraph> parts;
    for (const auto& c : node.children) parts.push_back(recompose(c));
    return apply_forward(*node.step, parts);
}

} // namespace

ReductionTrace reduce(const ColouredGraph& g)
{
    ReductionTrace trace;
    trace.root = reduce_node(g, trace.cores);
    if (!are_isomorphic(recompose(trace.root), g))
        throw IntegrityError("reduction trace does not recompose to the input graph");
    trace.verified = true;
    return trace;
}

} // namespace homreg
