#include "homreg/graph.hpp"

#include "homreg/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <string>

namespace homreg {

int ColouredGraph::class_size(Colour c) const
{
    int s = 0;
    const Word* m = class_mask(c);
    for (int i = 0; i < w_; ++i) s += std::popcount(m[i]);
    return s;
}

int ColouredGraph::degree(Vertex v) const
{
    int d = 0;
    for (int i = 0; i < w_; ++i) d += std::popcount(row(v)[i]);
    return d;
}

int ColouredGraph::num_edges() const
{
    long total = 0;
    for (Vertex v = 0; v < n_; ++v) total += degree(v);
    return static_cast<int>(total / 2);
}

std::vector<Edge> ColouredGraph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
        VertexSet nb = neighbours(u);
        for (Vertex v = nb.next(u + 1); v >= 0; v = nb.next(v + 1)) out.emplace_back(u, v);
    }
    return out;
}

void ColouredGraph::set_edge(Vertex u, Vertex v, bool on)
{
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    Word bu = Word{1} << (v & 63), bv = Word{1} << (u & 63);
    if (on) {
        mrow(u)[v >> 6] |= bu;
        mrow(v)[u >> 6] |= bv;
    } else {
        mrow(u)[v >> 6] &= ~bu;
        mrow(v)[u >> 6] &= ~bv;
    }
}

void ColouredGraph::toggle_edge(Vertex u, Vertex v) { set_edge(u, v, !adjacent(u, v)); }

ColouredGraph make_graph(int n, std::span<const Colour> colouring, std::span<const Edge> edges)
{
    if (n <= 0) throw Error("graph must have at least one vertex");
    if (static_cast<int>(colouring.size()) != n)
        throw Error("colouring has " + std::to_string(colouring.size()) + " entries, expected " +
                    std::to_string(n));
    std::map<Colour, int> rank;
    for (Colour c : colouring) {
        if (c < 0) throw Error("negative colour id");
        rank.emplace(c, 0);
    }
    int next = 0;
    for (auto& [c, r] : rank) r = next++;

    ColouredGraph g;
    g.n_ = n;
    g.c_ = next;
    g.w_ = words_for(n);
    g.colours_.resize(n);
    for (int v = 0; v < n; ++v) g.colours_[v] = rank[colouring[v]];
    g.adj_.assign(static_cast<std::size_t>(n) * g.w_, 0);
    g.masks_.assign(static_cast<std::size_t>(g.c_) * g.w_, 0);
    for (int v = 0; v < n; ++v)
        g.masks_[static_cast<std::size_t>(g.colours_[v]) * g.w_ + (v >> 6)] |= Word{1} << (v & 63);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
        if (g.adjacent(u, v))
            throw Error("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.set_edge(u, v, true);
    }
    return g;
}

ColouredGraph make_graph(int n, std::span<const Edge> edges)
{
    std::vector<Colour> mono(std::max(n, 0), 0);
    return make_graph(n, mono, edges);
}

ColouredGraph induced_ordered(const ColouredGraph& g, std::span<const Vertex> vs)
{
    const int m = static_cast<int>(vs.size());
    std::vector<Colour> cols(m);
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i) {
        cols[i] = g.colour(vs[i]);
        for (int j = i + 1; j < m; ++j)
            if (g.adjacent(vs[i], vs[j])) es.emplace_back(i, j);
    }
    return make_graph(m, cols, es);
}

ColouredGraph induced(const ColouredGraph& g, std::span<const Vertex> vertices)
{
    std::vector<Vertex> vs(vertices.begin(), vertices.end());
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) throw Error("repeated vertex in induced()");
    for (Vertex v : vs)
        if (v < 0 || v >= g.order()) throw Error("vertex out of range in induced()");
    return induced_ordered(g, vs);
}

ColouredGraph complement(const ColouredGraph& g)
{
    ColouredGraph h = g;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) h.toggle_edge(u, v);
    return h;
}

ColouredGraph recolour(const ColouredGraph& g, std::span<const Colour> colouring)
{
    auto es = g.edges();
    return make_graph(g.order(), colouring, es);
}

ColouredGraph uncoloured(const ColouredGraph& g)
{
    std::vector<Colour> mono(g.order(), 0);
    return recolour(g, mono);
}

VertexSet common_neighbourhood(const ColouredGraph& g, std::span<const Vertex> u, Colour r)
{
    VertexSet s = g.colour_class(r);
    for (Vertex v : u) s &= g.neighbours(v);
    return s;
}

int lambda(const ColouredGraph& g, std::span<const Vertex> u, Colour r)
{
    return common_neighbourhood(g, u, r).count();
}

bool is_connected(const ColouredGraph& g)
{
    VertexSet seen(g.order());
    std::vector<Vertex> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        VertexSet nb = g.neighbours(v) - seen;
        for (Vertex w = nb.first(); w >= 0; w = nb.next(w + 1)) {
            seen.set(w);
            stack.push_back(w);
        }
    }
    return seen.count() == g.order();
}

int girth(const ColouredGraph& g)
{
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<Vertex> q{s};
        dist[s] = 0;
        parent[s] = -1;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            if (2 * dist[v] + 1 >= best) break;
            VertexSet nb = g.neighbours(v);
            for (Vertex w = nb.first(); w >= 0; w = nb.next(w + 1)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push_back(w);
                } else if (parent[v] != w) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

} // namespace homreg
