#pragma once

#include "homreg/bitset.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homreg {

using Vertex = int;
using Colour = int;
using Edge = std::pair<Vertex, Vertex>;

// Finite simple graph with a surjective vertex colouring onto {0..c-1}.
// Adjacency is stored as packed bitset rows.
class ColouredGraph {
public:
    ColouredGraph() = default;

    int order() const { return n_; }
    int num_colours() const { return c_; }
    int words() const { return w_; }

    Colour colour(Vertex v) const { return colours_[v]; }
    const std::vector<Colour>& colouring() const { return colours_; }

    bool adjacent(Vertex u, Vertex v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
    const Word* row(Vertex v) const { return adj_.data() + static_cast<std::size_t>(v) * w_; }
    const Word* class_mask(Colour c) const { return masks_.data() + static_cast<std::size_t>(c) * w_; }

    VertexSet neighbours(Vertex v) const { return VertexSet(n_, row(v)); }
    VertexSet colour_class(Colour c) const { return VertexSet(n_, class_mask(c)); }
    std::vector<Vertex> vertices_of_colour(Colour c) const { return colour_class(c).members(); }
    int class_size(Colour c) const;

    int degree(Vertex v) const;
    int num_edges() const;
    // Edges (u,v) with u<v in ascending lexicographic order.
    std::vector<Edge> edges() const;
    bool is_monochromatic() const { return c_ <= 1; }

    // In-place mutators used by the graph operations. Self-loops are rejected.
    void set_edge(Vertex u, Vertex v, bool on);
    void toggle_edge(Vertex u, Vertex v);

    bool operator==(const ColouredGraph& o) const
    {
        return n_ == o.n_ && colours_ == o.colours_ && adj_ == o.adj_;
    }

private:
    friend ColouredGraph make_graph(int, std::span<const Colour>, std::span<const Edge>);
    Word* mrow(Vertex v) { return adj_.data() + static_cast<std::size_t>(v) * w_; }

    int n_ = 0;
    int c_ = 0;
    int w_ = 0;
    std::vector<Colour> colours_;
    std::vector<Word> adj_;
    std::vector<Word> masks_;
};

// Builds a graph. Colour ids are compacted to {0..c-1} keeping their numeric order.
// Throws Error on n = 0, out-of-range endpoints, self-loops or repeated edges.
ColouredGraph make_graph(int n, std::span<const Colour> colouring, std::span<const Edge> edges);
ColouredGraph make_graph(int n, std::span<const Edge> edges);

// Induced subgraph on the given vertices, renumbered in ascending order.
ColouredGraph induced(const ColouredGraph& g, std::span<const Vertex> vertices);
// Induced subgraph keeping the given order (position i becomes vertex i).
ColouredGraph induced_ordered(const ColouredGraph& g, std::span<const Vertex> vertices);

// Complement of the edge set; colouring unchanged.
ColouredGraph complement(const ColouredGraph& g);

// Replace the colouring (re-compacted).
ColouredGraph recolour(const ColouredGraph& g, std::span<const Colour> colouring);
// Forget colours.
ColouredGraph uncoloured(const ColouredGraph& g);

// N^R(U): vertices of colour r adjacent to every member of U; U empty gives the class.
VertexSet common_neighbourhood(const ColouredGraph& g, std::span<const Vertex> u, Colour r);
int lambda(const ColouredGraph& g, std::span<const Vertex> u, Colour r);

bool is_connected(const ColouredGraph& g);
// Length of a shortest cycle, or 0 for a forest.
int girth(const ColouredGraph& g);

} // namespace homreg
