#include "homreg/canon.hpp"

#include "homreg/error.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace homreg {

Perm identity_perm(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& first, const Perm& then)
{
    Perm r(first.size());
    for (std::size_t v = 0; v < first.size(); ++v) r[v] = then[first[v]];
    return r;
}

Perm inverse(const Perm& p)
{
    Perm r(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) r[p[v]] = static_cast<Vertex>(v);
    return r;
}

bool is_automorphism(const ColouredGraph& g, const Perm& p)
{
    const int n = g.order();
    if (static_cast<int>(p.size()) != n) return false;
    for (Vertex v = 0; v < n; ++v)
        if (g.colour(v) != g.colour(p[v])) return false;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
    return true;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return h ^ x;
}

// Ordered partition: cell[v] is the index of v's cell; cells are numbered 0..k-1.
struct Partition {
    std::vector<int> cell;
    int k = 0;
};

class Refiner {
public:
    explicit Refiner(const ColouredGraph& g) : g_(g), n_(g.order()), w_(g.words()) {}

    // Equitable refinement; returns an isomorphism-invariant hash of the process.
    std::uint64_t refine(Partition& p)
    {
        std::uint64_t h = mix(0, static_cast<std::uint64_t>(p.k));
        while (true) {
            const int k = p.k;
            const int stride = k + 1;
            masks_.assign(static_cast<std::size_t>(k) * w_, 0);
            for (Vertex v = 0; v < n_; ++v)
                masks_[static_cast<std::size_t>(p.cell[v]) * w_ + (v >> 6)] |= Word{1} << (v & 63);
            sig_.resize(static_cast<std::size_t>(n_) * stride);
            for (Vertex v = 0; v < n_; ++v) {
                int* s = &sig_[static_cast<std::size_t>(v) * stride];
                s[0] = p.cell[v];
                for (int j = 0; j < k; ++j) s[j + 1] = popcount_and(g_.row(v), &masks_[static_cast<std::size_t>(j) * w_], w_);
            }
            order_.resize(n_);
            std::iota(order_.begin(), order_.end(), 0);
            const int* base = sig_.data();
            std::sort(order_.begin(), order_.end(), [&](int a, int b) {
                const int* sa = base + static_cast<std::size_t>(a) * stride;
                const int* sb = base + static_cast<std::size_t>(b) * stride;
                for (int i = 0; i < stride; ++i)
                    if (sa[i] != sb[i]) return sa[i] < sb[i];
                return a < b;
            });
            int nk = 0;
            int run = 0;
            for (int i = 0; i < n_; ++i) {
                const int* s = base + static_cast<std::size_t>(order_[i]) * stride;
                bool fresh = i == 0 || !std::equal(s, s + stride, base + static_cast<std::size_t>(order_[i - 1]) * stride);
                if (fresh) {
                    if (i > 0) h = mix(h, static_cast<std::uint64_t>(run));
                    for (int j = 0; j < stride; ++j) h = mix(h, static_cast<std::uint64_t>(s[j]));
                    ++nk;
                    run = 0;
                }
                ++run;
                p.cell[order_[i]] = nk - 1;
            }
            h = mix(h, static_cast<std::uint64_t>(run));
            h = mix(h, static_cast<std::uint64_t>(nk));
            bool stable = nk == k;
            p.k = nk;
            if (stable) break;
        }
        return h;
    }

private:
    const ColouredGraph& g_;
    int n_, w_;
    std::vector<Word> masks_;
    std::vector<int> sig_;
    std::vector<int> order_;
};

Partition initial_partition(const ColouredGraph& g, std::span<const Vertex> ind)
{
    const int n = g.order();
    Partition p;
    p.cell.assign(n, -1);
    int t = 0;
    for (Vertex v : ind) {
        if (v < 0 || v >= n) throw Error("individualized vertex out of range");
        if (p.cell[v] >= 0) throw Error("vertex individualized twice");
        p.cell[v] = t++;
    }
    std::vector<int> rank(g.num_colours(), -1);
    for (Vertex v = 0; v < n; ++v)
        if (p.cell[v] < 0) rank[g.colour(v)] = 0;
    int next = t;
    for (auto& r : rank)
        if (r == 0) r = next++;
    for (Vertex v = 0; v < n; ++v)
        if (p.cell[v] < 0) p.cell[v] = rank[g.colour(v)];
    p.k = next;
    return p;
}

Partition individualize(const Partition& p, Vertex v)
{
    Partition q = p;
    const int c = p.cell[v];
    for (std::size_t w = 0; w < q.cell.size(); ++w) {
        if (q.cell[w] > c)
            ++q.cell[w];
        else if (q.cell[w] == c && static_cast<Vertex>(w) != v)
            q.cell[w] = c + 1;
    }
    ++q.k;
    return q;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x)
    {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

class Search {
public:
    Search(const ColouredGraph& g) : g_(g), n_(g.order()), refiner_(g) {}

    void run(Partition root)
    {
        dfs(std::move(root), 0);
    }

    const std::vector<Vertex>& best_lab() const { return best_lab_; }
    const std::vector<Perm>& automorphisms() const { return autos_; }

private:
    static constexpr int kNone = INT_MAX;

    std::vector<Word> leaf_code(const std::vector<Vertex>& lab) const
    {
        std::vector<Word> code(static_cast<std::size_t>(words_for(n_ * n_)), 0);
        std::size_t bit = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++bit)
                if (g_.adjacent(lab[i], lab[j])) code[bit >> 6] |= Word{1} << (bit & 63);
        return code;
    }

    static int divergence(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
    {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
        return static_cast<int>(i);
    }

    void add_auto(const std::vector<Vertex>& from, const std::vector<Vertex>& to)
    {
        Perm pi(n_);
        bool trivial = true;
        for (int i = 0; i < n_; ++i) {
            pi[from[i]] = to[i];
            if (from[i] != to[i]) trivial = false;
        }
        if (!trivial) autos_.push_back(std::move(pi));
    }

    int leaf(const Partition& p)
    {
        std::vector<Vertex> lab(n_);
        for (Vertex v = 0; v < n_; ++v) lab[p.cell[v]] = v;
        auto code = leaf_code(lab);
        if (!have_first_) {
            have_first_ = true;
            first_trace_ = best_trace_ = trace_;
            first_code_ = best_code_ = code;
            first_lab_ = best_lab_ = lab;
            first_path_ = best_path_ = path_;
            return kNone;
        }
        if (trace_ == first_trace_ && code == first_code_) {
            add_auto(lab, first_lab_);
            return divergence(path_, first_path_);
        }
        if (trace_ == best_trace_ && code == best_code_) {
            add_auto(lab, best_lab_);
            return divergence(path_, best_path_);
        }
        if (trace_ < best_trace_ || (trace_ == best_trace_ && code < best_code_)) {
            best_trace_ = trace_;
            best_code_ = std::move(code);
            best_lab_ = std::move(lab);
            best_path_ = path_;
        }
        return kNone;
    }

    // Orbits of the automorphisms found so far that fix the current path pointwise.
    UnionFind path_orbits() const
    {
        UnionFind uf(n_);
        for (const auto& a : autos_) {
            bool fixes = true;
            for (Vertex v : path_)
                if (a[v] != v) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (Vertex v = 0; v < n_; ++v) uf.unite(v, a[v]);
        }
        return uf;
    }

    int dfs(Partition p, int depth)
    {
        trace_.resize(depth + 1);
        trace_[depth] = refiner_.refine(p);
        if (have_first_) {
            // Prune when this node's invariant already exceeds the best leaf's.
            std::size_t len = std::min(trace_.size(), best_trace_.size());
            if (std::lexicographical_compare(best_trace_.begin(), best_trace_.begin() + len, trace_.begin(),
                                             trace_.begin() + len))
                return kNone;
        }
        if (p.k == n_) return leaf(p);

        std::vector<int> size(p.k, 0);
        for (int c : p.cell) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;
        std::vector<Vertex> children;
        for (Vertex v = 0; v < n_; ++v)
            if (p.cell[v] == target) children.push_back(v);

        std::vector<Vertex> explored;
        std::size_t autos_seen = SIZE_MAX;
        UnionFind uf(0);
        for (Vertex v : children) {
            if (autos_.size() != autos_seen) {
                uf = path_orbits();
                autos_seen = autos_.size();
            }
            bool skip = false;
            for (Vertex u : explored)
                if (uf.find(u) == uf.find(v)) {
                    skip = true;
                    break;
                }
            if (skip) continue;
            explored.push_back(v);
            path_.push_back(v);
            int j = dfs(individualize(p, v), depth + 1);
            path_.pop_back();
            trace_.resize(depth + 1);
            if (j < depth) return j;
        }
        return kNone;
    }

    const ColouredGraph& g_;
    int n_;
    Refiner refiner_;
    std::vector<std::uint64_t> trace_;
    std::vector<Vertex> path_;
    bool have_first_ = false;
    std::vector<std::uint64_t> first_trace_, best_trace_;
    std::vector<Word> first_code_, best_code_;
    std::vector<Vertex> first_lab_, best_lab_, first_path_, best_path_;
    std::vector<Perm> autos_;
};

void put_u32(std::string& s, std::uint32_t x)
{
    for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

std::string encode(const ColouredGraph& g, const std::vector<Vertex>& lab)
{
    const int n = g.order();
    std::string s;
    s.reserve(8 + 2 * n + n * n / 16);
    put_u32(s, static_cast<std::uint32_t>(n));
    put_u32(s, static_cast<std::uint32_t>(g.num_colours()));
    for (int i = 0; i < n; ++i) {
        Colour c = g.colour(lab[i]);
        s.push_back(static_cast<char>(c & 0xff));
        s.push_back(static_cast<char>((c >> 8) & 0xff));
    }
    unsigned char acc = 0;
    int nb = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(lab[i], lab[j]) ? 1 : 0));
            if (++nb == 8) {
                s.push_back(static_cast<char>(acc));
                acc = 0;
                nb = 0;
            }
        }
    if (nb) s.push_back(static_cast<char>(acc << (8 - nb)));
    return s;
}

} // namespace

CanonicalForm canonical_form(const ColouredGraph& g, std::span<const Vertex> individualized)
{
    Search search(g);
    search.run(initial_partition(g, individualized));
    CanonicalForm cf;
    cf.labelling = search.best_lab();
    cf.code = encode(g, cf.labelling);
    return cf;
}

std::string canonical_code(const ColouredGraph& g) { return canonical_form(g).code; }

std::optional<Perm> are_isomorphic(const ColouredGraph& a, const ColouredGraph& b, bool allow_colour_permutation)
{
    if (a.order() != b.order() || a.num_colours() != b.num_colours() || a.num_edges() != b.num_edges())
        return std::nullopt;
    auto match = [&](const ColouredGraph& bb) -> std::optional<Perm> {
        CanonicalForm ca = canonical_form(a), cb = canonical_form(bb);
        if (ca.code != cb.code) return std::nullopt;
        Perm pos(a.order());
        for (int i = 0; i < a.order(); ++i) pos[ca.labelling[i]] = i;
        Perm map(a.order());
        for (Vertex v = 0; v < a.order(); ++v) map[v] = cb.labelling[pos[v]];
        return map;
    };
    if (!allow_colour_permutation) return match(b);
    std::vector<int> perm(b.num_colours());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool sizes_ok = true;
        for (Colour c = 0; c < b.num_colours(); ++c)
            if (b.class_size(c) != a.class_size(perm[c])) sizes_ok = false;
        if (!sizes_ok) continue;
        std::vector<Colour> cols(b.order());
        for (Vertex v = 0; v < b.order(); ++v) cols[v] = perm[b.colour(v)];
        if (auto m = match(recolour(b, cols))) return m;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::vector<Vertex> orbit_representatives(int n, const std::vector<Perm>& generators)
{
    UnionFind uf(n);
    for (const auto& g : generators)
        for (Vertex v = 0; v < n; ++v) uf.unite(v, g[v]);
    std::vector<Vertex> rep(n);
    for (Vertex v = 0; v < n; ++v) rep[v] = uf.find(v);
    return rep;
}

PermGroup automorphism_group(const ColouredGraph& g)
{
    const int n = g.order();
    PermGroup G;
    G.degree = n;

    // Base from the first path of the search tree, with the candidate cell at each level.
    Refiner refiner(g);
    Partition p = initial_partition(g, {});
    refiner.refine(p);
    std::vector<std::vector<Vertex>> cells;
    while (p.k < n) {
        std::vector<int> size(p.k, 0);
        for (int c : p.cell) ++size[c];
        int target = 0;
        while (size[target] == 1) ++target;
        std::vector<Vertex> cell;
        for (Vertex v = 0; v < n; ++v)
            if (p.cell[v] == target) cell.push_back(v);
        G.base.push_back(cell.front());
        cells.push_back(cell);
        p = individualize(p, cell.front());
        refiner.refine(p);
    }

    const int levels = static_cast<int>(G.base.size());
    G.orbit_sizes.assign(levels, 1);
    for (int i = levels - 1; i >= 0; --i) {
        std::vector<Vertex> tuple(G.base.begin(), G.base.begin() + i);
        tuple.push_back(G.base[i]);
        std::optional<CanonicalForm> ref;
        for (Vertex v : cells[i]) {
            auto rep = orbit_representatives(n, G.generators);
            if (rep[v] == rep[G.base[i]]) continue;
            if (!ref) ref = canonical_form(g, tuple);
            tuple.back() = v;
            CanonicalForm cv = canonical_form(g, tuple);
            tuple.back() = G.base[i];
            if (cv.code != ref->code) continue;
            Perm pi(n);
            for (int k = 0; k < n; ++k) pi[cv.labelling[k]] = ref->labelling[k];
            G.generators.push_back(std::move(pi));
        }
        auto rep = orbit_representatives(n, G.generators);
        int sz = 0;
        for (Vertex v : cells[i])
            if (rep[v] == rep[G.base[i]]) ++sz;
        G.orbit_sizes[i] = sz;
    }
    G.order = 1;
    for (int s : G.orbit_sizes) G.order *= s;
    return G;
}

} // namespace homreg
