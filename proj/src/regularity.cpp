#include "homreg/regularity.hpp"

#include "homreg/error.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace homreg {

std::string to_string(const SrgParams& p)
{
    auto opt = [](const std::optional<long>& x) { return x ? std::to_string(*x) : std::string("-"); };
    return "(" + std::to_string(p.n) + "," + std::to_string(p.d) + "," + opt(p.lambda) + "," + opt(p.mu) + ")";
}

const char* to_string(Property p) { return p == Property::TR ? "TR" : "UH"; }

std::optional<SrgParams> srg_parameters(const ColouredGraph& g)
{
    const int n = g.order();
    SrgParams p;
    p.n = n;
    p.d = g.degree(0);
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) != p.d) return std::nullopt;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            long c = popcount_and(g.row(u), g.row(v), g.words());
            auto& slot = g.adjacent(u, v) ? p.lambda : p.mu;
            if (!slot)
                slot = c;
            else if (*slot != c)
                return std::nullopt;
        }
    return p;
}

bool is_primitive(const ColouredGraph& g) { return is_connected(g) && is_connected(complement(g)); }

namespace {

int g_threads = 0;

// Colex order on ascending vertex lists of equal length.
bool colex_less(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
{
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

struct ClassInfo {
    std::vector<Vertex> first;
    std::vector<int> lam;
    std::vector<Vertex> dev; // empty if none
};

struct StratumResult {
    bool done = false;
    std::vector<int> class_ids;   // in order of first occurrence
    std::vector<ClassInfo> infos; // parallel to class_ids
};

class ClassRegistry {
public:
    int id(const std::string& code)
    {
        std::lock_guard lock(mu_);
        auto [it, fresh] = ids_.emplace(code, static_cast<int>(ids_.size()));
        return it->second;
    }

private:
    std::mutex mu_;
    std::unordered_map<std::string, int> ids_;
};

// Enumerates all m-subsets with a fixed largest element, in colex order.
class StratumScanner {
public:
    StratumScanner(const ColouredGraph& g, int m, ClassRegistry& reg)
        : g_(g), m_(m), reg_(reg), w_(g.words()), c_(g.num_colours())
    {
        cb_ = 0;
        while ((1 << cb_) < c_) ++cb_;
        bits_ = m * cb_ + m * (m - 1) / 2;
        if (bits_ <= 20) table_.assign(std::size_t{1} << bits_, -1);
        chosen_.resize(m);
        prefix_.assign(static_cast<std::size_t>(m + 1) * w_, 0);
        lam_.resize(c_);
    }

    StratumResult scan(Vertex v)
    {
        res_ = StratumResult{};
        slot_.clear();
        stop_ = false;
        chosen_[0] = v;
        std::copy(g_.row(v), g_.row(v) + w_, &prefix_[w_]);
        std::uint64_t raw = static_cast<std::uint64_t>(g_.colour(v));
        if (m_ == 1)
            leaf(raw);
        else
            choose(1, raw);
        res_.done = true;
        return std::move(res_);
    }

private:
    void choose(int pos, std::uint64_t raw)
    {
        const Vertex upper = chosen_[pos - 1];
        const Word* pre = &prefix_[static_cast<std::size_t>(pos) * w_];
        Word* cur = &prefix_[static_cast<std::size_t>(pos + 1) * w_];
        const int adj_off = m_ * cb_ + pos * (pos - 1) / 2;
        for (Vertex x = m_ - 1 - pos; x < upper && !stop_; ++x) {
            chosen_[pos] = x;
            std::uint64_t r = raw | (static_cast<std::uint64_t>(g_.colour(x)) << (pos * cb_));
            const Word* rx = g_.row(x);
            for (int i = 0; i < pos; ++i)
                if ((rx[chosen_[i] >> 6] >> (chosen_[i] & 63)) & 1u) r |= std::uint64_t{1} << (adj_off + i);
            for (int i = 0; i < w_; ++i) cur[i] = pre[i] & rx[i];
            if (pos + 1 == m_)
                leaf(r);
            else
                choose(pos + 1, r);
        }
    }

    int class_of(std::uint64_t raw)
    {
        if (!table_.empty()) {
            int& t = table_[raw];
            if (t < 0) t = lookup();
            return t;
        }
        auto it = map_.find(raw);
        if (it != map_.end()) return it->second;
        int id = lookup();
        map_.emplace(raw, id);
        return id;
    }

    int lookup()
    {
        std::vector<Vertex> vs(chosen_.begin(), chosen_.end());
        // Induced subgraphs are re-compacted, so the original colour ids are part of the key.
        std::string key = canonical_code(induced_ordered(g_, vs));
        std::vector<bool> present(c_, false);
        for (Vertex v : vs) present[g_.colour(v)] = true;
        key.push_back('|');
        for (Colour c = 0; c < c_; ++c) key.push_back(present[c] ? '1' : '0');
        return reg_.id(key);
    }

    void leaf(std::uint64_t raw)
    {
        const Word* inter = &prefix_[static_cast<std::size_t>(m_) * w_];
        for (Colour c = 0; c < c_; ++c) lam_[c] = popcount_and(inter, g_.class_mask(c), w_);
        const int cls = class_of(raw);
        if (cls >= static_cast<int>(slot_.size())) slot_.resize(cls + 1, -1);
        int& s = slot_[cls];
        if (s < 0) {
            s = static_cast<int>(res_.infos.size());
            res_.class_ids.push_back(cls);
            res_.infos.push_back({sorted_chosen(), lam_, {}});
            return;
        }
        ClassInfo& info = res_.infos[s];
        if (info.lam != lam_) {
            info.dev = sorted_chosen();
            stop_ = true; // later subsets of this stratum cannot give an earlier witness
        }
    }

    std::vector<Vertex> sorted_chosen() const
    {
        std::vector<Vertex> s(chosen_.rbegin(), chosen_.rend());
        return s;
    }

    const ColouredGraph& g_;
    int m_;
    ClassRegistry& reg_;
    int w_, c_, cb_, bits_;
    std::vector<int> table_;
    std::unordered_map<std::uint64_t, int> map_;
    std::vector<Vertex> chosen_;
    std::vector<Word> prefix_;
    std::vector<int> lam_;
    std::vector<int> slot_;
    StratumResult res_;
    bool stop_ = false;
};

Witness make_tr_witness(const ColouredGraph& g, const ClassInfo& ref, const std::vector<Vertex>& other,
                        const std::vector<int>& other_lam)
{
    Witness w;
    auto iso = are_isomorphic(induced(g, ref.first), induced(g, other));
    if (!iso) throw IntegrityError("k-TR witness subsets are not isomorphic");
    w.first = ref.first;
    for (std::size_t i = 0; i < ref.first.size(); ++i) w.second.push_back(other[(*iso)[i]]);
    for (Colour c = 0; c < g.num_colours(); ++c)
        if (ref.lam[c] != other_lam[c]) {
            w.colour = c;
            w.lambda_first = ref.lam[c];
            w.lambda_second = other_lam[c];
            break;
        }
    return w;
}

std::vector<int> lambda_vector(const ColouredGraph& g, const std::vector<Vertex>& u)
{
    std::vector<int> lam(g.num_colours());
    for (Colour c = 0; c < g.num_colours(); ++c) lam[c] = lambda(g, u, c);
    return lam;
}

// Checks level m; returns a witness on failure.
std::optional<Witness> tr_level(const ColouredGraph& g, int m)
{
    const int n = g.order();
    if (m > n) return std::nullopt;
    int cb = 0;
    while ((1 << cb) < g.num_colours()) ++cb;
    if (m * cb + m * (m - 1) / 2 > 64) throw RefusedError("k-TR level " + std::to_string(m) + " is too large");
    ClassRegistry reg;
    std::vector<StratumResult> strata(n);
    std::atomic<int> next{m - 1};
    std::atomic<int> stop{INT_MAX};
    auto worker = [&] {
        StratumScanner scanner(g, m, reg);
        while (true) {
            int v = next.fetch_add(1);
            if (v >= n || v > stop.load()) return;
            strata[v] = scanner.scan(v);
            bool dev = false;
            for (const auto& info : strata[v].infos)
                if (!info.dev.empty()) dev = true;
            if (dev) {
                int cur = stop.load();
                while (v < cur && !stop.compare_exchange_weak(cur, v)) {
                }
            }
        }
    };
    const int threads = std::max(1, std::min(thread_count(), n));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::unordered_map<int, const ClassInfo*> ref;
    for (int v = m - 1; v < n && v <= stop.load(); ++v) {
        const StratumResult& s = strata[v];
        if (!s.done) throw IntegrityError("k-TR stratum skipped");
        const ClassInfo* best_ref = nullptr;
        std::vector<Vertex> best;
        std::vector<int> best_lam;
        for (std::size_t i = 0; i < s.infos.size(); ++i) {
            const ClassInfo& info = s.infos[i];
            auto it = ref.find(s.class_ids[i]);
            const ClassInfo* r = nullptr;
            std::vector<Vertex> cand;
            std::vector<int> cand_lam;
            if (it != ref.end() && it->second->lam != info.lam) {
                r = it->second;
                cand = info.first;
                cand_lam = info.lam;
            } else if (!info.dev.empty()) {
                r = it != ref.end() ? it->second : &info;
                cand = info.dev;
                cand_lam = lambda_vector(g, info.dev);
            }
            if (r && (best.empty() || colex_less(cand, best))) {
                best_ref = r;
                best = cand;
                best_lam = cand_lam;
            }
        }
        if (best_ref) return make_tr_witness(g, *best_ref, best, best_lam);
        for (std::size_t i = 0; i < s.infos.size(); ++i) ref.emplace(s.class_ids[i], &s.infos[i]);
    }
    return std::nullopt;
}

std::optional<Witness> uh_level(const ColouredGraph& g, std::vector<std::vector<Vertex>>& reps)
{
    const int n = g.order();
    std::vector<std::vector<Vertex>> next;
    for (const auto& t : reps) {
        // Group candidate extensions by colour and adjacency pattern to t.
        std::map<std::vector<int>, std::vector<Vertex>> groups;
        std::vector<bool> in_t(n, false);
        for (Vertex x : t) in_t[x] = true;
        for (Vertex v = 0; v < n; ++v) {
            if (in_t[v]) continue;
            std::vector<int> key{g.colour(v)};
            for (Vertex x : t) key.push_back(g.adjacent(v, x) ? 1 : 0);
            groups[key].push_back(v);
        }
        std::vector<std::vector<Vertex>> ordered;
        for (auto& [key, members] : groups) ordered.push_back(members);
        std::sort(ordered.begin(), ordered.end());

        std::vector<Perm> gens;
        for (const auto& members : ordered) {
            const Vertex u = members.front();
            std::vector<Vertex> tu = t;
            tu.push_back(u);
            std::optional<CanonicalForm> cu;
            for (std::size_t i = 1; i < members.size(); ++i) {
                const Vertex v = members[i];
                auto rep = orbit_representatives(n, gens);
                if (rep[u] == rep[v]) continue;
                if (!cu) cu = canonical_form(g, tu);
                std::vector<Vertex> tv = t;
                tv.push_back(v);
                CanonicalForm cv = canonical_form(g, tv);
                if (cv.code != cu->code) {
                    Witness w;
                    w.first = tu;
                    w.second = tv;
                    return w;
                }
                Perm pi(n);
                for (int k = 0; k < n; ++k) pi[cv.labelling[k]] = cu->labelling[k];
                gens.push_back(std::move(pi));
            }
            next.push_back(std::move(tu));
        }
    }
    reps = std::move(next);
    return std::nullopt;
}

} // namespace

void set_thread_count(int n) { g_threads = std::max(0, n); }

int thread_count()
{
    if (g_threads > 0) return g_threads;
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

RegularityVerdict is_k_tuple_regular(const ColouredGraph& g, int k)
{
    if (k < 1) throw Error("k must be at least 1");
    RegularityVerdict v;
    v.property = Property::TR;
    v.k = k;
    for (int m = 1; m <= std::min(k, g.order()); ++m) {
        if (auto w = tr_level(g, m)) {
            v.holds = false;
            v.failed_level = m;
            v.witness = std::move(w);
            return v;
        }
    }
    return v;
}

RegularityVerdict is_k_ultrahomogeneous(const ColouredGraph& g, int k, bool force)
{
    if (k < 1) throw Error("k must be at least 1");
    if (g.order() > kUhVertexLimit && !force)
        throw RefusedError("k-UH on " + std::to_string(g.order()) + " vertices exceeds the default limit of " +
                           std::to_string(kUhVertexLimit) + "; pass --force to run it anyway");
    RegularityVerdict v;
    v.property = Property::UH;
    v.k = k;
    std::vector<std::vector<Vertex>> reps{{}};
    for (int m = 1; m <= std::min(k, g.order()); ++m) {
        if (auto w = uh_level(g, reps)) {
            v.holds = false;
            v.failed_level = m;
            v.witness = std::move(w);
            return v;
        }
    }
    return v;
}

int max_regularity(const ColouredGraph& g, Property p, int k_max, bool force)
{
    if (k_max < 1) throw Error("k_max must be at least 1");
    RegularityVerdict v = p == Property::TR ? is_k_tuple_regular(g, k_max) : is_k_ultrahomogeneous(g, k_max, force);
    return v.holds ? k_max : v.failed_level - 1;
}

bool validate_witness(const ColouredGraph& g, const RegularityVerdict& v)
{
    if (v.holds || !v.witness) return false;
    const Witness& w = *v.witness;
    if (w.first.size() != w.second.size() || static_cast<int>(w.first.size()) != v.failed_level) return false;
    for (std::size_t i = 0; i < w.first.size(); ++i) {
        if (g.colour(w.first[i]) != g.colour(w.second[i])) return false;
        for (std::size_t j = i + 1; j < w.first.size(); ++j)
            if (g.adjacent(w.first[i], w.first[j]) != g.adjacent(w.second[i], w.second[j])) return false;
    }
    if (v.property == Property::TR) {
        if (w.colour < 0) return false;
        return lambda(g, w.first, w.colour) == w.lambda_first && lambda(g, w.second, w.colour) == w.lambda_second &&
               w.lambda_first != w.lambda_second;
    }
    return canonical_form(g, w.first).code != canonical_form(g, w.second).code;
}

std::pair<std::optional<ColouredGraph>, std::optional<ColouredGraph>>
colour_subconstituents(const ColouredGraph& g, Colour r, Vertex b)
{
    if (r < 0 || r >= g.num_colours()) throw Error("invalid colour id");
    if (b < 0 || b >= g.order()) throw Error("vertex out of range");
    if (g.colour(b) == r) throw Error("vertex b lies in class R");
    VertexSet cls = g.colour_class(r);
    VertexSet in = cls & g.neighbours(b);
    VertexSet out = cls - g.neighbours(b);
    std::pair<std::optional<ColouredGraph>, std::optional<ColouredGraph>> res;
    if (!in.empty()) res.first = induced(g, in.members());
    if (!out.empty()) res.second = induced(g, out.members());
    return res;
}

std::optional<std::pair<int, int>> recognize_clique_union(const ColouredGraph& g)
{
    const int n = g.order();
    VertexSet seen(n);
    int s = 0, t = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (seen.test(v)) continue;
        VertexSet comp = g.neighbours(v);
        comp.set(v);
        int size = comp.count();
        for (Vertex u = comp.first(); u >= 0; u = comp.next(u + 1)) {
            VertexSet closed = g.neighbours(u);
            closed.set(u);
            if (!(closed == comp)) return std::nullopt;
            seen.set(u);
        }
        if (t >= 0 && size != t) return std::nullopt;
        t = size;
        ++s;
    }
    return std::make_pair(s, t);
}

RookOrShrikhande recognize_rook_or_shrikhande(const ColouredGraph& g)
{
    RookOrShrikhande r;
    const int n = g.order();
    int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (m * m != n) return r;
    if (n == 1) {
        r.kind = RookOrShrikhande::Rook;
        r.m = 1;
        return r;
    }
    auto p = srg_parameters(g);
    SrgParams want{n, 2L * m - 2, m - 2L, 2L};
    if (!p || !(*p == want)) return r;
    r.m = m;
    if (m != 4) {
        // Shrikhande's theorem: these parameters determine the rook's graph for m != 4.
        r.kind = RookOrShrikhande::Rook;
        return r;
    }
    auto nb = induced(g, g.neighbours(0).members());
    auto cu = recognize_clique_union(nb);
    r.kind = (cu && cu->first == 2 && cu->second == 3) ? RookOrShrikhande::Rook : RookOrShrikhande::Shrikhande;
    return r;
}

} // namespace homreg
