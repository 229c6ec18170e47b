#include "homreg/srg_analysis.hpp"

#include "homreg/error.hpp"
#include "homreg/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace homreg {

bool srg_identity_check(const SrgParams& p)
{
    if (!p.lambda || !p.mu)
        throw Error("identity needs lambda and mu; " + to_string(p) +
                    " is complete or edgeless, where the undefined value may be chosen freely");
    return p.d * (p.d - *p.lambda - 1) == (p.n - p.d - 1) * *p.mu;
}

const char* to_string(Rejection r)
{
    switch (r) {
    case Rejection::Feasible: return "feasible";
    case Rejection::D2: return "d2 not natural";
    case Rejection::Lambda2: return "lambda2 not natural";
    default: return "mu2 not natural";
    }
}

namespace {

bool natural(const Rational& x) { return x.denominator() == 1 && x.numerator() >= 0; }

} // namespace

PartitionDerivation derive_partition(const SrgParams& whole, const SrgParams& part1)
{
    if (!whole.lambda || !whole.mu || whole.d <= 0 || whole.d >= whole.n - 1)
        throw Error("derive_partition: whole graph must be primitive, got " + to_string(whole));
    if (part1.n < 1 || part1.n >= whole.n) throw Error("derive_partition: need 1 <= n1 < n");
    if (part1.d > 0 && !part1.lambda) throw Error("derive_partition: lambda1 missing for d1 > 0");
    PartitionDerivation r;
    r.whole = whole;
    r.part1 = part1;
    const long n = whole.n, d = whole.d, lam = *whole.lambda;
    const long n1 = part1.n, d1 = part1.d;
    r.n2 = n - n1;
    const long n2 = r.n2;
    r.d2 = Rational(d) - Rational((d - d1) * n1, n2);
    if (r.d2 != Rational(0)) {
        // lambda1 only appears multiplied by d1, so its undefined value is irrelevant when d1 = 0.
        const long lam1 = d1 > 0 ? *part1.lambda : 0;
        r.lambda2 = Rational(lam) - Rational(lam) * (Rational(d) - r.d2) / r.d2 +
                    Rational((lam - lam1) * d1 * n1) / (r.d2 * n2);
    }
    if (r.d2 != Rational(n2 - 1)) {
        const Rational lam2 = r.lambda2.value_or(0);
        r.mu2 = r.d2 * (r.d2 - lam2 - 1) / (Rational(n2) - r.d2 - 1);
    }
    if (!natural(r.d2))
        r.reason = Rejection::D2;
    else if (r.lambda2 && !natural(*r.lambda2))
        r.reason = Rejection::Lambda2;
    else if (r.mu2 && !natural(*r.mu2))
        r.reason = Rejection::Mu2;
    return r;
}

std::filesystem::path default_parameter_list() { return data_dir() / "brouwer_srg_snapshot.csv"; }

ParameterTable load_parameter_list(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line.rfind("n,d,lambda,mu", 0) != 0)
        throw Error(path.string() + ": expected header 'n,d,lambda,mu'");
    ParameterTable t;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> f;
        for (std::string tok; std::getline(ls, tok, ',');) f.push_back(tok);
        if (f.size() != 4) throw Error(path.string() + ":" + std::to_string(lineno) + ": expected 4 fields");
        SrgParams p{parse_int(f[0], "n"), parse_int(f[1], "d"), parse_int(f[2], "lambda"), parse_int(f[3], "mu")};
        if (!srg_identity_check(p))
            throw IntegrityError(path.string() + ":" + std::to_string(lineno) + ": " + to_string(p) +
                                 " violates d(d-lambda-1) = (n-d-1)mu");
        t.push_back({"", p, Candidate::Source::ParameterList});
    }
    return t;
}

ParameterTable enumerate_imprimitive_candidates(int n_max, int s_max, int t_max)
{
    if (n_max < 1 || s_max < 1 || t_max < 1) throw Error("bounds must be at least 1");
    ParameterTable t;
    auto add = [&](std::string label, SrgParams p) {
        if (p.n <= n_max) t.push_back({std::move(label), p, Candidate::Source::Imprimitive});
    };
    for (int k = 1; k <= t_max; ++k) {
        SrgParams p{k, k - 1L, {}, {}};
        if (k >= 2) p.lambda = k - 2L;
        add("K_" + std::to_string(k), p);
    }
    for (int s = 2; s <= s_max; ++s) add("co(K_" + std::to_string(s) + ")", {s, 0, {}, 0L});
    for (int k = 2; k <= t_max; ++k)
        for (int s = 2; s <= s_max; ++s)
            add(std::to_string(s) + "K_" + std::to_string(k), {long(s) * k, k - 1L, k - 2L, 0L});
    // The complement of sK_t has clique number s and independence number t.
    for (int s = 2; s <= t_max; ++s)
        for (int k = 2; k <= s_max; ++k) {
            const long n = long(s) * k, d = n - k;
            add("co(" + std::to_string(s) + "K_" + std::to_string(k) + ")", {n, d, n - 2L * k, d});
        }
    return t;
}

PruneReport prune_partitions(const SrgParams& whole, const ParameterTable& candidates)
{
    PruneReport r;
    r.whole = whole;
    if (!whole.lambda || !whole.mu) throw Error("prune_partitions: whole graph must be primitive");
    for (const auto& c : candidates) {
        const auto& p = c.params;
        if (p.n > whole.n / 2 || p.d > whole.d) continue;
        if (p.lambda && *p.lambda > *whole.lambda) continue;
        if (p.mu && *p.mu > *whole.mu) continue;
        r.candidates.push_back(c);
        r.rows.push_back(derive_partition(whole, p));
        if (r.rows.back().reason == Rejection::Feasible)
            ++r.feasible;
        else
            ++r.pruned;
    }
    return r;
}

std::string format_rational(const Rational& x)
{
    if (x.denominator() == 1) return std::to_string(x.numerator());
    // floor(1000 x + 1/2), computed exactly
    const Rational scaled = x * 1000 + Rational(1, 2);
    long long q = scaled.numerator() / scaled.denominator();
    if (scaled.numerator() % scaled.denominator() != 0 && scaled.numerator() < 0) --q;
    const bool neg = q < 0;
    const long long a = neg ? -q : q;
    std::ostringstream os;
    os << (neg ? "-" : "") << a / 1000 << '.';
    os.width(3);
    os.fill('0');
    os << a % 1000;
    return os.str();
}

std::string format_appendix(const PruneReport& r)
{
    std::ostringstream os;
    auto opt = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string("-"); };
    os << "label,n1,d1,lambda1,mu1,n2,d2,lambda2,mu2,reason\n";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& c = r.candidates[i];
        const auto& d = r.rows[i];
        os << c.label << ',' << c.params.n << ',' << c.params.d << ',' << opt(c.params.lambda) << ','
           << opt(c.params.mu) << ',' << d.n2 << ',' << format_rational(d.d2) << ',';
        // Values after the first rejected one are left blank.
        if (d.reason != Rejection::D2) {
            os << (d.lambda2 ? format_rational(*d.lambda2) : "-");
            os << ',';
            if (d.reason != Rejection::Lambda2) os << (d.mu2 ? format_rational(*d.mu2) : "-");
        } else {
            os << ',';
        }
        os << ',' << to_string(d.reason) << '\n';
    }
    return os.str();
}

std::optional<PruneHost> prune_host(const std::string& name)
{
    if (name == "schlafli") return PruneHost{"schlafli", {27, 16, 10L, 8L}, 3, 6};
    if (name == "mclaughlin") return PruneHost{"mclaughlin", {275, 112, 30L, 56L}, 22, 5};
    return std::nullopt;
}

PruneReport prune_host_partitions(const PruneHost& host, const ParameterTable& list)
{
    ParameterTable all = list;
    auto imp = enumerate_imprimitive_candidates(static_cast<int>(host.params.n / 2), host.independence_number,
                                                host.clique_number);
    all.insert(all.end(), imp.begin(), imp.end());
    return prune_partitions(host.params, all);
}

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> brute_force_partition(const ColouredGraph& g)
{
    const int n = g.order();
    if (n > kBruteForceMaxOrder)
        throw RefusedError("brute_force_partition is capped at " + std::to_string(kBruteForceMaxOrder) +
                           " vertices; use the parameter pruning instead");
    if (n < 2) return std::nullopt;
    std::vector<int> side(n, -1), deg_in(n, 0), open(n);
    for (Vertex v = 0; v < n; ++v) open[v] = g.degree(v);
    int target[2] = {-1, -1};
    int count[2] = {0, 0};
    std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> found;

    // Within-side degree of u lies in [deg_in, deg_in + open]; it is final once open == 0.
    auto feasible = [&](int depth_targets[2]) {
        for (Vertex u = 0; u < n; ++u) {
            if (side[u] < 0) continue;
            int& t = target[side[u]];
            if (open[u] == 0 && t < 0) {
                t = deg_in[u];
                depth_targets[side[u]] = 1;
            }
        }
        for (Vertex u = 0; u < n; ++u) {
            if (side[u] < 0) continue;
            const int t = target[side[u]];
            if (t >= 0 && (deg_in[u] > t || deg_in[u] + open[u] < t)) return false;
        }
        return true;
    };

    std::function<void(Vertex)> assign = [&](Vertex v) {
        if (found) return;
        if (v == n) {
            if (count[1] == 0) return;
            std::vector<Vertex> parts[2];
            for (Vertex u = 0; u < n; ++u) parts[side[u]].push_back(u);
            if (srg_parameters(induced(g, parts[0])) && srg_parameters(induced(g, parts[1])))
                found = std::make_pair(parts[0], parts[1]);
            return;
        }
        const int last = v == 0 ? 0 : 1; // vertex 0 always lies in the first part
        for (int s = 0; s <= last; ++s) {
            side[v] = s;
            ++count[s];
            for (Vertex u : g.neighbours(v).members()) {
                --open[u];
                if (side[u] == s && u != v) {
                    ++deg_in[u];
                    ++deg_in[v];
                }
            }
            int set_here[2] = {0, 0};
            if (feasible(set_here)) assign(v + 1);
            for (int k = 0; k < 2; ++k)
                if (set_here[k]) target[k] = -1;
            for (Vertex u : g.neighbours(v).members()) {
                ++open[u];
                if (side[u] == s && u != v) {
                    --deg_in[u];
                    --deg_in[v];
                }
            }
            --count[s];
            side[v] = -1;
            if (found) return;
        }
    };
    assign(0);
    return found;
}

int clique_number(const ColouredGraph& g)
{
    int best = 0;
    std::function<void(VertexSet, int)> expand = [&](VertexSet cand, int size) {
        if (cand.empty()) {
            best = std::max(best, size);
            return;
        }
        while (!cand.empty()) {
            if (size + cand.count() <= best) return;
            Vertex v = cand.first();
            cand.reset(v);
            expand(cand & g.neighbours(v), size + 1);
        }
    };
    VertexSet all(g.order());
    all.fill();
    expand(all, 0);
    return best;
}

} // namespace homreg
