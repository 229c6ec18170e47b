#include "homreg/cli.hpp"

#include "homreg/canon.hpp"
#include "homreg/catalog.hpp"
#include "homreg/classify.hpp"
#include "homreg/designs.hpp"
#include "homreg/error.hpp"
#include "homreg/graph_io.hpp"
#include "homreg/hadamard.hpp"
#include "homreg/operations.hpp"
#include "homreg/regularity.hpp"
#include "homreg/srg_analysis.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace homreg {

namespace {

using Json = nlohmann::ordered_json;

// Result of one command before rendering.
struct Outcome {
    int code = kExitOk;
    std::string status = "ok";
    Json result = Json::object();
    std::string text;
};

Json vertices_json(const std::vector<Vertex>& vs)
{
    Json a = Json::array();
    for (Vertex v : vs) a.push_back(v + 1);
    return a;
}

std::string vertices_text(const std::vector<Vertex>& vs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i] + 1);
    return s + "}";
}

Json opt_json(const std::optional<long>& x) { return x ? Json(*x) : Json(nullptr); }

Json params_json(const SrgParams& p)
{
    return Json{{"n", p.n}, {"d", p.d}, {"lambda", opt_json(p.lambda)}, {"mu", opt_json(p.mu)}};
}

Json graph_json(const ColouredGraph& g)
{
    return Json{{"order", g.order()}, {"edges", g.num_edges()}, {"colours", g.num_colours()}};
}

void write_text_file(const std::string& path, const std::string& content)
{
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path);
    f << content;
    if (!f) throw IoError("write failed: " + path);
}

// Writes to the path, or returns the content as command output when the path is empty.
void emit(Outcome& o, const std::string& path, const std::string& content, const char* format)
{
    if (path.empty()) {
        o.text += content;
        o.result["format"] = format;
        o.result["content"] = content;
    } else {
        write_text_file(path, content);
        o.result["output"] = path;
    }
}

// ---- gen ----

struct GenArgs {
    std::string family;
    std::optional<int> m, d, q, s, t;
    std::string eps = "+";
    std::string out;
};

int need(const std::optional<int>& v, const char* flag, const std::string& family)
{
    if (!v) throw CLI::ValidationError(std::string(flag), "family '" + family + "' requires " + flag);
    return *v;
}

Outcome cmd_gen(const GenArgs& a)
{
    FamilySpec spec;
    spec.tag = a.family;
    if (a.eps != "+" && a.eps != "-") throw CLI::ValidationError("--eps", "expected + or -");
    spec.plus = a.eps == "+";
    if (a.family == "rook")
        spec.m = need(a.m, "--m", a.family);
    else if (a.family == "cycle" || a.family == "complete")
        spec.t = need(a.t, "--t", a.family);
    else if (a.family == "union_cliques") {
        spec.s = need(a.s, "--s", a.family);
        spec.t = need(a.t, "--t", a.family);
    } else if (a.family == "affine_polar")
        spec.d = need(a.d, "--d", a.family);
    else if (a.family == "gq_q5minus")
        spec.q = need(a.q, "--q", a.family);
    else if (!parse_sporadic(a.family))
        throw CLI::ValidationError("family", "unknown family '" + a.family + "'");
    ColouredGraph g = generate(spec);
    Outcome o;
    o.result["family"] = a.family;
    o.result["graph"] = graph_json(g);
    emit(o, a.out, to_cg_string(g), "cg");
    if (!a.out.empty())
        o.text = "wrote " + a.out + ": " + std::to_string(g.order()) + " vertices, " +
                 std::to_string(g.num_edges()) + " edges, " + std::to_string(g.num_colours()) + " colours\n";
    return o;
}

// ---- check ----

Outcome regularity_outcome(const ColouredGraph& g, const RegularityVerdict& v)
{
    Outcome o;
    const std::string name = std::to_string(v.k) + "-" + to_string(v.property);
    o.result["property"] = to_string(v.property);
    o.result["k"] = v.k;
    o.result["holds"] = v.holds;
    o.result["graph"] = graph_json(g);
    if (v.holds) {
        o.status = "holds";
        o.text = name + " holds\n";
        o.result["failed_level"] = nullptr;
        o.result["witness"] = nullptr;
        return o;
    }
    o.code = kExitFails;
    o.status = "fails";
    o.result["failed_level"] = v.failed_level;
    const Witness& w = *v.witness;
    Json wj{{"first", vertices_json(w.first)}, {"second", vertices_json(w.second)}};
    std::ostringstream t;
    t << name << " fails at level " << v.failed_level << "\n";
    t << "witness: " << vertices_text(w.first) << " and " << vertices_text(w.second);
    if (v.property == Property::TR) {
        wj["colour"] = w.colour;
        wj["lambda_first"] = w.lambda_first;
        wj["lambda_second"] = w.lambda_second;
        t << " induce isomorphic subgraphs (in this order) with " << w.lambda_first << " and " << w.lambda_second
          << " common neighbours of colour " << w.colour << "\n";
    } else {
        t << " induce isomorphic subgraphs (in this order) but no automorphism maps one tuple to the other\n";
    }
    o.result["witness"] = wj;
    o.text = t.str();
    return o;
}

Outcome cmd_check_srg(const ColouredGraph& g)
{
    Outcome o;
    auto p = srg_parameters(g);
    o.result["graph"] = graph_json(g);
    o.result["strongly_regular"] = p.has_value();
    if (!p) {
        o.code = kExitFails;
        o.status = "fails";
        o.text = "not strongly regular\n";
        return o;
    }
    const bool prim = is_primitive(g);
    o.status = "holds";
    o.result["parameters"] = params_json(*p);
    o.result["primitive"] = prim;
    o.text = "srg" + to_string(*p) + (prim ? ", primitive\n" : ", imprimitive\n");
    return o;
}

// ---- reduce ----

Json step_json(const ReductionStep& s)
{
    Json j{{"kind", to_string(s.kind)}};
    Json t = Json::array();
    for (auto [a, b] : s.toggles) t.push_back(Json::array({a, b}));
    j["toggles"] = t;
    if (s.kind == StepKind::UndoBlowUp) {
        j["colour"] = s.r;
        j["t"] = s.t;
    } else if (s.kind == StepKind::UndoMatching) {
        j["kept"] = s.r;
        j["removed"] = s.b;
    } else {
        j["parts"] = s.parts;
    }
    return j;
}

Json node_json(const ReductionNode& n)
{
    Json j = graph_json(n.graph);
    j["step"] = n.step ? step_json(*n.step) : Json(nullptr);
    Json ch = Json::array();
    for (const auto& c : n.children) ch.push_back(node_json(c));
    j["children"] = ch;
    return j;
}

void node_text(const ReductionNode& n, int depth, std::ostringstream& t)
{
    t << std::string(2 * depth, ' ') << n.graph.order() << " vertices, " << n.graph.num_colours() << " colours";
    if (!n.step) {
        t << " (core)\n";
    } else {
        const auto& s = *n.step;
        t << ": " << to_string(s.kind);
        for (auto [a, b] : s.toggles) t << " toggle(" << a << "," << b << ")";
        if (s.kind == StepKind::UndoBlowUp) t << " colour " << s.r << " t=" << s.t;
        if (s.kind == StepKind::UndoMatching) t << " keep " << s.r << " drop " << s.b;
        t << "\n";
    }
    for (const auto& c : n.children) node_text(c, depth + 1, t);
}

Outcome cmd_reduce(const ColouredGraph& g, const std::string& trace_path)
{
    ReductionTrace tr = reduce(g);
    Outcome o;
    o.result["steps"] = tr.num_steps();
    o.result["verified"] = tr.verified;
    Json cores = Json::array();
    for (const auto& c : tr.cores) cores.push_back(graph_json(c));
    o.result["cores"] = cores;
    Json trace = node_json(tr.root);
    o.result["trace"] = trace;
    std::ostringstream t;
    t << tr.num_steps() << " steps, " << tr.cores.size() << " cores, recomposition "
      << (tr.verified ? "verified" : "NOT verified") << "\n";
    node_text(tr.root, 0, t);
    o.text = t.str();
    if (!trace_path.empty()) write_text_file(trace_path, trace.dump(2) + "\n");
    return o;
}

// ---- classify ----

Json levels_json(const Levels& l)
{
    return Json{{"cap", l.cap}, {"max_tr", l.max_tr}, {"max_uh", l.max_uh ? Json(*l.max_uh) : Json(nullptr)}};
}

std::string levels_text(const Levels& l)
{
    return "max TR " + std::to_string(l.max_tr) + ", max UH " + (l.max_uh ? std::to_string(*l.max_uh) : "not run") +
           " (cap " + std::to_string(l.cap) + ")";
}

Outcome cmd_classify(const ColouredGraph& g, int k_cap, bool force)
{
    ClassificationVerdict v = classify(g, k_cap, force);
    Outcome o;
    o.result["k_cap"] = v.k_cap;
    o.result["graph"] = graph_json(g);
    o.result["levels"] = levels_json(v.levels);
    o.result["clause"] = v.clause ? Json(to_string(*v.clause)) : Json(nullptr);
    o.result["steps"] = v.trace.num_steps();
    std::ostringstream t;
    t << "graph: " << g.order() << " vertices, " << g.num_colours() << " colours, " << levels_text(v.levels) << "\n";
    if (v.clause) t << "two-class clause: " << to_string(*v.clause) << "\n";
    t << "reduction: " << v.trace.num_steps() << " steps, " << v.cores.size() << " cores\n";
    Json cores = Json::array();
    for (std::size_t i = 0; i < v.cores.size(); ++i) {
        const auto& c = v.cores[i];
        Json cj = graph_json(c.graph);
        cj["kind"] = to_string(c.kind);
        cj["label"] = c.label;
        cj["clause"] = c.clause ? Json(to_string(*c.clause)) : Json(nullptr);
        cj["hadamard_rank"] = c.hadamard ? Json(c.hadamard->rank()) : Json(nullptr);
        cj["levels"] = levels_json(c.levels);
        cores.push_back(cj);
        t << "core " << i + 1 << ": " << c.label << " [" << to_string(c.kind) << "], " << c.graph.order()
          << " vertices, " << c.graph.num_colours() << " colours, " << levels_text(c.levels) << "\n";
    }
    o.result["cores"] = cores;
    o.result["trace"] = node_json(v.trace.root);
    o.text = t.str();
    return o;
}

// ---- hadamard ----

std::string hm_string(const HadamardMatrix& h)
{
    std::ostringstream s;
    write_hm(s, h);
    return s.str();
}

// ---- verify ----

Json report_json(const HarnessReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name},
                              {"instances", c.instances},
                              {"passing", c.passing},
                              {"counterexamples", c.counterexamples},
                              {"notes", c.notes}});
    return Json{{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}};
}

void report_text(const HarnessReport& r, std::ostringstream& t)
{
    t << "suite " << r.suite << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& c : r.checks) {
        t << "  [" << (c.ok() ? "ok" : "FAIL") << "] " << c.name << ": " << c.instances << " instances, " << c.passing
          << " passing, " << c.counterexamples << " counterexamples\n";
        for (const auto& n : c.notes) t << "      " << n << "\n";
    }
}

Outcome reports_outcome(const std::vector<HarnessReport>& reports)
{
    Outcome o;
    bool ok = true;
    Json suites = Json::array();
    std::ostringstream t;
    for (const auto& r : reports) {
        ok = ok && r.ok();
        suites.push_back(report_json(r));
        report_text(r, t);
    }
    o.result["ok"] = ok;
    o.result["suites"] = suites;
    o.text = t.str();
    if (!ok) {
        o.code = kExitFails;
        o.status = "fails";
    }
    return o;
}

// ---- srg ----

Json rational_json(const Rational& x)
{
    return Json{{"exact", std::to_string(x.numerator()) + (x.denominator() == 1 ? "" : "/" + std::to_string(x.denominator()))},
                {"rounded", format_rational(x)}};
}

Outcome cmd_srg_prune(const std::string& graph, const std::string& table, const std::string& format)
{
    auto host = prune_host(graph);
    if (!host) throw CLI::ValidationError("--graph", "expected schlafli or mclaughlin, got '" + graph + "'");
    if (format != "appendix" && format != "summary")
        throw CLI::ValidationError("--format", "expected appendix or summary, got '" + format + "'");
    const auto list = load_parameter_list(table.empty() ? default_parameter_list() : std::filesystem::path(table));
    PruneReport rep = prune_host_partitions(*host, list);
    Outcome o;
    o.result["host"] = host->name;
    o.result["parameters"] = params_json(host->params);
    o.result["candidates"] = rep.rows.size();
    o.result["pruned"] = rep.pruned;
    o.result["feasible"] = rep.feasible;
    // Count given alongside the published table for the larger host.
    o.result["reference_count"] = host->name == "mclaughlin" ? Json(372) : Json(27);
    Json rows = Json::array();
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& c = rep.candidates[i];
        const auto& d = rep.rows[i];
        rows.push_back(Json{{"label", c.label},
                            {"part1", params_json(c.params)},
                            {"n2", d.n2},
                            {"d2", rational_json(d.d2)},
                            {"lambda2", d.lambda2 ? rational_json(*d.lambda2) : Json(nullptr)},
                            {"mu2", d.mu2 ? rational_json(*d.mu2) : Json(nullptr)},
                            {"reason", to_string(d.reason)}});
    }
    o.result["rows"] = rows;
    if (format == "appendix") {
        o.text = format_appendix(rep);
    } else {
        std::ostringstream t;
        t << host->name << " " << to_string(host->params) << ": " << rep.pruned << " of " << rep.rows.size()
          << " candidates pruned, " << rep.feasible << " feasible";
        if (host->name == "mclaughlin") t << " (published count 372)";
        t << "\n";
        o.text = t.str();
    }
    if (rep.feasible > 0) {
        o.code = kExitFails;
        o.status = "fails";
    }
    return o;
}

Outcome cmd_srg_bipartition(const ColouredGraph& g)
{
    auto part = brute_force_partition(g);
    Outcome o;
    o.result["graph"] = graph_json(g);
    o.result["found"] = part.has_value();
    if (!part) {
        o.code = kExitFails;
        o.status = "fails";
        o.text = "no partition into two strongly regular parts\n";
        return o;
    }
    auto p1 = *srg_parameters(induced(g, part->first));
    auto p2 = *srg_parameters(induced(g, part->second));
    o.status = "holds";
    o.result["part1"] = vertices_json(part->first);
    o.result["part2"] = vertices_json(part->second);
    o.result["parameters1"] = params_json(p1);
    o.result["parameters2"] = params_json(p2);
    o.text = "part 1 " + vertices_text(part->first) + " srg" + to_string(p1) + "\npart 2 " +
             vertices_text(part->second) + " srg" + to_string(p2) + "\n";
    return o;
}

// ---- design ----

Outcome cmd_design_check(const IncidenceStructure& s, int t)
{
    DesignReport r = design_check(s, t);
    Outcome o;
    o.result["v"] = r.v;
    o.result["b"] = r.b;
    o.result["t"] = r.t;
    o.result["k"] = r.k ? Json(*r.k) : Json(nullptr);
    o.result["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
    o.result["is_design"] = r.is_design();
    o.result["symmetric"] = r.symmetric;
    o.result["degenerate"] = r.degenerate ? Json(*r.degenerate) : Json(nullptr);
    std::ostringstream txt;
    if (r.is_design())
        txt << t << "-(" << r.v << "," << *r.k << "," << *r.lambda << ") design";
    else
        txt << "not a " << t << "-design";
    txt << ", " << r.b << " blocks";
    if (r.symmetric) txt << ", symmetric";
    if (r.degenerate) txt << (*r.degenerate ? ", degenerate" : ", non-degenerate");
    txt << "\n";
    o.text = txt.str();
    if (!r.is_design()) {
        o.code = kExitFails;
        o.status = "fails";
    } else {
        o.status = "holds";
    }
    return o;
}

std::string inc_string(const IncidenceStructure& s)
{
    std::ostringstream os;
    write_inc(os, s);
    return os.str();
}

Json error_json(const char* kind, const std::string& message) { return Json{{"kind", kind}, {"message", message}}; }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Highly regular coloured graphs: generation, regularity checks, reduction and classification",
                 "homreg"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    int threads = 0;
    app.add_flag("--json", json, "Emit the structured JSON envelope instead of text");
    app.add_option("--threads", threads, "Cap on worker threads (0 = available parallelism)")
        ->check(CLI::NonNegativeNumber);

    std::string command;
    std::function<Outcome()> action;
    auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> f) {
        sub->callback([&command, &action, name = std::move(name), f = std::move(f)] {
            command = name;
            action = f;
        });
    };

    // gen
    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a catalog graph as a .cg file");
    g->add_option("family", gen.family,
                  "rook, cycle, union_cliques, complete, clebsch, schlafli, shrikhande, higman_sims, mclaughlin, "
                  "affine_polar, gq_q5minus")
        ->required();
    g->add_option("--m", gen.m, "rook size");
    g->add_option("--d", gen.d, "affine polar half-dimension");
    g->add_option("--eps", gen.eps, "affine polar type, + or -");
    g->add_option("--q", gen.q, "field order for gq_q5minus");
    g->add_option("--s", gen.s, "number of cliques");
    g->add_option("--t", gen.t, "clique or cycle size");
    g->add_option("-o,--output", gen.out, "output path (default: standard output)");
    bind(g, "gen", [&] { return cmd_gen(gen); });

    // check
    auto* chk = app.add_subcommand("check", "Decide k-TR, k-UH or strong regularity");
    chk->require_subcommand(1);
    int k = 0;
    bool force = false;
    std::string file;
    auto* ctr = chk->add_subcommand("tr", "k-tuple regularity");
    ctr->add_option("--k", k, "level")->required()->check(CLI::PositiveNumber);
    ctr->add_option("file", file, "graph (.cg)")->required();
    bind(ctr, "check tr", [&] {
        auto gr = read_cg_file(file);
        return regularity_outcome(gr, is_k_tuple_regular(gr, k));
    });
    auto* cuh = chk->add_subcommand("uh", "k-ultrahomogeneity");
    cuh->add_option("--k", k, "level")->required()->check(CLI::PositiveNumber);
    cuh->add_flag("--force", force, "lift the vertex limit of the orbit computation");
    cuh->add_option("file", file, "graph (.cg)")->required();
    bind(cuh, "check uh", [&] {
        auto gr = read_cg_file(file);
        return regularity_outcome(gr, is_k_ultrahomogeneous(gr, k, force));
    });
    auto* csrg = chk->add_subcommand("srg", "strong regularity and parameters");
    csrg->add_option("file", file, "graph (.cg)")->required();
    bind(csrg, "check srg", [&] { return cmd_check_srg(read_cg_file(file)); });

    // reduce
    std::string trace_path;
    auto* red = app.add_subcommand("reduce", "Apply inverse operations down to the cores");
    red->add_option("file", file, "graph (.cg)")->required();
    red->add_option("--trace", trace_path, "write the reduction trace as JSON");
    bind(red, "reduce", [&] { return cmd_reduce(read_cg_file(file), trace_path); });

    // op
    auto* op = app.add_subcommand("op", "Apply one graph operation");
    op->require_subcommand(1);
    std::string out_path, file2;
    int colour = -1, with = -1, t = 0;
    std::optional<int> new_colour;
    auto* obu = op->add_subcommand("blowup", "homogeneous blow-up of an independent class");
    obu->add_option("file", file, "graph (.cg)")->required();
    obu->add_option("--colour", colour, "class to blow up")->required();
    obu->add_option("--t", t, "clique size")->required()->check(CLI::PositiveNumber);
    obu->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(obu, "op blowup", [&] {
        Outcome o;
        auto h = blow_up(read_cg_file(file), colour, t);
        o.result["graph"] = graph_json(h);
        emit(o, out_path, to_cg_string(h), "cg");
        return o;
    });
    auto* oma = op->add_subcommand("match", "homogeneous matching extension of an independent class");
    oma->add_option("file", file, "graph (.cg)")->required();
    oma->add_option("--colour", colour, "class to duplicate")->required();
    oma->add_option("--new-colour", new_colour, "id of the fresh class (default: after the existing ones)");
    oma->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(oma, "op match", [&] {
        Outcome o;
        auto h = matching_extension(read_cg_file(file), colour, new_colour);
        o.result["graph"] = graph_json(h);
        emit(o, out_path, to_cg_string(h), "cg");
        return o;
    });
    auto* oun = op->add_subcommand("union", "colour disjoint union");
    oun->add_option("first", file, "graph (.cg)")->required();
    oun->add_option("second", file2, "graph (.cg)")->required();
    oun->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(oun, "op union", [&] {
        Outcome o;
        auto h = disjoint_union(read_cg_file(file), read_cg_file(file2));
        o.result["graph"] = graph_json(h);
        emit(o, out_path, to_cg_string(h), "cg");
        return o;
    });
    auto* oco = op->add_subcommand("complement", "colour complementation between two classes");
    oco->add_option("file", file, "graph (.cg)")->required();
    oco->add_option("--colour", colour, "first class")->required();
    oco->add_option("--with", with, "second class (default: the first, complementing inside it)");
    oco->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(oco, "op complement", [&] {
        Outcome o;
        auto h = colour_complement(read_cg_file(file), colour, with < 0 ? colour : with);
        o.result["graph"] = graph_json(h);
        emit(o, out_path, to_cg_string(h), "cg");
        return o;
    });

    // classify
    int k_cap = 5;
    auto* cls = app.add_subcommand("classify", "Reduce, label the cores and measure regularity");
    cls->add_option("file", file, "graph (.cg)")->required();
    cls->add_option("--k-cap", k_cap, "highest level measured")->check(CLI::PositiveNumber);
    cls->add_flag("--force", force, "run UH measurements above the vertex limit");
    bind(cls, "classify", [&] { return cmd_classify(read_cg_file(file), k_cap, force); });

    // hadamard
    auto* had = app.add_subcommand("hadamard", "Hadamard matrix tools");
    had->require_subcommand(1);
    auto* hgen = had->add_subcommand("gen", "write a Hadamard matrix");
    std::string which;
    hgen->add_option("which", which, "sylvester or had12")->required();
    hgen->add_option("--t", t, "Sylvester exponent (rank 2^t)");
    hgen->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(hgen, "hadamard gen", [&] {
        HadamardMatrix h;
        if (which == "sylvester") {
            if (t < 1) throw CLI::ValidationError("--t", "sylvester requires --t >= 1");
            h = sylvester(t);
        } else if (which == "had12") {
            h = had12();
        } else {
            throw CLI::ValidationError("which", "expected sylvester or had12, got '" + which + "'");
        }
        Outcome o;
        o.result["rank"] = h.rank();
        emit(o, out_path, hm_string(h), "hm");
        return o;
    });
    auto* heq = had->add_subcommand("equiv", "decide equivalence of two matrices");
    heq->add_option("first", file, "matrix (.hm)")->required();
    heq->add_option("second", file2, "matrix (.hm)")->required();
    bind(heq, "hadamard equiv", [&] {
        auto a = read_hm_file(file), b = read_hm_file(file2);
        Outcome o;
        const bool eq = are_equivalent(a.matrix(), b.matrix());
        o.result["equivalent"] = eq;
        o.text = eq ? "equivalent\n" : "not equivalent\n";
        if (!eq) {
            o.code = kExitFails;
            o.status = "fails";
        } else {
            o.status = "holds";
        }
        return o;
    });
    auto* hext = had->add_subcommand("extend", "write the extended Hadamard graph");
    hext->add_option("file", file, "matrix (.hm)")->required();
    hext->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(hext, "hadamard extend", [&] {
        auto h = read_hm_file(file);
        auto gr = extended_hadamard(h.matrix());
        Outcome o;
        o.result["graph"] = graph_json(gr);
        emit(o, out_path, to_cg_string(gr), "cg");
        return o;
    });
    auto* hver = had->add_subcommand("verify-lemmas", "verify the constructive automorphisms");
    bind(hver, "hadamard verify-lemmas", [&] { return reports_outcome({verify_hadamard_lemmas()}); });

    // srg
    auto* srg = app.add_subcommand("srg", "Partition analysis of strongly regular graphs");
    srg->require_subcommand(1);
    std::string host, table, format = "summary";
    auto* spr = srg->add_subcommand("prune", "prune candidate partitions by parameter arithmetic");
    spr->add_option("--graph", host, "schlafli or mclaughlin")->required();
    spr->add_option("--table", table, "parameter list CSV (default: bundled snapshot)");
    spr->add_option("--format", format, "appendix or summary");
    bind(spr, "srg prune", [&] { return cmd_srg_prune(host, table, format); });
    auto* sbi = srg->add_subcommand("bipartition", "exhaustive search for a partition into two SRGs");
    sbi->add_option("file", file, "graph (.cg)")->required();
    bind(sbi, "srg bipartition", [&] { return cmd_srg_bipartition(read_cg_file(file)); });

    // design
    auto* des = app.add_subcommand("design", "Incidence structures");
    des->require_subcommand(1);
    auto* dch = des->add_subcommand("check", "test whether a structure is a t-design");
    dch->add_option("--t", t, "design strength")->required()->check(CLI::PositiveNumber);
    dch->add_option("file", file, "incidence structure (.inc)")->required();
    bind(dch, "design check", [&] { return cmd_design_check(read_inc_file(file), t); });
    auto* dwi = des->add_subcommand("witt", "write a Steiner system from the Golay code");
    dwi->add_option("which", which, "s5824 or s3622")->required();
    dwi->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(dwi, "design witt", [&] {
        if (which != "s5824" && which != "s3622")
            throw CLI::ValidationError("which", "expected s5824 or s3622, got '" + which + "'");
        auto w = witt_support();
        Outcome o;
        const auto& s = which == "s5824" ? w.s5824 : w.s3622;
        o.result["v"] = s.v;
        o.result["b"] = s.num_blocks();
        emit(o, out_path, inc_string(s), "inc");
        return o;
    });
    auto* dex = des->add_subcommand("extract", "incidence structure between two colour classes");
    int points = -1, blocks = -1;
    dex->add_option("file", file, "graph (.cg)")->required();
    dex->add_option("--points", points, "colour of the points")->required();
    dex->add_option("--blocks", blocks, "colour whose neighbourhoods form the blocks")->required();
    dex->add_option("-o,--output", out_path, "output path (default: standard output)");
    bind(dex, "design extract", [&] {
        auto s = incidence_from_colour_classes(read_cg_file(file), points, blocks);
        Outcome o;
        o.result["v"] = s.v;
        o.result["b"] = s.num_blocks();
        emit(o, out_path, inc_string(s), "inc");
        return o;
    });

    // verify
    auto* ver = app.add_subcommand("verify", "Theorem verification suites");
    ver->require_subcommand(1);
    auto* vth = ver->add_subcommand("theorems", "run the theorem harnesses");
    std::string suite = "all";
    BichromaticBounds bounds;
    int y_max = 4;
    vth->add_option("--suite", suite, "bichrom, trichrom, hadamard or all")
        ->check(CLI::IsMember({"bichrom", "trichrom", "hadamard", "all"}));
    vth->add_option("--max-class", bounds.max_class, "class size bound for clique-union pairs")
        ->check(CLI::PositiveNumber);
    vth->add_option("--max-blue", bounds.max_blue_primitive, "blue class size bound on primitive cores")
        ->check(CLI::PositiveNumber);
    vth->add_option("--corpus", bounds.corpus, "generated compositions")->check(CLI::NonNegativeNumber);
    vth->add_option("--y-max", y_max, "yellow clique count bound")->check(CLI::PositiveNumber);
    bind(vth, "verify theorems", [&] {
        std::vector<HarnessReport> reps;
        if (suite == "bichrom" || suite == "all") reps.push_back(verify_bichromatic_theorems(bounds));
        if (suite == "trichrom" || suite == "all") reps.push_back(verify_trichromatic_theorem(y_max));
        if (suite == "hadamard" || suite == "all") reps.push_back(verify_hadamard_theorems());
        return reports_outcome(reps);
    });

    std::vector<std::string> argv_store{"homreg"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    auto render_error = [&](const char* kind, const std::string& message) {
        if (json) {
            Json env{{"command", command.empty() ? Json(nullptr) : Json(command)},
                     {"exit_code", kExitError},
                     {"status", "error"},
                     {"result", nullptr},
                     {"error", error_json(kind, message)}};
            out << env.dump(2) << "\n";
        } else {
            err << "homreg: " << message << "\n";
        }
        return kExitError;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        if (app.get_subcommands().empty() && !app.remaining().empty())
            return render_error("usage", "unknown command '" + app.remaining().front() + "'");
        return render_error("usage", e.what());
    }

    set_thread_count(threads);
    Outcome o;
    try {
        o = action();
    } catch (const CLI::ParseError& e) {
        return render_error("usage", e.what());
    } catch (const IoError& e) {
        return render_error("io", e.what());
    } catch (const IntegrityError& e) {
        return render_error("integrity", e.what());
    } catch (const RefusedError& e) {
        return render_error("refused", e.what());
    } catch (const Error& e) {
        return render_error("usage", e.what());
    } catch (const std::exception& e) {
        return render_error("internal", e.what());
    }
    if (json) {
        Json env{{"command", command},
                 {"exit_code", o.code},
                 {"status", o.status},
                 {"result", o.result},
                 {"error", nullptr}};
        out << env.dump(2) << "\n";
    } else {
        out << o.text;
    }
    return o.code;
}

int run(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace homreg
