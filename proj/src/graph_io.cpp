#include "homreg/graph_io.hpp"

#include "homreg/error.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef HOMREG_DEFAULT_DATA_DIR
#define HOMREG_DEFAULT_DATA_DIR "data"
#endif

namespace homreg {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in, std::vector<int>* line_numbers)
{
    std::vector<std::vector<std::string>> lines;
    std::string line;
    for (int no = 1; std::getline(in, line); ++no) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        lines.push_back(std::move(toks));
        if (line_numbers) line_numbers->push_back(no);
    }
    return lines;
}

void rethrow_at_line(int line, const Error& e)
{
    throw Error("line " + std::to_string(line) + ": " + e.what());
}

int parse_int(const std::string& token, const char* what)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw Error(std::string("expected integer for ") + what + ", got '" + token + "'");
    return value;
}

ColouredGraph read_cg(std::istream& in)
{
    std::vector<int> at;
    auto lines = tokenize_lines(in, &at);
    if (lines.empty() || lines[0].size() != 4 || lines[0][0] != "cg") throw Error("missing 'cg n m c' header");
    const int n = parse_int(lines[0][1], "n");
    const int m = parse_int(lines[0][2], "m");
    const int c = parse_int(lines[0][3], "c");
    if (n <= 0 || m < 0 || c <= 0) throw Error("bad cg header values");
    if (static_cast<int>(lines.size()) != 1 + n + m)
        throw Error("cg body has " + std::to_string(lines.size() - 1) + " records, header promises " +
                    std::to_string(n + m));
    std::vector<Colour> colours(n, -1);
    for (int i = 1; i <= n; ++i) try {
        const auto& t = lines[i];
        if (t.size() != 3 || t[0] != "v") throw Error("expected vertex record 'v id colour'");
        int v = parse_int(t[1], "vertex");
        int col = parse_int(t[2], "colour");
        if (v < 1 || v > n) throw Error("vertex id out of range: " + t[1]);
        if (col < 0 || col >= c) throw Error("colour out of range: " + t[2]);
        if (colours[v - 1] >= 0) throw Error("vertex listed twice: " + t[1]);
        colours[v - 1] = col;
    } catch (const Error& e) {
        rethrow_at_line(at[i], e);
    }
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = n + 1; i <= n + m; ++i) try {
        const auto& t = lines[i];
        if (t.size() != 3 || t[0] != "e") throw Error("expected edge record 'e u v'");
        int u = parse_int(t[1], "endpoint"), v = parse_int(t[2], "endpoint");
        if (u < 1 || v < 1 || u > n || v > n) throw Error("edge endpoint out of range");
        if (u == v) throw Error("loop at vertex " + t[1]);
        edges.emplace_back(u - 1, v - 1);
    } catch (const Error& e) {
        rethrow_at_line(at[i], e);
    }
    ColouredGraph g = make_graph(n, colours, edges);
    if (g.num_colours() != c) throw Error("header declares " + std::to_string(c) + " colours, file uses " +
                                          std::to_string(g.num_colours()));
    return g;
}

ColouredGraph read_cg_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    try {
        return read_cg(in);
    } catch (const IoError&) {
        throw;
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

void write_cg(std::ostream& out, const ColouredGraph& g)
{
    auto edges = g.edges();
    out << "cg " << g.order() << ' ' << edges.size() << ' ' << g.num_colours() << '\n';
    for (Vertex v = 0; v < g.order(); ++v) out << "v " << v + 1 << ' ' << g.colour(v) << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_cg_file(const std::filesystem::path& path, const ColouredGraph& g)
{
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_cg(out, g);
    if (!out) throw IoError("write failed for " + path.string());
}

std::string to_cg_string(const ColouredGraph& g)
{
    std::ostringstream os;
    write_cg(os, g);
    return os.str();
}

std::filesystem::path data_dir()
{
    if (const char* env = std::getenv("HOMREG_DATA_DIR"); env && *env) return env;
    return HOMREG_DEFAULT_DATA_DIR;
}

} // namespace homreg
