#pragma once

#include "homreg/error.hpp"
#include "homreg/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace homreg {

// Text format:
//   cg <n> <m> <c>
//   v <vertex> <colour>      n lines, vertices 1-indexed, colours 0-indexed
//   e <u> <v>                m lines, 1-indexed
// '#' starts a comment. Output lists vertices and edges in ascending order.
ColouredGraph read_cg(std::istream& in);
ColouredGraph read_cg_file(const std::filesystem::path& path);
void write_cg(std::ostream& out, const ColouredGraph& g);
void write_cg_file(const std::filesystem::path& path, const ColouredGraph& g);
std::string to_cg_string(const ColouredGraph& g);

// Splits a line-oriented text format into whitespace tokens per line, dropping comments
// and blank lines. Shared by the other readers. `line_numbers` receives the 1-based source
// line of each kept record.
std::vector<std::vector<std::string>> tokenize_lines(std::istream& in, std::vector<int>* line_numbers = nullptr);
int parse_int(const std::string& token, const char* what);
// Rethrows an Error raised while parsing a record with its source line prepended.
[[noreturn]] void rethrow_at_line(int line, const Error& e);

// Directory holding the bundled data files (env HOMREG_DATA_DIR overrides).
std::filesystem::path data_dir();

} // namespace homreg
