#include "homreg/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = homreg::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_code)
{
    args.insert(args.begin(), "--json");
    auto r = run(args);
    CHECK(r.code == expected_code);
    auto env = json::parse(r.out);
    CHECK(env.at("exit_code") == expected_code);
    return env;
}

// Scratch directory removed at scope exit.
struct Scratch {
    fs::path dir;
    Scratch() : dir(fs::temp_directory_path() / ("homreg_cli_" + std::to_string(::getpid())))
    {
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("rook(3) is 4-UH and rook(4) fails 4-TR with a witness")
{
    Scratch tmp;
    CHECK(run({"gen", "rook", "--m", "3", "-o", tmp("r3.cg")}).code == 0);
    CHECK(run({"check", "uh", "--k", "4", tmp("r3.cg")}).code == 0);

    CHECK(run({"gen", "rook", "--m", "4", "-o", tmp("r4.cg")}).code == 0);
    auto text = run({"check", "tr", "--k", "4", tmp("r4.cg")});
    CHECK(text.code == 1);
    CHECK(text.out.find("witness") != std::string::npos);

    auto env = run_json({"check", "tr", "--k", "4", tmp("r4.cg")}, 1);
    CHECK(env.at("command") == "check tr");
    CHECK(env.at("status") == "fails");
    CHECK(env.at("error").is_null());
    const auto& w = env.at("result").at("witness");
    CHECK(w.at("first").size() == 4);
    CHECK(w.at("second").size() == 4);
    CHECK(w.at("lambda_first") != w.at("lambda_second"));
}

TEST_CASE("the lemma verification command succeeds")
{
    CHECK(run({"hadamard", "verify-lemmas"}).code == 0);
    auto env = run_json({"hadamard", "verify-lemmas"}, 0);
    CHECK(env.at("status") == "ok");
    CHECK(env.at("result").at("ok") == true);
}

TEST_CASE("errors exit 2 with a typed envelope")
{
    Scratch tmp;
    auto io = run_json({"check", "tr", "--k", "2", tmp("missing.cg")}, 2);
    CHECK(io.at("status") == "error");
    CHECK(io.at("result").is_null());
    CHECK(io.at("error").at("kind") == "io");

    {
        std::ofstream bad(tmp("bad.cg"));
        bad << "cg 3 1 1\nv 1 0\nv 2 0\nv 3 0\ne 1 9\n";
    }
    auto parse = run({"check", "tr", "--k", "2", tmp("bad.cg")});
    CHECK(parse.code == 2);
    CHECK(parse.err.find("bad.cg") != std::string::npos);
    CHECK(parse.err.find("line 5") != std::string::npos);

    auto flag = run({"check", "tr", "--k", "2", "--bogus", tmp("bad.cg")});
    CHECK(flag.code == 2);
    CHECK(flag.err.find("--bogus") != std::string::npos);
    auto usage = run_json({"check", "tr", "--k", "2", "--bogus", tmp("bad.cg")}, 2);
    CHECK(usage.at("error").at("kind") == "usage");

    auto verb = run({"frobnicate"});
    CHECK(verb.code == 2);
    CHECK(verb.err.find("frobnicate") != std::string::npos);

    CHECK(run({"gen", "affine_polar", "--d", "3", "--eps", "+", "-o", tmp("ap.cg")}).code == 0);
    auto refused = run_json({"check", "uh", "--k", "2", tmp("ap.cg")}, 2);
    CHECK(refused.at("error").at("kind") == "refused");
    CHECK(run({"check", "uh", "--k", "2", "--force", tmp("ap.cg")}).code == 0);
}

TEST_CASE("help exits 0")
{
    auto h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("classify") != std::string::npos);
}

TEST_CASE("identical invocations give byte-identical output")
{
    Scratch tmp;
    CHECK(run({"gen", "schlafli", "-o", tmp("s.cg")}).code == 0);
    for (const std::vector<std::string>& cmd :
         {std::vector<std::string>{"--json", "classify", tmp("s.cg")},
          std::vector<std::string>{"--json", "reduce", tmp("s.cg")},
          std::vector<std::string>{"srg", "prune", "--graph", "mclaughlin"},
          std::vector<std::string>{"--threads", "1", "check", "tr", "--k", "3", tmp("s.cg")}}) {
        auto a = run(cmd);
        auto b = run(cmd);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    auto one = run({"--threads", "1", "--json", "check", "tr", "--k", "5", tmp("s.cg")});
    auto four = run({"--threads", "4", "--json", "check", "tr", "--k", "5", tmp("s.cg")});
    CHECK(one.out == four.out);
}

TEST_CASE("the golden appendix table regenerates exactly")
{
    auto r = run({"srg", "prune", "--graph", "schlafli", "--format", "appendix"});
    CHECK(r.code == 0);
    CHECK(r.out == slurp(fs::path(HOMREG_TEST_GOLDEN_DIR) / "schlafli_appendix.txt"));
}

TEST_CASE("pipeline through files")
{
    Scratch tmp;
    CHECK(run({"hadamard", "gen", "sylvester", "--t", "2", "-o", tmp("h.hm")}).code == 0);
    CHECK(run({"hadamard", "equiv", tmp("h.hm"), tmp("h.hm")}).code == 0);
    CHECK(run({"hadamard", "extend", tmp("h.hm"), "-o", tmp("eh.cg")}).code == 0);
    auto cls = run_json({"classify", tmp("eh.cg")}, 0);
    CHECK(cls.at("result").at("cores").at(0).at("kind") == "extended-hadamard");
    CHECK(cls.at("result").at("levels").at("max_tr") == 3);

    CHECK(run({"design", "witt", "s3622", "-o", tmp("w.inc")}).code == 0);
    CHECK(run({"design", "check", "--t", "3", tmp("w.inc")}).code == 0);
    CHECK(run({"design", "check", "--t", "4", tmp("w.inc")}).code == 1);

    CHECK(run({"gen", "cycle", "--t", "5", "-o", tmp("c5.cg")}).code == 0);
    CHECK(run({"op", "complement", "--colour", "0", tmp("c5.cg"), "-o", tmp("cc5.cg")}).code == 0);
    CHECK(run({"check", "srg", tmp("cc5.cg")}).code == 0);
    CHECK(run({"op", "union", tmp("c5.cg"), tmp("cc5.cg"), "-o", tmp("u.cg")}).code == 0);
    auto red = run_json({"reduce", tmp("u.cg"), "--trace", tmp("trace.json")}, 0);
    CHECK(red.at("result").at("cores").size() == 2);
    CHECK(json::parse(slurp(tmp("trace.json"))).is_object());
    CHECK(run({"srg", "bipartition", tmp("c5.cg")}).code == 1);
}

} // TEST_SUITE
