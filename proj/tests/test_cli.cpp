#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hermite/cli.hpp"
#include "hermite/records.hpp"

using namespace hermite;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> v;
    for (std::string w; in >> w;) v.push_back(w);
    return v;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const char* name) { return std::string(HERMITE_GOLDEN_DIR) + "/" + name; }

std::string temp_path(const char* name) {
    auto p = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove(p);
    return p.string();
}

}  // namespace

TEST_CASE("reduce matches the golden chains") {
    std::ifstream in(golden("chains.txt"));
    REQUIRE(in.good());
    int n = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        auto args = split(line.substr(0, bar));
        args.insert(args.begin(), "reduce");
        const std::string expect = line.substr(bar + 2);
        const auto r = run(args);
        CHECK_MESSAGE(r.code == 0, line);
        CHECK(r.out.substr(0, r.out.find('\n')) == expect);
        ++n;
    }
    CHECK(n >= 10);
}

TEST_CASE("reduce reports stuck diagrams") {
    for (const char* t : {"(~2,1,1)", "(~3,1,1)", "(~6,1,1)"}) {
        const auto r = run({"reduce", t, "-d", "2"});
        CHECK(r.code == 2);
        CHECK(r.err.find("not d-reducible") != std::string::npos);
    }
    CHECK(run({"reduce", "(~5,3)", "-d", "3", "-v", "1,1,2"}).code == 2);
    CHECK(run({"reduce", "(~4,2)", "-d", "2", "--steps"}).out ==
          "(~4,2) -> (~3,3) [v=(1,2)]\n(~3,3) -> (~2,2,1) [v=(1,2)]\n(~2,2,1) -> (~2) [v=(2,1)]\n");
}

TEST_CASE("check exit codes") {
    const auto five = run({"check", "--nodes", "F2x5", "--onestep"});
    CHECK((five.code == 2 || five.code == 3));
    CHECK(run({"check", "--nodes", "F2x3", "--onestep"}).code == 0);
    CHECK(run({"check", "--nodes", "F1x1", "--basis", "(1)"}).code == 0);
    CHECK(run({"check", "--nodes", "F2x2", "--onestep"}).code == 2);
    CHECK(run({"check", "--nodes", "F1x2+F2x1", "--basis", "(~2,2)"}).code == 0);
    CHECK(run({"check", "--nodes", "F2x2", "--basis", "(~2)"}).code == 1);  // 6 conditions, 3 monomials
}

TEST_CASE("usage errors") {
    const auto bad = run({"check", "--nodes", "F2y3", "--onestep"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("position") != std::string::npos);
    CHECK(run({"check", "--nodes", "F2x3", "--basis", "(~3,x)"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"--prime", "7", "check", "--nodes", "F1x1", "--basis", "(1)"}).code == 1);
    CHECK(run({"--prime", "4611686018427387848", "check", "--nodes", "F1x1", "--basis", "(1)"}).code == 1);
    CHECK(run({"--trials", "0", "check", "--nodes", "F1x1", "--basis", "(1)"}).code == 1);
    CHECK(run({"basecases", "-d", "10", "-p", "6"}).code == 1);  // needs --full or a cap
}

TEST_CASE("node specs") {
    CHECK(parse_node_spec("F1x2+F3x4") == std::vector<int>{1, 1, 3, 3, 3, 3});
    CHECK(parse_node_spec("F2x1") == std::vector<int>{2});
    CHECK_THROWS_AS(parse_node_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_node_spec("G1x2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_node_spec("F1x2+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_node_spec("F0x2"), std::invalid_argument);
    CHECK_THROWS_WITH(parse_node_spec("F1x2+Fx"), doctest::Contains("position"));
}

TEST_CASE("global options may follow the subcommand") {
    const auto a = run({"--format", "json", "check", "--nodes", "F2x3", "--onestep"});
    const auto b = run({"check", "--nodes", "F2x3", "--onestep", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"kind\":\"CertifiedCorrect\"") != std::string::npos);
}

TEST_CASE("environment overrides") {
    setenv("HERMITE_TRIALS", "3", 1);
    const auto r = run({"--format", "json", "check", "--nodes", "F2x5", "--onestep"});
    unsetenv("HERMITE_TRIALS");
    CHECK(r.out.find("\"configTrials\":3") != std::string::npos);
    const auto flag = run({"--trials", "3", "--format", "json", "check", "--nodes", "F2x5", "--onestep"});
    CHECK(flag.out == r.out);
}

TEST_CASE("identical settings give identical output") {
    const std::vector<std::string> args{"--seed", "9", "--format", "json", "check", "--nodes", "F3x4", "--onestep"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> other{"--seed", "10", "--format", "json", "check", "--nodes", "F3x4", "--onestep"};
    CHECK(run(args).out != run(other).out);  // witnesses differ
    CHECK(run({"tables", "triples"}).out == run({"tables", "triples"}).out);
}

TEST_CASE("cache hits keep the verdict") {
    const auto path = temp_path("hermite_test_cache.jsonl");
    const std::vector<std::string> args{"--cache", path, "--format", "json", "check", "--nodes", "F2x5", "--onestep"};
    const auto first = run(args);
    CHECK(VerdictCache(path).size() == 1);
    const auto second = run(args);
    CHECK(first.out == second.out);
    CHECK(first.code == second.code);
    CHECK(VerdictCache(path).size() == 1);  // served from the cache, nothing appended
    CHECK(slurp(path).find("ProbablyIncorrect") != std::string::npos);
    CHECK(run({"--cache", path, "cache", "stats"}).out == "1 records\n");
    // a different seed is a different key
    run({"--cache", path, "--seed", "4", "check", "--nodes", "F2x5", "--onestep"});
    CHECK(VerdictCache(path).size() == 2);
    CHECK(run({"--cache", path, "cache", "clear"}).code == 0);
    CHECK(VerdictCache(path).size() == 0);
    CHECK(run({"cache", "stats"}).code == 1);
    std::filesystem::remove(path);
}

TEST_CASE("verdict records round trip") {
    InterpProblem p = InterpProblem::planar(std::vector<int>{2, 2}, Staircase::parse("(~3)"));
    VerdictConfig c;
    c.exact_threshold = 0;
    const Verdict v = is_generically_correct(p, c);
    const auto line = verdict_record(v, problem_hash(p), c);
    std::uint64_t h = 0;
    VerdictConfig back;
    const Verdict w = parse_verdict_record(line, &h, &back);
    CHECK(h == problem_hash(p));
    CHECK(w.kind == v.kind);
    CHECK(w.error_bound == v.error_bound);
    CHECK(w.trials == v.trials);
    CHECK(back.trials == c.trials);
}

TEST_CASE("tables match the golden files") {
    CHECK(run({"tables", "triples"}).out == slurp(golden("triples.txt")));
    CHECK(run({"tables", "rmk", "--max", "2"}).out == slurp(golden("rmk_max2.txt")));
    CHECK(run({"--format", "csv", "tables", "counts", "--d", "2..5", "--nodes", "6"}).out ==
          slurp(golden("counts_nodes6.csv")).substr(0, slurp(golden("counts_nodes6.csv")).find("6,6,")));
    const auto path = temp_path("hermite_triples.txt");
    CHECK(run({"tables", "triples", "--out", path}).code == 0);
    CHECK(slurp(path) == slurp(golden("triples.txt")));
    std::filesystem::remove(path);
}

TEST_CASE("enumerate and basecases") {
    CHECK(run({"enumerate", "-d", "3", "-k", "5", "--filter", "proper", "--count"}).out == "9\n");
    const auto list = run({"enumerate", "-d", "2", "-k", "6"});
    CHECK(list.out.find("(~5,2,1)") != std::string::npos);
    const auto bc = run({"--format", "csv", "basecases", "-d", "2", "-p", "6"});
    CHECK(bc.code == 0);
    CHECK(bc.out == "d,k,total,terminals,failures\n2,6,3,0,0\n");
    const auto ten = run({"basecases", "-d", "10", "-p", "6", "--max-diagrams", "2", "--stop-after", "1"});
    CHECK(ten.code != 0);
}

TEST_CASE("decide") {
    CHECK(run({"decide", "-d", "2", "-k", "4"}).code == 0);
    const auto five = run({"decide", "-d", "2", "-k", "5"});
    CHECK((five.code == 2 || five.code == 3));
}
