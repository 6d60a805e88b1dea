#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spider/cli.hpp"
#include "spider/closed_form.hpp"

using namespace spider;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);) out.push_back(line);
    return out;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("spider_cli_test_" + name);
}

}  // namespace

TEST_CASE("generate") {
    auto r = run({"generate", "-M", "2", "-K", "2", "-L", "1", "--format", "edge-list"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "nodes: 6\n"));
    CHECK(contains(r.out, "edges: 5\n"));
    CHECK(contains(r.out, "pairs: 15\n"));
    CHECK(contains(r.out, "0 1\n0 2\n0 3\n1 4\n1 5\n"));

    r = run({"generate", "-M", "1", "-K", "0", "-L", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "nodes: 1\n"));
    CHECK(contains(r.out, "edges: 0\n"));

    r = run({"generate", "-M", "0", "-K", "1", "-L", "1"});
    CHECK(r.code == cli::kUsage);
    CHECK(contains(r.err, "core size"));

    CHECK(run({"generate", "-M", "2", "-K", "1", "-L", "1", "--format", "graphml"}).code == cli::kUsage);
    CHECK(run({"generate", "-M", "2"}).code == cli::kUsage);
    CHECK(run({"generate", "-M", "2", "-K", "1", "-L", "1", "-o", "/nonexistent-dir/x.txt"}).code ==
          cli::kIoError);
}

TEST_CASE("generate writes the graph file") {
    const auto path = temp_file("gen.txt");
    const auto r = run({"generate", "-M", "3", "-K", "0", "-L", "0", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "edges: 3"));
    std::ifstream in(path);
    std::stringstream body;
    body << in.rdbuf();
    CHECK(body.str() == "0 1\n0 2\n1 2\n");
    std::filesystem::remove(path);
}

TEST_CASE("export") {
    auto r = run({"export", "-M", "2", "-K", "2", "-L", "1", "--format", "adjacency-csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        REQUIRE(rows[i].size() == 11);
        for (std::size_t j = 0; j < 6; ++j) CHECK(rows[i][2 * j] == rows[j][2 * i]);
    }

    r = run({"export", "-M", "1", "-K", "1", "-L", "3", "--format", "dot"});
    CHECK(r.code == 0);
    std::size_t terminals = 0;
    for (auto pos = r.out.find("\"terminal\""); pos != std::string::npos; pos = r.out.find("\"terminal\"", pos + 1))
        ++terminals;
    CHECK(terminals == 2);
    CHECK(contains(r.out, "2 -- 3;"));

    r = run({"export", "-M", "3", "-K", "0", "-L", "0", "--format", "edge-list"});
    CHECK(r.out == "0 1\n0 2\n1 2\n");
}

TEST_CASE("report") {
    auto r = run({"report", "-M", "2", "-K", "2", "-L", "1", "--source", "both"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "alpha: 5 6 4 0 0  [MATCH]\n"));
    CHECK_FALSE(contains(r.out, "MISMATCH"));
    CHECK(contains(r.out, "density: 1/3  [MATCH]"));
    CHECK(contains(r.out, "neighboring-index: 32  [MATCH]"));

    r = run({"report", "-M", "4", "-K", "0", "-L", "0"});
    CHECK(contains(r.out, "density: 1/1"));
    CHECK(contains(r.out, "diameter: 1"));

    r = run({"report", "-M", "1", "-K", "3", "-L", "1", "--source", "closed"});
    CHECK(contains(r.out, "delta: 3 1 1 1\n"));
    CHECK(contains(r.out, "h-index: 1\n"));

    r = run({"report", "-M", "3", "-K", "1", "-L", "2", "--source", "oracle"});
    CHECK(contains(r.out, "mean-distance: 31/12\n"));

    r = run({"report", "-M", "1", "-K", "0", "-L", "0"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "density: undefined  [MATCH]"));

    CHECK(run({"report", "-M", "2", "-K", "2", "-L", "1", "--source", "guess"}).code == cli::kUsage);
}

TEST_CASE("report guards the oracle with a node cap") {
    auto r = run({"report", "-M", "10", "-K", "10", "-L", "10", "--node-cap", "500"});
    CHECK(r.code == cli::kResource);
    r = run({"report", "-M", "10", "-K", "10", "-L", "10", "--node-cap", "500", "--source", "closed"});
    CHECK(r.code == 0);

    ::setenv(cli::kNodeCapEnv, "5", 1);
    CHECK(run({"report", "-M", "2", "-K", "2", "-L", "1"}).code == cli::kResource);
    ::setenv(cli::kNodeCapEnv, "bogus", 1);
    CHECK(run({"report", "-M", "2", "-K", "2", "-L", "1"}).code == cli::kUsage);
    ::unsetenv(cli::kNodeCapEnv);
    CHECK(run({"report", "-M", "2", "-K", "2", "-L", "1"}).code == 0);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--Mmax", "8", "--Kmax", "5", "--Lmax", "6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "247 parameter points verified, 1 skipped, 0 mismatches"));

    r = run({"verify", "--Mmax", "1", "--Kmax", "1", "--Lmax", "1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1 parameter points verified"));

    r = run({"verify", "--Mmax", "4", "--Kmax", "3", "--Lmax", "3", "--threads", "4"});
    CHECK(r.code == 0);

    CHECK(run({"verify", "--Mmax", "0"}).code == cli::kUsage);
}

TEST_CASE("verify fails on a corrupted formula") {
    const ReportProvider corrupted = [](const SpiderParams& p) {
        auto r = closed_form_report(p);
        if (p == SpiderParams{2, 2, 1}) r.gamma.back() += 1;
        return r;
    };
    std::ostringstream out, err;
    CHECK(cli::verify({3, 3, 3, 2000}, 1, corrupted, out, err) == cli::kMismatch);
    CHECK(contains(out.str(), "MISMATCH (2,2,1) gamma at index 5"));
    CHECK(contains(out.str(), "1 mismatches"));

    const ReportProvider throwing = [](const SpiderParams&) -> ClosedFormReport {
        throw FormulaError("broken");
    };
    std::ostringstream out2;
    CHECK(cli::verify({1, 1, 1, 2000}, 1, throwing, out2, err) == cli::kMismatch);
    CHECK(contains(out2.str(), "closed-form: broken"));
}

TEST_CASE("asymptotics") {
    auto r = run({"asymptotics", "--notion", "SWD", "--vary", "M", "--fix", "K=1,L=1"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "ultra-small world (C=0)"));
    const auto rows = lines(r.out);
    REQUIRE(rows.size() >= 14);
    CHECK(rows[0] == "step,N,numerator,lnN,ratio");
    CHECK(rows[1] == "2,4,3,1.38629,2.16404");
    Count previous = 0;
    for (std::size_t i = 1; i <= 12; ++i) {
        const Count n = std::stoll(rows[i].substr(rows[i].find(',') + 1));
        CHECK(n > previous);
        previous = n;
    }

    r = run({"asymptotics", "--notion", "DSWA", "--vary", "K", "--fix", "M=2,L=2"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "not a small world"));

    r = run({"asymptotics", "--notion", "SWA", "--vary", "L", "--steps", "10,100,1000"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() == 6);
    CHECK(contains(r.out, "verdict SWA L->inf (M=2,K=1): not a small world"));

    CHECK(run({"asymptotics", "--notion", "SWD", "--vary", "M", "--fix", "M=3"}).code == cli::kUsage);
    CHECK(run({"asymptotics", "--notion", "SWD", "--vary", "M", "--fix", "K=0"}).code == cli::kUsage);
    CHECK(run({"asymptotics", "--notion", "XYZ", "--vary", "M"}).code == cli::kUsage);
    CHECK(run({"asymptotics", "--notion", "SWD"}).code == cli::kUsage);
    CHECK(run({"asymptotics", "--notion", "SWD", "--vary", "L", "--steps", "5,3"}).code == cli::kUsage);
}

TEST_CASE("asymptotics csv file") {
    const auto path = temp_file("asym.csv");
    const auto r = run({"asymptotics", "--notion", "DSWL", "--vary", "K", "-o", path.string()});
    CHECK(r.code == 0);
    CHECK_FALSE(contains(r.out, "step,N"));
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "step,N,numerator,lnN,ratio");
    std::filesystem::remove(path);
}

TEST_CASE("asymptotics --all prints the verdict table") {
    const auto r = run({"asymptotics", "--all"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 13);
    CHECK(contains(rows[1], "DSWL"));
    CHECK(contains(rows[1], "M->inf"));
    CHECK(contains(rows[1], "degree small world"));
    CHECK(contains(rows[6], "DSWA"));
    CHECK(contains(rows[6], "L->inf"));
    CHECK(contains(rows[6], "not a small world"));
    CHECK(contains(rows[8], "SWD"));
    CHECK(contains(rows[8], "K->inf"));
    CHECK(contains(rows[8], "ultra-small world"));
    CHECK(contains(rows[12], "SWA"));
    CHECK(contains(rows[12], "L->inf"));
    CHECK(contains(rows[12], "not a small world"));
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(contains(rows[i], "agrees"));
}

TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> commands{
        {"generate", "-M", "3", "-K", "2", "-L", "2", "--format", "dot"},
        {"report", "-M", "3", "-K", "2", "-L", "2"},
        {"asymptotics", "--all"},
    };
    for (const auto& c : commands) CHECK(run(c).out == run(c).out);
}

TEST_CASE("help documents the exit codes") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Exit codes"));
    CHECK(run({}).code == cli::kUsage);
}
