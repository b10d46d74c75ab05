#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hodgepoly/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = hodgepoly::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("psi command") {
    CHECK(run({"psi", "--g", "1", "--exp", "1"}).out == "1/24\n");
    CHECK(run({"psi", "--g", "0", "--exp", "0,0,0"}).out == "1\n");
    CHECK(run({"psi", "--g", "2", "--exp", "4"}).out == "1/1152\n");

    auto bad = run({"psi", "--g", "0", "--exp", "0,0"});
    CHECK(bad.code != 0);
    CHECK(bad.out.empty());
    CHECK(bad.err.find("2g - 2 + n > 0") != std::string::npos);

    CHECK(run({"psi", "--g", "1", "--exp", "x"}).code != 0);
    CHECK(run({"psi", "--exp", "1"}).code != 0);
}

TEST_CASE("hodge command") {
    CHECK(run({"hodge", "--g", "1", "--exp", "0", "--lambda", "1"}).out == "1/24\n");
    CHECK(run({"hodge", "--g", "2", "--exp", "2", "--lambda", "2"}).out == "7/5760\n");
    CHECK(run({"hodge", "--g", "1", "--exp", "1"}).out == "1/24\n");
}

TEST_CASE("pa command") {
    CHECK(run({"pa", "--a", "2", "--shifted"}).out == "t^2 - 10*alpha*t + 240\n");
    CHECK(run({"pa", "--a", ""}).out == "1\n");
    CHECK(run({"pa", "--a", "1,1,1", "--format", "json"}).out ==
          "{\"a\":[1,1,1],\"convention\":\"alpha\",\"coeffs\":[[3,0,\"1\"],[2,0,\"-72\"],[1,0,\"432\"]]}\n");
    CHECK(run({"pa", "--a", "3", "--shifted", "--format", "latex"}).out ==
          "t^3 + (-\\frac{77}{3}\\alpha - 28)t^2 + 280t + 6720\n");
    CHECK(run({"pa", "--a", "1", "--format", "yaml"}).code != 0);
    CHECK(run({"pa", "--a", "1,-2"}).code != 0);
}

TEST_CASE("table command") {
    CHECK(run({"table", "--max", "1"}).out == "P_() = 1\n\nP_(1) = t + 12\n");
    CHECK(run({"table", "--max", "2"}).out ==
          "P_() = 1\n\nP_(1) = t + 12\n\nP_(2) = t^2 - 10*alpha*t + 240\nP_(1,1) = t^2 - 12*t\n");
    CHECK(run({"table", "--max", "2", "--jobs", "3"}).out == run({"table", "--max", "2"}).out);
    auto j = run({"table", "--max", "1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"convention\": \"alpha_shifted\"") != std::string::npos);
}

TEST_CASE("verify command") {
    auto r = run({"verify", "prop12", "--order", "10"});
    CHECK(r.code == 0);
    CHECK(r.out == "prop12: PASS (11 checks)\n");
    auto all = run({"verify", "all", "--max", "2"});
    CHECK(all.code == 0);
    CHECK(all.out.find("PASS (8 of 8 suites passed)") != std::string::npos);
    CHECK(run({"verify", "nonsense"}).code != 0);
}

TEST_CASE("cache command") {
    auto dir = std::filesystem::temp_directory_path() / "hodgepoly_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const std::string store = (dir / "store").string();
    const std::string fresh = (dir / "fresh").string();
    const std::string exported = (dir / "export.txt").string();

    CHECK(run({"--cache", store, "table", "--max", "2"}).code == 0);
    auto stats = run({"--cache", store, "cache", "stats"});
    CHECK(stats.code == 0);
    CHECK(stats.out.find("psi: 0") == std::string::npos);
    CHECK(stats.out.find("hodge: 0") == std::string::npos);

    CHECK(run({"cache", "export", exported, "--cache", store}).code == 0);
    CHECK(run({"--cache", fresh, "cache", "import", exported}).code == 0);
    CHECK(run({"--cache", fresh, "cache", "stats"}).out == stats.out);

    // conflicting value: rejected and the store is untouched
    std::ifstream in(exported);
    std::string header, line, rest;
    std::getline(in, header);
    std::getline(in, line);
    std::ostringstream bad;
    bad << header << '\n' << line.substr(0, line.find(' ')) << " 12345\n";
    std::ofstream(dir / "bad.txt") << bad.str();
    auto rejected = run({"--cache", fresh, "cache", "import", (dir / "bad.txt").string()});
    CHECK(rejected.code != 0);
    CHECK(rejected.err.find("conflict") != std::string::npos);
    CHECK(run({"--cache", fresh, "cache", "stats"}).out == stats.out);

    // environment variable supplies the default path
    setenv("HODGEPOLY_CACHE", fresh.c_str(), 1);
    CHECK(run({"cache", "stats"}).out == stats.out);
    CHECK(run({"cache", "clear"}).code == 0);
    CHECK(run({"cache", "stats"}).out == "psi: 0\nhodge: 0\n");
    unsetenv("HODGEPOLY_CACHE");

    CHECK(run({"cache", "stats"}).code != 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({"--help"}).code == 0);
}
