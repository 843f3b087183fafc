// Process-level checks of the command-line tool: exit codes, file formats
// and the wiring between subcommands and the library.

#include <doctest.h>

#include <atomic>
#include <unistd.h>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SYMEDGE_CLI_PATH
#define SYMEDGE_CLI_PATH "symedge"
#endif

namespace {

std::string temp_path(const char* suffix) {
    static std::atomic<int> counter{0};
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/symedge_cli_test_" +
           std::to_string(::getpid()) + "_" + std::to_string(counter.fetch_add(1)) + suffix;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = temp_path(".out");
    const std::string cmd =
        std::string(SYMEDGE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::remove(out_path.c_str());
    return {WEXITSTATUS(status), buffer.str()};
}

std::string write_temp(const std::string& content, const char* suffix) {
    const std::string path = temp_path(suffix);
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("symbolic subcommand") {
    RunResult r = run_cli("symbolic --graph Bw --k 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x1 x2 x3") != std::string::npos);
    CHECK(r.out.find("x1^2 x2^2") != std::string::npos);

    // edge-list input and both-routes agreement
    const std::string edges = write_temp("3\n1 2\n2 3\n1 3\n", ".edges");
    RunResult both = run_cli("symbolic --graph @" + edges + " --k 2 --method both");
    CHECK(both.exit_code == 0);
    CHECK(both.out.find("agree") != std::string::npos);
    std::remove(edges.c_str());

    RunResult bad = run_cli("symbolic --graph '!!!' --k 2");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("betti subcommand") {
    const std::string ideal = write_temp("n=4\nx1 x2\nx3 x4\n", ".ideal");
    RunResult r = run_cli("betti --ideal " + ideal);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("beta(1,4) = 1") != std::string::npos);
    CHECK(r.out.find("regularity = 3") != std::string::npos);
    CHECK(r.out.find("not a linear resolution") != std::string::npos);
    std::remove(ideal.c_str());
}

TEST_CASE("order subcommand") {
    RunResult i2 = run_cli("order --graph Bw --power 2 --construct i2 --verify");
    CHECK(i2.exit_code == 0);
    CHECK(i2.out.find("\"verified\": true") != std::string::npos);

    RunResult peolex = run_cli("order --graph Bw --power 2 --construct peo-lex");
    CHECK(peolex.exit_code == 0);

    // C5 is not cochordal: the peo-lex construction must refuse it
    RunResult c5 = run_cli("order --graph Dhc --power 2 --construct peo-lex");
    CHECK(c5.exit_code == 2);
}

TEST_CASE("check subcommand exit codes") {
    RunResult ok = run_cli("check --conjecture C --k 2 --family cochordal --n 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("0 refuted") != std::string::npos);

    RunResult noinput = run_cli("check --conjecture B --k 2 --n 9");
    CHECK(noinput.exit_code == 2);
}

TEST_CASE("survey subcommand") {
    // K3 (Bw), C5 (Dhc) and one malformed line
    const std::string g6 = write_temp("Bw\nDhc\n!!!bad\n", ".g6");
    const std::string report_path = temp_path(".json");
    RunResult r = run_cli("survey --input " + g6 + " --conjecture B --k 2 --family cochordal --out " +
                          report_path);
    CHECK(r.exit_code == 2);  // the malformed line is an input error

    std::ifstream in(report_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string report = buffer.str();
    CHECK(report.find("\"schema\": \"1\"") != std::string::npos);
    CHECK(report.find("\"holds\"") != std::string::npos);
    CHECK(report.find("\"errors\"") != std::string::npos);
    std::remove(g6.c_str());
    std::remove(report_path.c_str());
}
