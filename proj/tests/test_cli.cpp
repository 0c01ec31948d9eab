#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& cli_args) {
    const std::string cmd = std::string(TRIREC_BIN) + " " + cli_args + " 2>/dev/null";
    CmdResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) {
        result.out.append(buf, got);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

class TempDir {
public:
    TempDir() {
        dir_ = fs::temp_directory_path() / ("trirec_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    ~TempDir() { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& content) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << content;
        return p.string();
    }

private:
    fs::path dir_;
};

const TempDir& tmp() {
    static TempDir dir;
    return dir;
}

std::string ones_file() {
    static const std::string path = tmp().write("ones.json", R"({"type":"constant","value":"1"})");
    return path;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(fs::path(TRIREC_GOLDEN_DIR) / name);
    REQUIRE(in.good());
    std::string line;
    std::getline(in, line);
    return line;
}

}  // namespace

TEST_CASE("eval: Fibonacci through every method") {
    for (const std::string method : {"iter", "rsum", "flat", "closed"}) {
        const auto res = run_cli("eval --coeffs " + ones_file() + " --n 9 --method " + method);
        REQUIRE(res.exit_code == 0);
        const json report = json::parse(res.out);
        CHECK(report.at("value") == "89");
        CHECK(report.at("method") == (method == "iter" ? "iterative" : method));
        CHECK(report.at("scalar") == "rational");
        CHECK(report.at("n") == 9);
        CHECK(report.contains("wall_time_ns"));
        if (method == "flat" || method == "closed") {
            CHECK(report.at("grid_points").get<std::uint64_t>() > 0);
            CHECK(report.at("terms_evaluated") == 88);
        }
    }
}

TEST_CASE("eval: float64 scalar") {
    const auto res = run_cli("eval --coeffs " + ones_file() + " --n 9 --method closed --scalar float64");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    CHECK(report.at("scalar") == "float64");
    CHECK(report.at("value") == 89.0);
}

TEST_CASE("eval: custom initial values") {
    // a0=0, a1=1 with d=1 shifts Fibonacci: a(6) = 8
    const auto res = run_cli("eval --coeffs " + ones_file() + " --n 5 --method rsum --a0 0 --a1 1");
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.out).at("value") == "8");
}

TEST_CASE("compare: all methods agree") {
    // d(n) = 1 / (1 + n^2): denominator root-free over the whole domain
    const std::string coeffs = tmp().write(
        "rf.json", R"({"type":"rational_function","num":["1"],"den":["1","0","1"]})");
    const auto res = run_cli("compare --coeffs " + coeffs + " --n-max 10");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    CHECK(report.at("all_equal") == true);
    CHECK(report.at("rows").size() == 10);
    for (const auto& row : report.at("rows")) {
        CHECK(row.at("iterative") == row.at("closed"));
        CHECK(row.at("iterative") == row.at("flat"));
        CHECK(row.at("iterative") == row.at("rsum"));
    }
}

TEST_CASE("compare: 100 random coefficient files agree up to n = 14") {
    std::mt19937_64 eng(20240902);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int file = 0; file < 100; ++file) {
        std::string values;
        for (int i = 0; i < 14; ++i) {
            if (i > 0) values += ',';
            values += '"' + std::to_string(num(eng)) + '/' + std::to_string(den(eng)) + '"';
        }
        const std::string path =
            tmp().write("rand" + std::to_string(file) + ".json",
                        R"({"type":"table","values":[)" + values + "]}");
        const auto res = run_cli("compare --coeffs " + path + " --n-max 14");
        REQUIRE(res.exit_code == 0);
        const json report = json::parse(res.out);
        CHECK(report.at("all_equal") == true);
        REQUIRE(report.at("rows").size() == 14);
        for (const auto& row : report.at("rows")) {
            for (const char* key : {"n", "iterative", "rsum", "flat", "closed"}) {
                CHECK(row.contains(key));
            }
        }
    }
}

TEST_CASE("expand: golden outputs for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto res = run_cli("expand --n " + std::to_string(n));
        REQUIRE(res.exit_code == 0);
        const json report = json::parse(res.out);
        CHECK(report.at("expansion") == read_golden("expand_n" + std::to_string(n) + ".txt"));
    }
    const auto res = run_cli("expand --n 3");
    CHECK(json::parse(res.out).at("expansion") == "1 + d1 + d2 + d3 + d1*d3");
    CHECK(json::parse(res.out).at("term_count") == 5);
}

TEST_CASE("bench: one row per (n, method) with cost accounting") {
    const auto res = run_cli("bench --coeffs " + ones_file() + " --n-max 6 --repeat 2");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    CHECK(report.at("rows").size() == 24);
    for (const auto& row : report.at("rows")) {
        CHECK(row.contains("wall_time_ns"));
        if (row.contains("grid_points")) {
            CHECK(row.at("terms_evaluated").get<std::uint64_t>() <=
                  row.at("grid_points").get<std::uint64_t>());
        }
        CHECK(row.at("value") ==
              json::parse(run_cli("eval --coeffs " + ones_file() + " --n " +
                                  row.at("n").dump() + " --method iter")
                              .out)
                  .at("value"));
        if (row.at("method") == "closed" && row.at("n") == 6) {
            CHECK(row.at("grid_points") == 78);  // 6 + 24 + 48
        }
        if (row.at("method") == "iterative") {
            CHECK(row.at("terms_evaluated") == row.at("n"));
        }
    }
}

TEST_CASE("cf: golden ratio convergents") {
    const auto res =
        run_cli("cf --b0 1 --num " + ones_file() + " --den " + ones_file() + " --k 4");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    const auto& rows = report.at("convergents");
    REQUIRE(rows.size() == 5);
    CHECK(rows[4].at("h") == "8");
    CHECK(rows[4].at("k") == "5");
    CHECK(rows[4].at("value") == "8/5");
    CHECK(rows[2].at("value") == "3/2");
}

TEST_CASE("ode: exact line for zero potential") {
    const std::string zeros = tmp().write("zeros.json", R"({"type":"constant","value":"0"})");
    const auto res = run_cli("ode --potential " + zeros +
                             " --x0 0 --h 1/10 --f0 0 --f1 1/10 --steps 3 --method closed");
    REQUIRE(res.exit_code == 0);
    const json report = json::parse(res.out);
    const auto& nodes = report.at("nodes");
    REQUIRE(nodes.size() == 5);
    CHECK(nodes[2].at("f") == "1/5");
    CHECK(nodes[2].at("x") == "1/5");
    CHECK(nodes[4].at("f") == "2/5");
}

TEST_CASE("general: constant-coefficient recurrence") {
    const std::string twos = tmp().write("twos.json", R"({"type":"constant","value":"2"})");
    const std::string fours = tmp().write("fours.json", R"({"type":"constant","value":"4"})");
    for (const std::string method : {"iter", "rsum", "flat", "closed"}) {
        const auto res = run_cli("general --a " + twos + " --b " + fours +
                                 " --c0 1 --c1 1 --n 4 --method " + method);
        REQUIRE(res.exit_code == 0);
        CHECK(json::parse(res.out).at("value") == "56");
    }
}

TEST_CASE("exit code 1 with a structured error object") {
    SUBCASE("missing file") {
        const auto res = run_cli("eval --coeffs /nonexistent.json --n 3 --method iter");
        CHECK(res.exit_code == 1);
        CHECK(json::parse(res.out).at("error").at("code") == "IoError");
    }
    SUBCASE("negative n") {
        const auto res = run_cli("eval --coeffs " + ones_file() + " --n -1 --method iter");
        CHECK(res.exit_code == 1);
        CHECK(json::parse(res.out).at("error").at("code") == "InvalidParams");
    }
    SUBCASE("grid guard") {
        const auto res =
            run_cli("--max-grid 100 eval --coeffs " + ones_file() + " --n 14 --method closed");
        CHECK(res.exit_code == 1);
        CHECK(json::parse(res.out).at("error").at("code") == "GridTooLarge");
    }
    SUBCASE("domain breach") {
        const std::string small =
            tmp().write("small.json", R"({"type":"table","values":["1","1"]})");
        const auto res = run_cli("eval --coeffs " + small + " --n 9 --method iter");
        CHECK(res.exit_code == 1);
        CHECK(json::parse(res.out).at("error").at("code") == "IndexOutOfDomain");
    }
    SUBCASE("bad rational in spec file") {
        const std::string bad = tmp().write("bad.json", R"({"type":"constant","value":"1/0"})");
        const auto res = run_cli("eval --coeffs " + bad + " --n 3 --method iter");
        CHECK(res.exit_code == 1);
        CHECK(json::parse(res.out).at("error").at("code") == "ParseError");
    }
}

TEST_CASE("exit code 2 on usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("eval --n 3 --method iter").exit_code == 2);               // missing --coeffs
    CHECK(run_cli("eval --coeffs x --n 3 --method bogus").exit_code == 2);   // bad method
    CHECK(run_cli("eval --coeffs x --n 3 --method iter --scalar int").exit_code == 2);
}

TEST_CASE("serial flag and thread pinning still give exact results") {
    const auto res = run_cli("--serial --threads 1 eval --coeffs " + ones_file() +
                             " --n 12 --method closed");
    REQUIRE(res.exit_code == 0);
    CHECK(json::parse(res.out).at("value") == "377");
}
