#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli_support.hpp"

namespace fs = std::filesystem;

namespace {

std::string g_binary;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout.txt";
    const std::string cmd = "\"" + g_binary + "\" " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(out_path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    r.out = os.str();
    return r;
}

double grab(const std::string& text, const std::string& key) {
    const size_t pos = text.find(key + "=");
    REQUIRE(pos != std::string::npos);
    return std::stod(text.substr(pos + key.size() + 1));
}

std::vector<std::vector<std::string>> parse_csv(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream is(line);
        std::string cell;
        while (std::getline(is, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::string fresh_dir(const std::string& name) {
    fs::remove_all(name);
    fs::create_directories(name);
    return name;
}

}  // namespace

TEST_CASE("value subcommand") {
    const RunResult r = run("value --game builtin:tchsh:alpha=1 --strategy builtin:tchsh:alpha=1");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(grab(r.out, "value") - 0.70710678118654746) < 1e-12);

    const RunResult emb = run("value --game builtin:emb --strategy builtin:emb:d=3");
    CHECK(emb.exit_code == 0);
    CHECK(std::abs(grab(emb.out, "dense") - grab(emb.out, "structured")) < 1e-10);
    CHECK(std::abs(grab(emb.out, "part_c") - 1.0) < 1e-12);

    CHECK(run("value --game builtin:nonsense --strategy builtin:tchsh:alpha=1").exit_code == 2);
    CHECK(run("value --game no_such_file.json --strategy builtin:tchsh:alpha=1").exit_code == 2);
}

TEST_CASE("constant-score game file evaluates to its constant") {
    nlohmann::json doc;
    doc["name"] = "ones";
    doc["nx"] = 2;
    doc["ny"] = 2;
    doc["na"] = 2;
    doc["nb"] = 2;
    doc["dist"] = std::vector<double>(4, 0.25);
    doc["score"] = std::vector<double>(16, 1.0);
    {
        std::ofstream f("ones_game.json");
        f << doc.dump();
    }
    const RunResult r = run("value --game ones_game.json --strategy builtin:tchsh:alpha=1");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(grab(r.out, "value") - 1.0) < 1e-12);
}

TEST_CASE("strategy export round-trips through a file ref") {
    const RunResult dump = run(
        "value --game builtin:tchsh:alpha=1 --strategy builtin:tchsh:alpha=1 "
        "--dump-strategy exported_strategy.json");
    CHECK(dump.exit_code == 0);
    const RunResult reload =
        run("value --game builtin:tchsh:alpha=1 --strategy exported_strategy.json");
    CHECK(reload.exit_code == 0);
    CHECK(grab(dump.out, "value") == grab(reload.out, "value"));
}

TEST_CASE("classical subcommand and cap refusal") {
    const RunResult r = run("classical --game builtin:tchsh:alpha=1");
    CHECK(r.exit_code == 0);
    CHECK(grab(r.out, "classical_value") == 0.5);

    // a 5x5-question, 6-answer game exceeds the enumeration cap
    nlohmann::json big;
    big["name"] = "big";
    big["nx"] = 5;
    big["ny"] = 5;
    big["na"] = 6;
    big["nb"] = 6;
    big["dist"] = std::vector<double>(25, 1.0 / 25.0);
    big["score"] = std::vector<double>(25 * 36, 0.0);
    {
        std::ofstream f("big_game.json");
        f << big.dump();
    }
    CHECK(run("classical --game big_game.json").exit_code == 3);
}

TEST_CASE("curve subcommand") {
    const std::string dir = fresh_dir("out_curve");
    const RunResult r = run("curve --d-range 1:1048576:2 --out " + dir + " --plot");
    CHECK(r.exit_code == 0);
    const double slope = grab(r.out, "loglog_slope");
    CHECK(slope > -1.15);
    CHECK(slope < -0.85);

    const auto rows = parse_csv(dir + "/curve.csv");
    REQUIRE(rows.size() == 2 + 21);  // comment, header, 21 dyadic points
    CHECK(rows[0][0].rfind("# manifest=", 0) == 0);
    REQUIRE(rows[1] ==
            std::vector<std::string>{"d", "n_d", "x_d", "deviation", "part_b", "emb_value",
                                     "epsilon"});
    double prev_eps = 1e300;
    for (size_t i = 2; i < rows.size(); ++i) {
        const double eps = std::stod(rows[i][6]);
        CHECK(eps > 0.0);
        CHECK(eps < prev_eps);
        prev_eps = eps;
    }

    // byte-identical rerun, including the plot
    const std::string csv_before = bfcli::read_file(dir + "/curve.csv");
    const std::string svg_before = bfcli::read_file(dir + "/curve.svg");
    CHECK(run("curve --d-range 1:1048576:2 --out " + dir + " --plot").exit_code == 0);
    CHECK(bfcli::read_file(dir + "/curve.csv") == csv_before);
    CHECK(bfcli::read_file(dir + "/curve.svg") == svg_before);

    // unsorted d list comes back sorted
    const std::string dir2 = fresh_dir("out_curve2");
    CHECK(run("curve --d 4,1,2 --out " + dir2).exit_code == 0);
    const auto rows2 = parse_csv(dir2 + "/curve.csv");
    REQUIRE(rows2.size() == 5);
    CHECK(rows2[2][0] == "1");
    CHECK(rows2[3][0] == "2");
    CHECK(rows2[4][0] == "4");

    CHECK(run("curve --out " + dir2).exit_code == 2);  // d values missing

    // a single d produces a single data row
    const std::string dir3 = fresh_dir("out_curve3");
    CHECK(run("curve --d 5 --out " + dir3).exit_code == 0);
    CHECK(parse_csv(dir3 + "/curve.csv").size() == 3);
}

TEST_CASE("nonclosure subcommand") {
    const std::string dir = fresh_dir("out_nonclosure");
    const RunResult r = run("nonclosure --d-max 4 --out " + dir);
    CHECK(r.exit_code == 0);
    const auto rows = parse_csv(dir + "/nonclosure.csv");
    REQUIRE(rows.size() == 2 + 4);
    REQUIRE(rows[1] == std::vector<std::string>{"d", "linf_dist", "value", "limit_value"});
    double prev = 1e300;
    const double limit = std::stod(rows[2][3]);
    for (size_t i = 2; i < rows.size(); ++i) {
        const double dist = std::stod(rows[i][1]);
        CHECK(dist < prev);
        prev = dist;
        CHECK(std::stod(rows[i][3]) == limit);
        CHECK(std::stod(rows[i][2]) < limit);
    }
}

TEST_CASE("exchange subcommand") {
    const std::string dir = fresh_dir("out_exchange");
    const RunResult r = run("exchange --d 1,2,3 --format json --out " + dir);
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(bfcli::read_file(dir + "/exchange.json"));
    REQUIRE(doc["rows"].size() == 3);
    double prev = 0.0;
    for (const auto& row : doc["rows"]) {
        const double p = row["success_prob"].get<double>();
        CHECK(p > prev);
        CHECK(p <= row["ltw_bound"].get<double>());
        prev = p;
    }
    const auto rows = parse_csv(dir + "/exchange.csv");
    REQUIRE(rows[1] == std::vector<std::string>{"d", "local_dim", "success_prob", "ltw_bound"});
}

TEST_CASE("seesaw subcommand") {
    const std::string dir = fresh_dir("out_seesaw");
    const std::string cmd =
        "seesaw --game builtin:tchsh:alpha=1 --dims 2,2 --restarts 6 --max-iters 150 --seed 5 "
        "--out " + dir;
    const RunResult r = run(cmd);
    CHECK(r.exit_code == 0);
    CHECK(grab(r.out, "best_value") >= 0.7070);

    const std::string before = bfcli::read_file(dir + "/seesaw.json");
    const auto doc = nlohmann::json::parse(before);
    CHECK(doc["config"]["seed"] == 5);
    CHECK(doc["restarts"].size() == 6);
    CHECK(doc["best_value"].get<double>() >= 0.7070);

    CHECK(run(cmd).exit_code == 0);
    CHECK(bfcli::read_file(dir + "/seesaw.json") == before);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-bellforge-binary>\n");
        return 1;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
