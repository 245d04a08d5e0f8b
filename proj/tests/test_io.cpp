#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "bellforge/io.hpp"

using namespace bellforge;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("game JSON round trip") {
    const NonlocalGame g = build_tchsh(0.5, true);
    const NonlocalGame back = game_from_json(game_to_json(g));
    CHECK(back.name == g.name);
    CHECK(back.nx == g.nx);
    CHECK(back.dist == g.dist);
    CHECK(back.score == g.score);
}

TEST_CASE("game JSON schema rejections") {
    CHECK_THROWS_AS(game_from_json("{"), ParseError);
    CHECK_THROWS_AS(game_from_json("{\"name\":\"g\"}"), ValidationError);

    NonlocalGame g = build_tchsh(1.0, false);
    g.dist[0] = 0.5;  // sums to 1.25
    CHECK_THROWS_AS(game_from_json(game_to_json(g)), ValidationError);

    g = build_tchsh(1.0, false);
    g.dist[0] = -0.25;
    g.dist[1] = 0.75;
    CHECK_THROWS_AS(game_from_json(game_to_json(g)), ValidationError);

    g = build_tchsh(1.0, false);
    g.score.pop_back();
    CHECK_THROWS_AS(game_from_json(game_to_json(g)), ValidationError);
}

TEST_CASE("builtin fixture matches the shipped file") {
    const std::string shipped = slurp(std::string(BF_DATA_DIR) + "/three_chsh.json");
    CHECK(shipped == builtin_three_chsh_json());

    const NonlocalGame g = builtin_three_chsh();
    CHECK(g.nx == 3);
    CHECK(g.ny == 4);
    CHECK(g.na == 3);
    CHECK(g.nb == 3);
    // classical baseline of the shipped tensor: (1 + sqrt2)/6
    CHECK(std::abs(classical_value(g) - (1.0 + std::sqrt(2.0)) / 6.0) < 1e-12);
}

TEST_CASE("strategy JSON round trip") {
    const QuantumStrategy s = ideal_tchsh(0.8, false);
    const QuantumStrategy back = strategy_from_json(strategy_to_json(s));
    CHECK(back.dim_a == 2);
    CHECK(back.dim_b == 2);
    const NonlocalGame g = build_tchsh(0.8, false);
    CHECK(std::abs(strategy_value(g, back) - strategy_value(g, s)) < 1e-15);
    CHECK((back.state.amps - s.state.amps).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(strategy_from_json("[1,2]"), ValidationError);
    CHECK_THROWS_AS(strategy_from_json("not json"), ParseError);
}
