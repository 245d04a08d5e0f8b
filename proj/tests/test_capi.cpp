#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "bellforge.h"

TEST_CASE("version and error strings") {
    CHECK(std::strcmp(bf_version(), "0.1.0") == 0);
    CHECK(bf_last_error() != nullptr);
}

TEST_CASE("game handles") {
    bf_game* g = nullptr;
    REQUIRE(bf_game_tchsh(1.0, 0, &g) == BF_OK);
    CHECK(bf_game_nx(g) == 2);
    CHECK(bf_game_ny(g) == 2);
    CHECK(bf_game_has_parts(g) == 0);

    double cv = 0.0;
    REQUIRE(bf_classical_value(g, &cv) == BF_OK);
    CHECK(cv == 0.5);

    char* json = nullptr;
    REQUIRE(bf_game_to_json(g, &json) == BF_OK);
    bf_game* copy = nullptr;
    REQUIRE(bf_game_from_json(json, &copy) == BF_OK);
    CHECK(bf_game_nx(copy) == 2);
    bf_string_free(json);
    bf_game_free(copy);
    bf_game_free(g);

    bf_game* bad = nullptr;
    CHECK(bf_game_tchsh(2.0, 0, &bad) == BF_ERR_INVALID_ARGUMENT);
    CHECK(std::string(bf_last_error()).find("alpha") != std::string::npos);
    CHECK(bf_game_from_json("{", &bad) == BF_ERR_PARSE);
    CHECK(bf_game_tchsh(1.0, 0, nullptr) == BF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("values through the C surface") {
    bf_game* g = nullptr;
    bf_strategy* s = nullptr;
    REQUIRE(bf_game_tchsh(1.0, 0, &g) == BF_OK);
    REQUIRE(bf_strategy_ideal_tchsh(1.0, 0, &s) == BF_OK);
    double v = 0.0;
    REQUIRE(bf_value(g, s, &v) == BF_OK);
    CHECK(std::abs(v - std::sqrt(2.0) / 2.0) < 1e-12);

    double defects[4];
    REQUIRE(bf_strategy_validate(s, defects) == BF_OK);
    for (double d : defects) CHECK(d < 1e-12);

    // shape mismatch flagged
    bf_game* three = nullptr;
    REQUIRE(bf_game_three_chsh_builtin(&three) == BF_OK);
    CHECK(bf_value(three, s, &v) == BF_ERR_SHAPE_MISMATCH);

    bf_game_free(three);
    bf_strategy_free(s);
    bf_game_free(g);
}

TEST_CASE("composed game parts and engines") {
    bf_game* emb = nullptr;
    REQUIRE(bf_game_emb(nullptr, &emb) == BF_OK);
    CHECK(bf_game_has_parts(emb) == 1);
    CHECK(bf_game_nx(emb) == 5);
    CHECK(bf_game_ny(emb) == 6);

    bf_strategy* s = nullptr;
    REQUIRE(bf_strategy_ideal_emb(2, &s) == BF_OK);
    double dense = 0.0, structured = 0.0, parts[3];
    REQUIRE(bf_value(emb, s, &dense) == BF_OK);
    REQUIRE(bf_emb_value(2, &structured) == BF_OK);
    CHECK(std::abs(dense - structured) < 1e-10);
    REQUIRE(bf_value_parts(emb, s, parts) == BF_OK);
    CHECK(std::abs(parts[2] - 1.0) < 1e-12);
    CHECK(std::abs(dense - (parts[0] + parts[1] + parts[2]) / 3.0) < 1e-12);

    // a game without a part map refuses the breakdown
    bf_game* chsh = nullptr;
    REQUIRE(bf_game_tchsh(1.0, 0, &chsh) == BF_OK);
    CHECK(bf_value_parts(chsh, s, parts) == BF_ERR_INVALID_ARGUMENT);
    bf_game_free(chsh);

    double limit = 0.0;
    REQUIRE(bf_emb_limit_value(&limit) == BF_OK);
    bf_correlation* lim = nullptr;
    REQUIRE(bf_correlation_limit_emb(&lim) == BF_OK);
    double lv = 0.0;
    REQUIRE(bf_correlation_value(emb, lim, &lv) == BF_OK);
    CHECK(std::abs(lv - limit) < 1e-12);

    bf_correlation* c = nullptr;
    REQUIRE(bf_correlation_of_strategy(s, 5, 6, &c) == BF_OK);
    double dist = 0.0;
    REQUIRE(bf_correlation_linf(c, lim, &dist) == BF_OK);
    CHECK(dist > 0.0);
    double entry = 0.0;
    REQUIRE(bf_correlation_entry(c, 0, 4, 0, 0, &entry) == BF_OK);
    CHECK(std::abs(entry - 1.0 / 3.0) < 1e-12);
    CHECK(bf_correlation_entry(c, 9, 0, 0, 0, &entry) == BF_ERR_INVALID_ARGUMENT);

    bf_correlation_free(c);
    bf_correlation_free(lim);
    bf_strategy_free(s);
    bf_game_free(emb);

    CHECK(bf_strategy_ideal_emb(99, &s) == BF_ERR_CAP_EXCEEDED);
}

TEST_CASE("composed game from a user-supplied sub-game") {
    bf_game* builtin = nullptr;
    REQUIRE(bf_game_three_chsh_builtin(&builtin) == BF_OK);
    char* json = nullptr;
    REQUIRE(bf_game_to_json(builtin, &json) == BF_OK);

    bf_game* loaded = nullptr;
    REQUIRE(bf_game_three_chsh_from_json(json, &loaded) == BF_OK);
    bf_game* emb = nullptr;
    REQUIRE(bf_game_emb(loaded, &emb) == BF_OK);
    CHECK(bf_game_has_parts(emb) == 1);

    bf_strategy* s = nullptr;
    REQUIRE(bf_strategy_ideal_emb(1, &s) == BF_OK);
    double via_loaded = 0.0, via_builtin = 0.0;
    REQUIRE(bf_value(emb, s, &via_loaded) == BF_OK);
    bf_game* emb_builtin = nullptr;
    REQUIRE(bf_game_emb(nullptr, &emb_builtin) == BF_OK);
    REQUIRE(bf_value(emb_builtin, s, &via_builtin) == BF_OK);
    CHECK(via_loaded == via_builtin);

    // a tilted-CHSH definition is not a valid qutrit sub-game
    bf_game* chsh = nullptr;
    REQUIRE(bf_game_tchsh(1.0, 0, &chsh) == BF_OK);
    char* chsh_json = nullptr;
    REQUIRE(bf_game_to_json(chsh, &chsh_json) == BF_OK);
    bf_game* rejected = nullptr;
    CHECK(bf_game_three_chsh_from_json(chsh_json, &rejected) == BF_ERR_INVALID_ARGUMENT);

    bf_string_free(chsh_json);
    bf_game_free(chsh);
    bf_game_free(emb_builtin);
    bf_strategy_free(s);
    bf_game_free(emb);
    bf_game_free(loaded);
    bf_string_free(json);
    bf_game_free(builtin);
}

extern "C" int bf_header_compiles_as_c(void);

TEST_CASE("header stays C-compatible") { CHECK(bf_header_compiles_as_c() == 0); }

TEST_CASE("structured sweep primitives") {
    double n = 0, x = 0, dev = 0;
    REQUIRE(bf_emb_gram(1, &n, &x, &dev) == BF_OK);
    CHECK(std::abs(x - 1.0 / std::sqrt(2.0)) < 1e-12);
    REQUIRE(bf_emb_gram(1000000, &n, &x, &dev) == BF_OK);
    CHECK(x < 1.0);
    CHECK(bf_emb_gram(0, &n, &x, &dev) == BF_ERR_INVALID_ARGUMENT);

    double pb = 0.0;
    REQUIRE(bf_emb_part_b(4, &pb) == BF_OK);
    CHECK(pb > 0.0);
}

TEST_CASE("exchange run") {
    double p = 0.0, bound = 0.0;
    int64_t dim = 0;
    REQUIRE(bf_exchange_run(1, 1, 2, &p, &dim, &bound) == BF_OK);
    CHECK(dim == 12);
    CHECK(std::abs(p - 0.85355339059327373) < 1e-12);
    CHECK(p <= bound);
    CHECK(bf_exchange_run(99, 1, 2, &p, &dim, &bound) == BF_ERR_CAP_EXCEEDED);
    CHECK(bf_exchange_run(1, 1, 1, &p, &dim, &bound) == BF_ERR_INVALID_ARGUMENT);

    double b = 0.0;
    REQUIRE(bf_ltw_bound(1, &b) == BF_OK);
    CHECK(std::abs(b - 0.9875602) < 1e-6);
}

TEST_CASE("see-saw through the C surface") {
    bf_game* g = nullptr;
    REQUIRE(bf_game_tchsh(1.0, 0, &g) == BF_OK);
    bf_seesaw_config cfg{2, 2, 4, 150, 1e-9, 11, 1};
    bf_seesaw_report* rep = nullptr;
    REQUIRE(bf_seesaw_run(g, &cfg, &rep) == BF_OK);
    CHECK(bf_seesaw_restart_count(rep) == 4);
    const double best = bf_seesaw_best_value(rep);
    CHECK(best >= std::sqrt(2.0) / 2.0 - 1e-4);
    CHECK(best <= std::sqrt(2.0) / 2.0 + 1e-9);
    const int br = bf_seesaw_best_restart(rep);
    CHECK(std::abs(bf_seesaw_restart_best(rep, br) - best) == 0.0);
    const int len = bf_seesaw_trajectory_len(rep, br);
    REQUIRE(len > 0);
    int sweep = -1;
    double value = 0.0;
    REQUIRE(bf_seesaw_trajectory_point(rep, br, len - 1, &sweep, &value) == BF_OK);
    CHECK(value <= bf_seesaw_restart_best(rep, br));
    CHECK(bf_seesaw_restart_best(rep, br) - value < 1e-9);
    CHECK(bf_seesaw_trajectory_point(rep, br, len, &sweep, &value) ==
          BF_ERR_INVALID_ARGUMENT);

    bf_strategy* best_strategy = nullptr;
    REQUIRE(bf_seesaw_best_strategy(rep, &best_strategy) == BF_OK);
    double v = 0.0;
    REQUIRE(bf_value(g, best_strategy, &v) == BF_OK);
    CHECK(std::abs(v - best) < 1e-10);

    char* json = nullptr;
    REQUIRE(bf_strategy_to_json(best_strategy, &json) == BF_OK);
    bf_strategy* back = nullptr;
    REQUIRE(bf_strategy_from_json(json, &back) == BF_OK);
    double v2 = 0.0;
    REQUIRE(bf_value(g, back, &v2) == BF_OK);
    CHECK(std::abs(v2 - v) < 1e-12);
    bf_string_free(json);
    bf_strategy_free(back);
    bf_strategy_free(best_strategy);
    bf_seesaw_report_free(rep);

    bf_seesaw_config bad = cfg;
    bad.restarts = 0;
    CHECK(bf_seesaw_run(g, &bad, &rep) == BF_ERR_INVALID_ARGUMENT);
    bf_game_free(g);
}
