#include "bellforge.h"

#include <cstring>
#include <optional>
#include <string>

#include "bellforge/emb_engine.hpp"
#include "bellforge/exchange.hpp"
#include "bellforge/game.hpp"
#include "bellforge/io.hpp"
#include "bellforge/seesaw.hpp"

struct bf_game {
    bellforge::NonlocalGame game;
    std::optional<bellforge::EmbQuestionMap> parts;
};

struct bf_strategy {
    bellforge::QuantumStrategy s;
};

struct bf_correlation {
    bellforge::Correlation c;
};

struct bf_seesaw_report {
    bellforge::SeesawReport r;
};

namespace {

thread_local std::string g_last_error;

bf_status fail(bf_status code, const char* what) {
    g_last_error = what;
    return code;
}

template <typename Fn>
bf_status guarded(Fn&& fn) {
    try {
        fn();
        return BF_OK;
    } catch (const bellforge::CapError& e) {
        return fail(BF_ERR_CAP_EXCEEDED, e.what());
    } catch (const bellforge::ParseError& e) {
        return fail(BF_ERR_PARSE, e.what());
    } catch (const bellforge::ShapeError& e) {
        return fail(BF_ERR_SHAPE_MISMATCH, e.what());
    } catch (const bellforge::ValidationError& e) {
        return fail(BF_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(BF_ERR_INTERNAL, e.what());
    }
}

bool null_arg(const void* p) { return p == nullptr; }

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

bf_status null_error() { return fail(BF_ERR_INVALID_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

const char* bf_version(void) { return "0.1.0"; }

const char* bf_last_error(void) { return g_last_error.c_str(); }

void bf_string_free(char* s) { delete[] s; }

/* games */

bf_status bf_game_tchsh(double alpha, int flipped, bf_game** out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_game{bellforge::build_tchsh(alpha, flipped != 0), {}}; });
}

bf_status bf_game_three_chsh_builtin(bf_game** out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_game{bellforge::builtin_three_chsh(), {}}; });
}

bf_status bf_game_three_chsh_from_json(const char* text, bf_game** out) {
    if (null_arg(text) || null_arg(out)) return null_error();
    return guarded([&] {
        bellforge::NonlocalGame g = bellforge::game_from_json(text);
        bellforge::validate_three_chsh(g);
        *out = new bf_game{std::move(g), {}};
    });
}

bf_status bf_game_emb(const bf_game* three_chsh, bf_game** out) {
    if (null_arg(out)) return null_error();
    return guarded([&] {
        const bellforge::NonlocalGame& sub =
            three_chsh ? three_chsh->game : bellforge::builtin_three_chsh();
        bellforge::EmbGame eg = bellforge::build_emb(sub);
        *out = new bf_game{std::move(eg.game), std::move(eg.map)};
    });
}

bf_status bf_game_from_json(const char* text, bf_game** out) {
    if (null_arg(text) || null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_game{bellforge::game_from_json(text), {}}; });
}

bf_status bf_game_to_json(const bf_game* g, char** out) {
    if (null_arg(g) || null_arg(out)) return null_error();
    return guarded([&] { *out = dup_string(bellforge::game_to_json(g->game)); });
}

void bf_game_free(bf_game* g) { delete g; }

const char* bf_game_name(const bf_game* g) { return g ? g->game.name.c_str() : ""; }
int bf_game_nx(const bf_game* g) { return g ? g->game.nx : 0; }
int bf_game_ny(const bf_game* g) { return g ? g->game.ny : 0; }
int bf_game_na(const bf_game* g) { return g ? g->game.na : 0; }
int bf_game_nb(const bf_game* g) { return g ? g->game.nb : 0; }
int bf_game_has_parts(const bf_game* g) { return g && g->parts ? 1 : 0; }

bf_status bf_classical_value(const bf_game* g, double* out) {
    if (null_arg(g) || null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::classical_value(g->game); });
}

/* strategies */

bf_status bf_strategy_ideal_tchsh(double alpha, int flipped, bf_strategy** out) {
    if (null_arg(out)) return null_error();
    return guarded(
        [&] { *out = new bf_strategy{bellforge::ideal_tchsh(alpha, flipped != 0)}; });
}

bf_status bf_strategy_ideal_three_chsh(bf_strategy** out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_strategy{bellforge::ideal_three_chsh()}; });
}

bf_status bf_strategy_ideal_emb(int d, bf_strategy** out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_strategy{bellforge::ideal_emb(d)}; });
}

bf_status bf_strategy_from_json(const char* text, bf_strategy** out) {
    if (null_arg(text) || null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_strategy{bellforge::strategy_from_json(text)}; });
}

bf_status bf_strategy_to_json(const bf_strategy* s, char** out) {
    if (null_arg(s) || null_arg(out)) return null_error();
    return guarded([&] { *out = dup_string(bellforge::strategy_to_json(s->s)); });
}

void bf_strategy_free(bf_strategy* s) { delete s; }

int64_t bf_strategy_dim_a(const bf_strategy* s) { return s ? s->s.dim_a : 0; }
int64_t bf_strategy_dim_b(const bf_strategy* s) { return s ? s->s.dim_b : 0; }

bf_status bf_strategy_validate(const bf_strategy* s, double defects[4]) {
    if (null_arg(s) || null_arg(defects)) return null_error();
    return guarded([&] {
        const bellforge::StrategyDiagnostics d = bellforge::validate_strategy(s->s);
        defects[0] = d.completeness_defect;
        defects[1] = d.idempotence_defect;
        defects[2] = d.hermiticity_defect;
        defects[3] = d.norm_defect;
    });
}

bf_status bf_value(const bf_game* g, const bf_strategy* s, double* out) {
    if (null_arg(g) || null_arg(s) || null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::strategy_value(g->game, s->s); });
}

bf_status bf_value_parts(const bf_game* g, const bf_strategy* s, double parts[3]) {
    if (null_arg(g) || null_arg(s) || null_arg(parts)) return null_error();
    if (!g->parts) return fail(BF_ERR_INVALID_ARGUMENT, "game carries no part map");
    return guarded([&] {
        const bellforge::EmbGame eg{g->game, *g->parts};
        for (int part = 0; part < 3; ++part)
            parts[part] = bellforge::part_value(eg, s->s, part);
    });
}

/* correlations */

bf_status bf_correlation_of_strategy(const bf_strategy* s, int nx, int ny,
                                     bf_correlation** out) {
    if (null_arg(s) || null_arg(out)) return null_error();
    return guarded(
        [&] { *out = new bf_correlation{bellforge::correlation_of_strategy(s->s, nx, ny)}; });
}

bf_status bf_correlation_limit_emb(bf_correlation** out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_correlation{bellforge::limit_correlation()}; });
}

bf_status bf_correlation_value(const bf_game* g, const bf_correlation* c, double* out) {
    if (null_arg(g) || null_arg(c) || null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::correlation_value(g->game, c->c); });
}

bf_status bf_correlation_linf(const bf_correlation* p, const bf_correlation* q, double* out) {
    if (null_arg(p) || null_arg(q) || null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::correlation_distance(p->c, q->c); });
}

bf_status bf_correlation_entry(const bf_correlation* c, int x, int y, int a, int b,
                               double* out) {
    if (null_arg(c) || null_arg(out)) return null_error();
    if (x < 0 || x >= c->c.nx || y < 0 || y >= c->c.ny || a < 0 || a >= c->c.na || b < 0 ||
        b >= c->c.nb)
        return fail(BF_ERR_INVALID_ARGUMENT, "correlation index out of range");
    *out = c->c.at(x, y, a, b);
    return BF_OK;
}

void bf_correlation_free(bf_correlation* c) { delete c; }

/* structured embezzlement */

bf_status bf_emb_gram(int64_t d, double* n_d, double* x_d, double* deviation) {
    if (null_arg(n_d) || null_arg(x_d) || null_arg(deviation)) return null_error();
    return guarded([&] {
        const bellforge::EmbezzlerGram g = bellforge::gram_summary(d);
        *n_d = g.n_d;
        *x_d = g.x_d;
        *deviation = g.deviation;
    });
}

bf_status bf_emb_part_b(int64_t d, double* out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::part_b_value_structured(d); });
}

bf_status bf_emb_value(int64_t d, double* out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::emb_value(d); });
}

bf_status bf_emb_limit_value(double* out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::emb_limit_value(); });
}

/* exchange */

bf_status bf_exchange_run(int d, int level_lo, int level_hi, double* success,
                          int64_t* local_dim, double* bound) {
    if (null_arg(success) || null_arg(local_dim) || null_arg(bound)) return null_error();
    return guarded([&] {
        const bellforge::ExchangeInstance inst =
            bellforge::ExchangeInstance::make({level_lo, level_hi});
        const bellforge::ExchangeStrategy strat = bellforge::build_exchange_strategy(d);
        *success = bellforge::success_probability(strat, inst);
        *local_dim = strat.local_dim();
        *bound = bellforge::ltw_bound(strat.local_dim());
    });
}

bf_status bf_ltw_bound(int64_t local_dim, double* out) {
    if (null_arg(out)) return null_error();
    return guarded([&] { *out = bellforge::ltw_bound(local_dim); });
}

/* see-saw */

bf_status bf_seesaw_run(const bf_game* g, const bf_seesaw_config* cfg,
                        bf_seesaw_report** out) {
    if (null_arg(g) || null_arg(cfg) || null_arg(out)) return null_error();
    return guarded([&] {
        bellforge::SeesawConfig c;
        c.dim_a = cfg->dim_a;
        c.dim_b = cfg->dim_b;
        c.restarts = cfg->restarts;
        c.max_iters = cfg->max_iters;
        c.tol = cfg->tol;
        c.seed = cfg->seed;
        c.threads = cfg->threads;
        *out = new bf_seesaw_report{bellforge::optimize(g->game, c)};
    });
}

void bf_seesaw_report_free(bf_seesaw_report* r) { delete r; }

double bf_seesaw_best_value(const bf_seesaw_report* r) { return r ? r->r.best_value : 0.0; }
int bf_seesaw_best_restart(const bf_seesaw_report* r) { return r ? r->r.best_restart : -1; }
int bf_seesaw_restart_count(const bf_seesaw_report* r) {
    return r ? int(r->r.restarts.size()) : 0;
}

double bf_seesaw_restart_best(const bf_seesaw_report* r, int restart) {
    if (!r || restart < 0 || restart >= int(r->r.restarts.size())) return 0.0;
    return r->r.restarts[size_t(restart)].best;
}

int bf_seesaw_restart_converged(const bf_seesaw_report* r, int restart) {
    if (!r || restart < 0 || restart >= int(r->r.restarts.size())) return 0;
    return r->r.restarts[size_t(restart)].converged ? 1 : 0;
}

int bf_seesaw_trajectory_len(const bf_seesaw_report* r, int restart) {
    if (!r || restart < 0 || restart >= int(r->r.restarts.size())) return 0;
    return int(r->r.restarts[size_t(restart)].trajectory.size());
}

bf_status bf_seesaw_trajectory_point(const bf_seesaw_report* r, int restart, int i,
                                     int* sweep, double* value) {
    if (null_arg(r) || null_arg(sweep) || null_arg(value)) return null_error();
    if (restart < 0 || restart >= int(r->r.restarts.size()))
        return fail(BF_ERR_INVALID_ARGUMENT, "restart index out of range");
    const auto& traj = r->r.restarts[size_t(restart)].trajectory;
    if (i < 0 || i >= int(traj.size()))
        return fail(BF_ERR_INVALID_ARGUMENT, "trajectory index out of range");
    *sweep = traj[size_t(i)].first;
    *value = traj[size_t(i)].second;
    return BF_OK;
}

bf_status bf_seesaw_best_strategy(const bf_seesaw_report* r, bf_strategy** out) {
    if (null_arg(r) || null_arg(out)) return null_error();
    return guarded([&] { *out = new bf_strategy{r->r.best_strategy}; });
}

}  // extern "C"
