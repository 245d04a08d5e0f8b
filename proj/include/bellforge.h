/* bellforge C API: opaque handles plus error codes over the game toolkit.
 * All functions returning bf_status leave outputs untouched on failure;
 * bf_last_error() describes the most recent failure on the calling thread. */

#ifndef BELLFORGE_H
#define BELLFORGE_H

#include <stdint.h>

/* Only the bf_* surface is exported from the shared library. */
#if defined(BELLFORGE_BUILD) && defined(__GNUC__)
#define BF_API __attribute__((visibility("default")))
#else
#define BF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bf_status {
    BF_OK = 0,
    BF_ERR_INVALID_ARGUMENT = 1,
    BF_ERR_SHAPE_MISMATCH = 2,
    BF_ERR_CAP_EXCEEDED = 3,
    BF_ERR_PARSE = 4,
    BF_ERR_INTERNAL = 5
} bf_status;

typedef struct bf_game bf_game;
typedef struct bf_strategy bf_strategy;
typedef struct bf_correlation bf_correlation;
typedef struct bf_seesaw_report bf_seesaw_report;

BF_API const char* bf_version(void);
BF_API const char* bf_last_error(void);
BF_API void bf_string_free(char* s);

/* ------------------------------------------------------------------ games */

BF_API bf_status bf_game_tchsh(double alpha, int flipped, bf_game** out);
BF_API bf_status bf_game_three_chsh_builtin(bf_game** out);
BF_API bf_status bf_game_three_chsh_from_json(const char* text, bf_game** out);
/* Compose the embezzlement game from a 3-CHSH sub-game (NULL: builtin). */
BF_API bf_status bf_game_emb(const bf_game* three_chsh, bf_game** out);
BF_API bf_status bf_game_from_json(const char* text, bf_game** out);
BF_API bf_status bf_game_to_json(const bf_game* g, char** out);
BF_API void bf_game_free(bf_game* g);

BF_API const char* bf_game_name(const bf_game* g);
BF_API int bf_game_nx(const bf_game* g);
BF_API int bf_game_ny(const bf_game* g);
BF_API int bf_game_na(const bf_game* g);
BF_API int bf_game_nb(const bf_game* g);
/* 1 when the game carries the composed-game part map. */
BF_API int bf_game_has_parts(const bf_game* g);

BF_API bf_status bf_classical_value(const bf_game* g, double* out);

/* ------------------------------------------------------------- strategies */

BF_API bf_status bf_strategy_ideal_tchsh(double alpha, int flipped, bf_strategy** out);
BF_API bf_status bf_strategy_ideal_three_chsh(bf_strategy** out);
BF_API bf_status bf_strategy_ideal_emb(int d, bf_strategy** out);
BF_API bf_status bf_strategy_from_json(const char* text, bf_strategy** out);
BF_API bf_status bf_strategy_to_json(const bf_strategy* s, char** out);
BF_API void bf_strategy_free(bf_strategy* s);

BF_API int64_t bf_strategy_dim_a(const bf_strategy* s);
BF_API int64_t bf_strategy_dim_b(const bf_strategy* s);

/* defects[0..3] = completeness, idempotence, hermiticity, state norm. */
BF_API bf_status bf_strategy_validate(const bf_strategy* s, double defects[4]);

BF_API bf_status bf_value(const bf_game* g, const bf_strategy* s, double* out);
/* Conditional values of the three parts of the composed game. */
BF_API bf_status bf_value_parts(const bf_game* g, const bf_strategy* s, double parts[3]);

/* ----------------------------------------------------------- correlations */

BF_API bf_status bf_correlation_of_strategy(const bf_strategy* s, int nx, int ny,
                                     bf_correlation** out);
BF_API bf_status bf_correlation_limit_emb(bf_correlation** out);
BF_API bf_status bf_correlation_value(const bf_game* g, const bf_correlation* c, double* out);
BF_API bf_status bf_correlation_linf(const bf_correlation* p, const bf_correlation* q, double* out);
BF_API bf_status bf_correlation_entry(const bf_correlation* c, int x, int y, int a, int b,
                               double* out);
BF_API void bf_correlation_free(bf_correlation* c);

/* ------------------------------------------------- structured embezzlement */

BF_API bf_status bf_emb_gram(int64_t d, double* n_d, double* x_d, double* deviation);
BF_API bf_status bf_emb_part_b(int64_t d, double* out);
BF_API bf_status bf_emb_value(int64_t d, double* out);
BF_API bf_status bf_emb_limit_value(double* out);

/* ---------------------------------------------------------- exchange game */

/* Runs the coherent state-exchange simulation with the embezzler of index d.
 * level_lo/level_hi configure the qutrit levels carrying the phi+ branch. */
BF_API bf_status bf_exchange_run(int d, int level_lo, int level_hi, double* success,
                          int64_t* local_dim, double* bound);
BF_API bf_status bf_ltw_bound(int64_t local_dim, double* out);

/* ---------------------------------------------------------------- see-saw */

typedef struct bf_seesaw_config {
    int32_t dim_a;
    int32_t dim_b;
    int32_t restarts;
    int32_t max_iters;
    double tol;
    uint64_t seed;
    int32_t threads; /* 0: hardware concurrency, capped by BELLFORGE_THREADS */
} bf_seesaw_config;

BF_API bf_status bf_seesaw_run(const bf_game* g, const bf_seesaw_config* cfg,
                        bf_seesaw_report** out);
BF_API void bf_seesaw_report_free(bf_seesaw_report* r);

BF_API double bf_seesaw_best_value(const bf_seesaw_report* r);
BF_API int bf_seesaw_best_restart(const bf_seesaw_report* r);
BF_API int bf_seesaw_restart_count(const bf_seesaw_report* r);
BF_API double bf_seesaw_restart_best(const bf_seesaw_report* r, int restart);
BF_API int bf_seesaw_restart_converged(const bf_seesaw_report* r, int restart);
BF_API int bf_seesaw_trajectory_len(const bf_seesaw_report* r, int restart);
BF_API bf_status bf_seesaw_trajectory_point(const bf_seesaw_report* r, int restart, int i,
                                     int* sweep, double* value);
BF_API bf_status bf_seesaw_best_strategy(const bf_seesaw_report* r, bf_strategy** out);

#ifdef __cplusplus
}
#endif

#endif /* BELLFORGE_H */
