#pragma once

#include <cstdint>
#include <vector>

#include "bellforge/game.hpp"

namespace bellforge {

struct SeesawConfig {
    int dim_a = 2;
    int dim_b = 2;
    int restarts = 1;
    int max_iters = 500;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    int threads = 0;  // 0: hardware concurrency, capped by BELLFORGE_THREADS

    void validate() const;
};

struct RestartTrace {
    int restart = 0;
    bool converged = false;
    double best = 0.0;
    std::vector<std::pair<int, double>> trajectory;  // (sweep, value)
};

struct SeesawReport {
    double best_value = 0.0;
    int best_restart = 0;
    QuantumStrategy best_strategy;
    std::vector<RestartTrace> restarts;
};

// D(x,y) V(x,y,a,b)-weighted sum of P (x) Q; <Psi|B|Psi> is the strategy
// value. Memory-capped at 10^8 entries.
Mat bell_operator(const NonlocalGame& g, const QuantumStrategy& s);

// Block-coordinate ascent: state update via the principal eigenvector of the
// Bell operator, measurement updates per question (closed-form positive part
// for two outcomes, polar iteration over a fixed rank profile otherwise).
// Deterministic for a fixed seed regardless of thread count.
SeesawReport optimize(const NonlocalGame& g, const SeesawConfig& cfg);

}  // namespace bellforge
