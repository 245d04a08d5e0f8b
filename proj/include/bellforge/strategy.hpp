#pragma once

#include <array>
#include <vector>

#include "bellforge/embezzle.hpp"
#include "bellforge/linalg.hpp"

namespace bellforge {

// A bipartite state plus per-question projective measurements. meas_a[x][a]
// acts on the A side, meas_b[y][b] on the B side; each question's operators
// are orthogonal projectors summing to the identity.
struct QuantumStrategy {
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;
    StateVector state;
    std::vector<std::vector<Mat>> meas_a;
    std::vector<std::vector<Mat>> meas_b;
};

struct StrategyDiagnostics {
    double completeness_defect = 0.0;  // max |sum_a P_x^a - I|
    double idempotence_defect = 0.0;   // max |P^2 - P|
    double hermiticity_defect = 0.0;   // max |P - P^dagger|
    double norm_defect = 0.0;          // | ||state|| - 1 |

    double worst() const;
};

// Two-outcome tilted-CHSH measurement blocks on a single qubit, indexed
// [question][answer]. The flipped variant conjugates by sigma_x and swaps
// answer labels, matching the ~tCHSH answer convention.
std::array<std::array<Mat, 2>, 2> tchsh_qubit_ops(double alpha, bool flipped, bool first_player);

QuantumStrategy ideal_tchsh(double alpha, bool flipped);

QuantumStrategy ideal_three_chsh();

// The completeness family S_d for the composed game: maximally entangled
// qutrits tensored with Gamma_d, 3-CHSH measurements on the qutrit factor and
// tilted-CHSH measurements conjugated by the embedded shift W-tilde.
QuantumStrategy ideal_emb(int d);

StrategyDiagnostics validate_strategy(const QuantumStrategy& s);

}  // namespace bellforge
