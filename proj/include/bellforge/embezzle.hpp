#pragma once

#include <cstdint>

#include "bellforge/linalg.hpp"

namespace bellforge {

// Largest d for which dense embezzler states and shift matrices are built.
inline constexpr int kDenseEmbezzlerCap = 10;

// O(d) summary of the embezzling state Gamma_d: the normalizer
// N_d = sum_{j,k=1..d} 2^{-|j-k|/2}, the overlap x_d between Gamma_d and its
// shifted companion gamma'_d, and the embezzlement deviation sqrt(2 - 2 x_d).
struct EmbezzlerGram {
    std::int64_t d;
    double n_d;
    double x_d;
    double deviation;
};

// Gamma_d = (1/sqrt(N_d)) sum_{j=1..d} |11>^{j} |EPR>^{(d-j)} on
// (C^2)^{d}_{A'} (x) (C^2)^{d}_{B'}, A' block most significant.
StateVector gamma_dense(int d);

// The shifted companion gamma'_d (same sum with j = 0..d-1).
StateVector gamma_shifted_dense(int d);

// Left cyclic shift of d+1 qubit registers on C^{2^(d+1)}; with corrected set,
// the shift is followed by a bit flip of register 0.
Mat shift_unitary(int d, bool corrected);

// W-tilde on C^3 (x) (C^2)^{d}: identity on the level-0 sector, and the
// corrected shift conjugated into levels {1,2} through V on the rest.
Mat embedded_shift(int d);

EmbezzlerGram gram_summary(std::int64_t d);

}  // namespace bellforge
