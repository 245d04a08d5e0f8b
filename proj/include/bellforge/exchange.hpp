#pragma once

#include <cstdint>
#include <utility>

#include "bellforge/embezzle.hpp"
#include "bellforge/linalg.hpp"

namespace bellforge {

inline constexpr int kExchangeDenseCap = 8;

// Coherent state-exchange referee: qubit register R and qutrit registers S, T
// prepared in (1/sqrt2)(|0>|00> + |1>|phi+>), with phi+ supported on a
// configurable pair of qutrit levels. The provers must return qubits that,
// together with R, pass the projective test onto (1/sqrt2)(|000> + |111>).
struct ExchangeInstance {
    std::pair<int, int> phi_plus_levels{1, 2};
    StateVector referee_state;  // on R(2) x S(3) x T(3)

    static ExchangeInstance make(std::pair<int, int> levels = {1, 2});
    double branch_overlap() const;  // <00|phi+>
};

// Prover transformation built from the ideal embezzler: shared state Gamma_d,
// local unitary = embedded shift followed by the qutrit -> (qubit, flag)
// relabeling completed to a unitary. Local space per side is
// S(3) x A'(2^d) x F(2), with the flag marking qutrit level 2.
struct ExchangeStrategy {
    int d = 0;
    StateVector aux;  // Gamma_d
    Mat u_a;
    Mat u_b;
    std::int64_t local_dim() const { return std::int64_t(6) << d; }
};

ExchangeStrategy build_exchange_strategy(int d);

double success_probability(const ExchangeStrategy& s, const ExchangeInstance& inst);

// Probability that either prover's flag qubit ends up excited (level-2 leak).
double flag_excitation_probability(const ExchangeStrategy& s, const ExchangeInstance& inst);

// 1 - 1/(32 log2^2(3 local_dim)): the dimension bound used as a one-sided
// consistency check; the logarithm base is fixed to 2.
double ltw_bound(std::int64_t local_dim);

}  // namespace bellforge
