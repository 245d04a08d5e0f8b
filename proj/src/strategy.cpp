#include "bellforge/strategy.hpp"

#include <algorithm>
#include <cmath>

namespace bellforge {

namespace {

Mat ket_proj(int dim, int i) {
    Mat m = Mat::Zero(dim, dim);
    m(i, i) = 1.0;
    return m;
}

struct PlusMinus {
    Mat plus;
    Mat minus;
};

PlusMinus reflection_projectors(const Mat& obs) {
    // obs is a +-1 reflection; closed form avoids an eigensolve.
    const Eigen::Index n = obs.rows();
    return {(Mat::Identity(n, n) + obs) / 2.0, (Mat::Identity(n, n) - obs) / 2.0};
}

}  // namespace

double StrategyDiagnostics::worst() const {
    return std::max({completeness_defect, idempotence_defect, hermiticity_defect, norm_defect});
}

std::array<std::array<Mat, 2>, 2> tchsh_qubit_ops(double alpha, bool flipped, bool first_player) {
    const TiltedParams p = TiltedParams::from_alpha(alpha);
    const TiltedPaulis tp = tilted_paulis(p);
    const Mat q0 = first_player ? pauli_z() : tp.tz;
    const Mat q1 = first_player ? pauli_x() : tp.tx;
    std::array<std::array<Mat, 2>, 2> ops;
    for (int x = 0; x < 2; ++x) {
        const PlusMinus pm = reflection_projectors(x == 0 ? q0 : q1);
        if (!flipped) {
            ops[x] = {pm.plus, pm.minus};
        } else {
            const Mat sx = pauli_x();
            ops[x] = {sx * pm.minus * sx, sx * pm.plus * sx};
        }
    }
    return ops;
}

QuantumStrategy ideal_tchsh(double alpha, bool flipped) {
    const double c = 1.0 / std::sqrt(1.0 + alpha * alpha);
    Vec amps = Vec::Zero(4);
    if (!flipped) {
        amps(0) = c;
        amps(3) = c * alpha;
    } else {
        amps(0) = c * alpha;
        amps(3) = c;
    }
    const auto a_ops = tchsh_qubit_ops(alpha, flipped, true);
    const auto b_ops = tchsh_qubit_ops(alpha, flipped, false);
    QuantumStrategy s;
    s.dim_a = s.dim_b = 2;
    s.state = make_state({2, 2}, std::move(amps));
    s.meas_a = {{a_ops[0][0], a_ops[0][1]}, {a_ops[1][0], a_ops[1][1]}};
    s.meas_b = {{b_ops[0][0], b_ops[0][1]}, {b_ops[1][0], b_ops[1][1]}};
    return s;
}

QuantumStrategy ideal_three_chsh() {
    const PlusMinus sx = reflection_projectors(pauli_x());
    const TiltedPaulis t1 = tilted_paulis(TiltedParams::from_alpha(1.0));
    const PlusMinus tz = reflection_projectors(t1.tz);
    const PlusMinus tx = reflection_projectors(t1.tx);

    QuantumStrategy s;
    s.dim_a = s.dim_b = 3;
    Vec amps = Vec::Zero(9);
    for (int i = 0; i < 3; ++i) amps(i * 3 + i) = 1.0 / std::sqrt(3.0);
    s.state = make_state({3, 3}, std::move(amps));

    s.meas_a = {
        {ket_proj(3, 0), ket_proj(3, 1), ket_proj(3, 2)},
        {qubit_block(sx.plus), qubit_block(sx.minus), ket_proj(3, 2)},
        {ket_proj(3, 0), embed_v(sx.plus), embed_v(sx.minus)},
    };
    s.meas_b = {
        {qubit_block(tz.plus), qubit_block(tz.minus), ket_proj(3, 2)},
        {qubit_block(tx.plus), qubit_block(tx.minus), ket_proj(3, 2)},
        {ket_proj(3, 0), embed_v(tz.plus), embed_v(tz.minus)},
        {ket_proj(3, 0), embed_v(tx.plus), embed_v(tx.minus)},
    };
    return s;
}

QuantumStrategy ideal_emb(int d) {
    if (d < 1) throw ValidationError("embezzler index d must be >= 1");
    if (d > kDenseEmbezzlerCap) throw CapError("ideal_emb dense cap is d <= 10");
    const Eigen::Index half = Eigen::Index(1) << d;
    const Eigen::Index local = 3 * half;
    const StateVector gamma = gamma_dense(d);

    // (1/sqrt(3)) sum_i |ii> on the qutrits, Gamma_d on the primes, laid out
    // as (A-tilde, A') (x) (B-tilde, B').
    Vec amps = Vec::Zero(local * local);
    const double w = 1.0 / std::sqrt(3.0);
    for (int i = 0; i < 3; ++i)
        for (Eigen::Index ap = 0; ap < half; ++ap)
            for (Eigen::Index bp = 0; bp < half; ++bp)
                amps((i * half + ap) * local + i * half + bp) = w * gamma.amps(ap * half + bp);

    const QuantumStrategy qutrit = ideal_three_chsh();
    const Mat wt = embedded_shift(d);
    const Mat id_half = Mat::Identity(half, half);
    const Mat id_local = Mat::Identity(local, local);

    auto lift = [&](const Mat& qutrit_op) { return tensor(qutrit_op, id_half); };
    auto conj_shift = [&](const Mat& qubit_op) {
        return Mat(wt.adjoint() * lift(qubit_block(qubit_op)) * wt);
    };
    auto tchsh_row = [&](const std::array<Mat, 2>& ops) {
        std::vector<Mat> row{conj_shift(ops[0]), conj_shift(ops[1])};
        row.push_back(id_local - row[0] - row[1]);  // P_rest
        return row;
    };

    // Alice plays the second tilted-CHSH player, Bob the first (the roles are
    // switched in part (b) of the composed game).
    const auto alice_tchsh = tchsh_qubit_ops(1.0 / std::sqrt(2.0), true, false);
    const auto bob_tchsh = tchsh_qubit_ops(1.0 / std::sqrt(2.0), true, true);

    QuantumStrategy s;
    s.dim_a = s.dim_b = local;
    s.state = make_state({local, local}, std::move(amps));
    for (const auto& row : qutrit.meas_a)
        s.meas_a.push_back({lift(row[0]), lift(row[1]), lift(row[2])});
    s.meas_a.push_back(tchsh_row(alice_tchsh[0]));
    s.meas_a.push_back(tchsh_row(alice_tchsh[1]));
    for (const auto& row : qutrit.meas_b)
        s.meas_b.push_back({lift(row[0]), lift(row[1]), lift(row[2])});
    s.meas_b.push_back(tchsh_row(bob_tchsh[0]));
    s.meas_b.push_back(tchsh_row(bob_tchsh[1]));
    return s;
}

StrategyDiagnostics validate_strategy(const QuantumStrategy& s) {
    StrategyDiagnostics diag;
    diag.norm_defect = std::abs(s.state.norm() - 1.0);
    auto scan = [&](const std::vector<std::vector<Mat>>& meas, Eigen::Index dim) {
        for (const auto& row : meas) {
            Mat sum = Mat::Zero(dim, dim);
            for (const Mat& p : row) {
                sum += p;
                diag.hermiticity_defect =
                    std::max(diag.hermiticity_defect, (p - p.adjoint()).cwiseAbs().maxCoeff());
                diag.idempotence_defect =
                    std::max(diag.idempotence_defect, (p * p - p).cwiseAbs().maxCoeff());
            }
            sum.diagonal().array() -= 1.0;
            diag.completeness_defect = std::max(diag.completeness_defect, sum.cwiseAbs().maxCoeff());
        }
    };
    scan(s.meas_a, s.dim_a);
    scan(s.meas_b, s.dim_b);
    return diag;
}

}  // namespace bellforge
