#include "bellforge/embezzle.hpp"

#include <cmath>

namespace bellforge {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621;

void check_dense_cap(int d) {
    if (d < 1) throw ValidationError("embezzler index d must be >= 1");
    if (d > kDenseEmbezzlerCap) throw CapError("dense embezzler cap is d <= 10");
}

// Sum of terms |11>^{j} |EPR>^{(d-j)} over j in [j_lo, j_hi], normalized by
// the shared constant sqrt(N_d).
StateVector gamma_sum(int d, int j_lo, int j_hi) {
    const Eigen::Index half = Eigen::Index(1) << d;
    Vec amps = Vec::Zero(half * half);
    for (int j = j_lo; j <= j_hi; ++j) {
        // A' bits x_1..x_d, B' bits y_1..y_d; the first j pairs are |11>, the
        // remaining d-j pairs are EPR halves: x_k = y_k with weight 2^{-1/2}.
        const double w = std::pow(kInvSqrt2, double(d - j));
        const Eigen::Index ones = (half - 1) ^ ((Eigen::Index(1) << (d - j)) - 1);
        for (Eigen::Index m = 0; m < (Eigen::Index(1) << (d - j)); ++m) {
            const Eigen::Index bits = ones | m;
            amps(bits * half + bits) += w;
        }
    }
    amps /= std::sqrt(gram_summary(d).n_d);
    return make_state({half, half}, std::move(amps));
}

}  // namespace

StateVector gamma_dense(int d) {
    check_dense_cap(d);
    return gamma_sum(d, 1, d);
}

StateVector gamma_shifted_dense(int d) {
    check_dense_cap(d);
    return gamma_sum(d, 0, d - 1);
}

Mat shift_unitary(int d, bool corrected) {
    check_dense_cap(d);
    const Eigen::Index n = Eigen::Index(1) << (d + 1);
    Mat w = Mat::Zero(n, n);
    for (Eigen::Index in = 0; in < n; ++in) {
        // register 0 most significant; left shift moves register k+1 to k and
        // register 0 to the end.
        const Eigen::Index top = (in >> d) & 1;
        Eigen::Index out = ((in << 1) & (n - 1)) | top;
        if (corrected) out ^= Eigen::Index(1) << d;  // flip the new register 0
        w(out, in) = 1.0;
    }
    return w;
}

Mat embedded_shift(int d) {
    check_dense_cap(d);
    const Eigen::Index half = Eigen::Index(1) << d;
    const Mat w = shift_unitary(d, true);
    Mat out = Mat::Zero(3 * half, 3 * half);
    out.block(0, 0, half, half) = Mat::Identity(half, half);
    // qutrit levels {1,2} carry the qubit through V; W acts on (qubit, A').
    out.block(half, half, 2 * half, 2 * half) = w;
    return out;
}

EmbezzlerGram gram_summary(std::int64_t d) {
    if (d < 1) throw ValidationError("embezzler index d must be >= 1");
    // N_d = d + 2 sum_{m=1..d-1} (d-m) r^m with r = 2^{-1/2}; the cross sum
    // S_d = sum_{k=1..d, j=0..d-1} r^{|k-j|} grouped by t = k-j. Both are
    // plain running sums in ascending power order, all terms positive.
    const double r = kInvSqrt2;
    double n = double(d);
    double rm = 1.0;
    for (std::int64_t m = 1; m < d; ++m) {
        rm *= r;
        n += 2.0 * double(d - m) * rm;
    }
    double s = 0.0;
    rm = 1.0;
    for (std::int64_t t = 0; t < d; ++t) {  // t = k-j >= 0, power t+1
        rm *= r;
        s += double(d - t) * rm;
    }
    rm = 1.0;
    for (std::int64_t t = 1; t < d; ++t) {  // t = j-k >= 1, power t-1
        s += double(d - t) * rm;
        rm *= r;
    }
    // 1 - x_d = (1 - r^d)/N_d exactly; using it keeps the deviation accurate
    // when x_d is within 1e-7 of 1.
    const double one_minus_x = (1.0 - std::pow(r, double(d))) / n;
    EmbezzlerGram g;
    g.d = d;
    g.n_d = n;
    g.x_d = s / n;
    g.deviation = std::sqrt(2.0 * one_minus_x);
    return g;
}

}  // namespace bellforge
