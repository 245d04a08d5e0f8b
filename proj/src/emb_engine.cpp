#include "bellforge/emb_engine.hpp"

#include <algorithm>
#include <cmath>

namespace bellforge {

namespace {

// <phi| M (x) N |phi> for phi = (1/sqrt3)|00> Gamma + (sqrt2/sqrt3)|11> gamma',
// expressed through the 2x2 qutrit blocks of M and N and the overlap x.
double two_term_expectation(const Mat& m, const Mat& n, double x) {
    const double m00 = m(0, 0).real(), m11 = m(1, 1).real(), m01 = m(0, 1).real();
    const double n00 = n(0, 0).real(), n11 = n(1, 1).real(), n01 = n(0, 1).real();
    return m00 * n00 / 3.0 + 2.0 * m11 * n11 / 3.0 +
           2.0 * std::sqrt(2.0) / 3.0 * x * m01 * n01;
}

struct PartBData {
    NonlocalGame tch;                     // ~tCHSH(1/sqrt2) scoring
    std::array<std::array<Mat, 2>, 2> alice;  // second player, flipped
    std::array<std::array<Mat, 2>, 2> bob;    // first player, flipped
};

const PartBData& part_b_data() {
    static const PartBData data{
        build_tchsh(1.0 / std::sqrt(2.0), true),
        tchsh_qubit_ops(1.0 / std::sqrt(2.0), true, false),
        tchsh_qubit_ops(1.0 / std::sqrt(2.0), true, true),
    };
    return data;
}

}  // namespace

PartBForm part_b_form() {
    const PartBData& pb = part_b_data();
    PartBForm form{0.0, 0.0};
    for (int xq = 0; xq < 2; ++xq)
        for (int yq = 0; yq < 2; ++yq)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    // roles switched: Bob is the first tCHSH player.
                    const double v = pb.tch.score_at(yq, xq, b, a) / 4.0;
                    const Mat& m = pb.alice[size_t(xq)][size_t(a)];
                    const Mat& n = pb.bob[size_t(yq)][size_t(b)];
                    form.constant += v * two_term_expectation(m, n, 0.0);
                    form.slope += v * (two_term_expectation(m, n, 1.0) -
                                       two_term_expectation(m, n, 0.0));
                }
    return form;
}

double part_b_value_structured(std::int64_t d) {
    return part_b_form().at(gram_summary(d).x_d);
}

double three_chsh_ideal_value() {
    static const double value = strategy_value(builtin_three_chsh(), ideal_three_chsh());
    return value;
}

double emb_value(std::int64_t d) {
    return (three_chsh_ideal_value() + part_b_value_structured(d) + 1.0) / 3.0;
}

double emb_limit_value() {
    return (three_chsh_ideal_value() + part_b_form().at(1.0) + 1.0) / 3.0;
}

Correlation limit_correlation() {
    const EmbGame eg = build_emb(builtin_three_chsh());
    const QuantumStrategy qutrit = ideal_three_chsh();
    const PartBData& pb = part_b_data();
    const double third = 1.0 / 3.0;

    Correlation c;
    c.nx = eg.game.nx;
    c.ny = eg.game.ny;
    c.na = eg.game.na;
    c.nb = eg.game.nb;
    c.p.assign(size_t(c.nx) * c.ny * c.na * c.nb, 0.0);

    const Correlation qc = correlation_of_strategy(qutrit, 3, 4);
    for (int x = 0; x < c.nx; ++x) {
        const auto& qa = eg.map.alice[size_t(x)];
        for (int y = 0; y < c.ny; ++y) {
            const auto& qb = eg.map.bob[size_t(y)];
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    double p = 0.0;
                    if (!qa.tchsh && !qb.tchsh) {
                        // both 3-CHSH: measurements touch only the qutrits.
                        p = qc.at(qa.inner, qb.inner, a, b);
                    } else if (qa.tchsh && qb.tchsh) {
                        // both tCHSH: affine form at x = 1; answer 2 vanishes.
                        if (a < 2 && b < 2)
                            p = two_term_expectation(pb.alice[size_t(qa.inner)][size_t(a)],
                                                     pb.bob[size_t(qb.inner)][size_t(b)], 1.0);
                    } else if (!qa.tchsh) {
                        // Alice 3-CHSH, Bob shifted tCHSH: the one-sided shift
                        // leaves only the diagonal blocks, so
                        //   p = (P_00 n_00 + (P_11 + P_22) n_11)/3,
                        // which does not depend on d.
                        if (b < 2) {
                            const Mat& pm = qutrit.meas_a[size_t(qa.inner)][size_t(a)];
                            const Mat& n = pb.bob[size_t(qb.inner)][size_t(b)];
                            p = third * (pm(0, 0).real() * n(0, 0).real() +
                                         (pm(1, 1).real() + pm(2, 2).real()) * n(1, 1).real());
                        }
                    } else {
                        // Alice shifted tCHSH, Bob 3-CHSH: mirror case.
                        if (a < 2) {
                            const Mat& m = pb.alice[size_t(qa.inner)][size_t(a)];
                            const Mat& qm = qutrit.meas_b[size_t(qb.inner)][size_t(b)];
                            p = third * (m(0, 0).real() * qm(0, 0).real() +
                                         m(1, 1).real() * (qm(1, 1).real() + qm(2, 2).real()));
                        }
                    }
                    c.at(x, y, a, b) = p;
                }
            }
        }
    }
    return c;
}

std::vector<CurveRow> curve_rows(const std::vector<std::int64_t>& ds) {
    std::vector<std::int64_t> sorted = ds;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const PartBForm form = part_b_form();
    const double chsh3 = three_chsh_ideal_value();
    const double limit = emb_limit_value();
    std::vector<CurveRow> rows;
    rows.reserve(sorted.size());
    for (std::int64_t d : sorted) {
        const EmbezzlerGram g = gram_summary(d);
        CurveRow row;
        row.d = d;
        row.n_d = g.n_d;
        row.x_d = g.x_d;
        row.deviation = g.deviation;
        row.part_b = form.at(g.x_d);
        row.emb_value = (chsh3 + row.part_b + 1.0) / 3.0;
        row.epsilon = limit - row.emb_value;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace bellforge
