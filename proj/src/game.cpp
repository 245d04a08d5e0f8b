#include "bellforge/game.hpp"

#include <cmath>
#include <limits>

namespace bellforge {

namespace {

constexpr double kDistTol = 1e-9;
constexpr double kEnumerationCap = 1e7;

// Per-question-pair expectations <Psi| P (x) Q |Psi> via the reshaped state:
// with M the dim_a x dim_b amplitude matrix, the expectation is the Frobenius
// inner product of P M and M Q^T. The right-hand products are streamed one at
// a time so the dense d = 10 strategies stay within memory.
struct PairExpectations {
    int nx, ny, na, nb;
    std::vector<double> table;

    double at(int x, int y, int a, int b) const {
        return table[((size_t(x) * ny + y) * na + a) * nb + b];
    }
};

PairExpectations precompute(const QuantumStrategy& s) {
    Eigen::Map<const Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        m_row(s.state.amps.data(), s.dim_a, s.dim_b);
    const Mat m = m_row;
    PairExpectations pe;
    pe.nx = int(s.meas_a.size());
    pe.ny = int(s.meas_b.size());
    pe.na = pe.nx ? int(s.meas_a.front().size()) : 0;
    pe.nb = pe.ny ? int(s.meas_b.front().size()) : 0;
    pe.table.assign(size_t(pe.nx) * pe.ny * pe.na * pe.nb, 0.0);

    std::vector<std::vector<Mat>> left;  // [x][a] = P M
    left.reserve(s.meas_a.size());
    for (const auto& row : s.meas_a) {
        std::vector<Mat> l;
        l.reserve(row.size());
        for (const Mat& p : row) l.emplace_back(p * m);
        left.push_back(std::move(l));
    }
    Mat right;
    for (int y = 0; y < pe.ny; ++y)
        for (int b = 0; b < pe.nb; ++b) {
            right.noalias() = m * s.meas_b[size_t(y)][size_t(b)].transpose();
            for (int x = 0; x < pe.nx; ++x)
                for (int a = 0; a < pe.na; ++a)
                    pe.table[((size_t(x) * pe.ny + y) * pe.na + a) * pe.nb + b] =
                        (left[size_t(x)][size_t(a)].conjugate().cwiseProduct(right))
                            .sum()
                            .real();
        }
    return pe;
}

void check_shapes(const NonlocalGame& g, const QuantumStrategy& s) {
    if (int(s.meas_a.size()) != g.nx || int(s.meas_b.size()) != g.ny)
        throw ShapeError("strategy question count does not match game");
    for (const auto& row : s.meas_a)
        if (int(row.size()) != g.na) throw ShapeError("strategy A answer count does not match game");
    for (const auto& row : s.meas_b)
        if (int(row.size()) != g.nb) throw ShapeError("strategy B answer count does not match game");
}

}  // namespace

void NonlocalGame::validate() const {
    if (nx <= 0 || ny <= 0 || na <= 0 || nb <= 0)
        throw ValidationError("game '" + name + "': question/answer counts must be positive");
    if (dist.size() != size_t(nx) * ny)
        throw ValidationError("game '" + name + "': dist length must be nx*ny");
    if (score.size() != size_t(nx) * ny * na * nb)
        throw ValidationError("game '" + name + "': score length must be nx*ny*na*nb");
    double sum = 0.0;
    for (double p : dist) {
        if (p < 0.0) throw ValidationError("game '" + name + "': negative question probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kDistTol)
        throw ValidationError("game '" + name + "': question distribution does not sum to 1");
}

int EmbQuestionMap::part_of(int x, int y) const {
    const Question& qa = alice[size_t(x)];
    const Question& qb = bob[size_t(y)];
    if (!qa.tchsh && !qb.tchsh) return kPartA;
    if (qa.tchsh && qb.tchsh) return kPartB;
    if (!qa.tchsh && qa.inner == 0 && qb.tchsh && qb.inner == 0) return kPartC;
    return kUnplayed;
}

NonlocalGame build_tchsh(double alpha, bool flipped) {
    const TiltedParams p = TiltedParams::from_alpha(alpha);
    NonlocalGame g;
    g.name = flipped ? "~tCHSH" : "tCHSH";
    g.nx = g.ny = g.na = g.nb = 2;
    g.dist.assign(4, 0.25);
    g.score.assign(16, 0.0);
    const double marginal_sign = flipped ? -1.0 : 1.0;
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    double v = ((a ^ b) == (x & y)) ? 1.0 : -1.0;
                    if (x == 0 && y == 0) v += marginal_sign * p.beta * (a == 0 ? 1.0 : -1.0);
                    g.score_at(x, y, a, b) = v;
                }
    return g;
}

void validate_three_chsh(const NonlocalGame& g) {
    g.validate();
    if (g.nx != 3 || g.ny != 4 || g.na != 3 || g.nb != 3)
        throw ValidationError("3-CHSH game must have 3x4 questions and 3x3 answers");
    for (double p : g.dist)
        if (std::abs(p - 1.0 / 12.0) > kDistTol)
            throw ValidationError("3-CHSH question distribution must be uniform");
}

EmbGame build_emb(const NonlocalGame& three_chsh) {
    validate_three_chsh(three_chsh);
    const NonlocalGame tch = build_tchsh(1.0 / std::sqrt(2.0), true);
    const double worst_tchsh = -1.0 - TiltedParams::from_alpha(1.0 / std::sqrt(2.0)).beta;

    EmbGame eg;
    NonlocalGame& g = eg.game;
    g.name = "G_emb";
    g.nx = 5;
    g.ny = 6;
    g.na = g.nb = 3;
    g.dist.assign(size_t(g.nx) * g.ny, 0.0);
    g.score.assign(size_t(g.nx) * g.ny * g.na * g.nb, 0.0);

    EmbQuestionMap& map = eg.map;
    for (int x = 0; x < 5; ++x) map.alice.push_back({x >= 3, x >= 3 ? x - 3 : x});
    for (int y = 0; y < 6; ++y) map.bob.push_back({y >= 4, y >= 4 ? y - 4 : y});

    for (int x = 0; x < g.nx; ++x) {
        for (int y = 0; y < g.ny; ++y) {
            const auto& qa = map.alice[size_t(x)];
            const auto& qb = map.bob[size_t(y)];
            switch (map.part_of(x, y)) {
                case EmbQuestionMap::kPartA:
                    g.dist_at(x, y) = 1.0 / 36.0;
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b)
                            g.score_at(x, y, a, b) = three_chsh.score_at(qa.inner, qb.inner, a, b);
                    break;
                case EmbQuestionMap::kPartB:
                    g.dist_at(x, y) = 1.0 / 12.0;
                    // roles switched: Bob's answer and question fill the first
                    // player's slots of ~tCHSH(1/sqrt2); answer 2 gets the
                    // worst tCHSH score.
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b)
                            g.score_at(x, y, a, b) =
                                (a < 2 && b < 2) ? tch.score_at(qb.inner, qa.inner, b, a)
                                                 : worst_tchsh;
                    break;
                case EmbQuestionMap::kPartC:
                    g.dist_at(x, y) = 1.0 / 3.0;
                    for (int a = 0; a < 3; ++a)
                        for (int b = 0; b < 3; ++b) {
                            const bool win = (a == 0 && b == 0) || (a != 0 && b != 0);
                            g.score_at(x, y, a, b) = win ? 1.0 : 0.0;
                        }
                    break;
                default:
                    break;
            }
        }
    }
    map.pair_prob = g.dist;
    g.validate();
    return eg;
}

double strategy_value(const NonlocalGame& g, const QuantumStrategy& s) {
    check_shapes(g, s);
    const PairExpectations pe = precompute(s);
    double value = 0.0;
    for (int x = 0; x < g.nx; ++x)
        for (int y = 0; y < g.ny; ++y) {
            const double d = g.dist_at(x, y);
            if (d == 0.0) continue;
            for (int a = 0; a < g.na; ++a)
                for (int b = 0; b < g.nb; ++b) {
                    const double v = g.score_at(x, y, a, b);
                    if (v == 0.0) continue;
                    value += d * v * pe.at(x, y, a, b);
                }
        }
    return value;
}

Correlation correlation_of_strategy(const QuantumStrategy& s, int nx, int ny) {
    if (int(s.meas_a.size()) != nx || int(s.meas_b.size()) != ny)
        throw ShapeError("strategy question count does not match requested correlation shape");
    const int na = int(s.meas_a.empty() ? 0 : s.meas_a.front().size());
    const int nb = int(s.meas_b.empty() ? 0 : s.meas_b.front().size());
    const PairExpectations pe = precompute(s);
    Correlation c;
    c.nx = nx;
    c.ny = ny;
    c.na = na;
    c.nb = nb;
    c.p.assign(size_t(nx) * ny * na * nb, 0.0);
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < ny; ++y)
            for (int a = 0; a < na; ++a)
                for (int b = 0; b < nb; ++b) c.at(x, y, a, b) = pe.at(x, y, a, b);
    return c;
}

double correlation_value(const NonlocalGame& g, const Correlation& c) {
    if (c.nx != g.nx || c.ny != g.ny || c.na != g.na || c.nb != g.nb)
        throw ShapeError("correlation shape does not match game");
    double value = 0.0;
    for (int x = 0; x < g.nx; ++x)
        for (int y = 0; y < g.ny; ++y) {
            const double d = g.dist_at(x, y);
            if (d == 0.0) continue;
            for (int a = 0; a < g.na; ++a)
                for (int b = 0; b < g.nb; ++b)
                    value += d * g.score_at(x, y, a, b) * c.at(x, y, a, b);
        }
    return value;
}

double classical_value(const NonlocalGame& g) {
    g.validate();
    const double pairs = std::pow(double(g.na), g.nx) * std::pow(double(g.nb), g.ny);
    if (pairs > kEnumerationCap)
        throw CapError("deterministic enumeration above the 10^7 pair cap");

    std::vector<int> fa(size_t(g.nx), 0), fb(size_t(g.ny), 0);
    auto advance = [](std::vector<int>& f, int base) {
        for (size_t i = 0; i < f.size(); ++i) {
            if (++f[i] < base) return true;
            f[i] = 0;
        }
        return false;
    };
    double best = -std::numeric_limits<double>::infinity();
    do {
        std::fill(fb.begin(), fb.end(), 0);
        do {
            double v = 0.0;
            for (int x = 0; x < g.nx; ++x)
                for (int y = 0; y < g.ny; ++y)
                    v += g.dist_at(x, y) * g.score_at(x, y, fa[size_t(x)], fb[size_t(y)]);
            if (v > best) best = v;
        } while (advance(fb, g.nb));
    } while (advance(fa, g.na));
    return best;
}

double correlation_distance(const Correlation& p, const Correlation& q) {
    if (p.nx != q.nx || p.ny != q.ny || p.na != q.na || p.nb != q.nb)
        throw ShapeError("correlation shapes do not match");
    double m = 0.0;
    for (size_t i = 0; i < p.p.size(); ++i) m = std::max(m, std::abs(p.p[i] - q.p[i]));
    return m;
}

double part_value(const EmbGame& eg, const QuantumStrategy& s, int part) {
    check_shapes(eg.game, s);
    const PairExpectations pe = precompute(s);
    double value = 0.0;
    double prob = 0.0;
    for (int x = 0; x < eg.game.nx; ++x)
        for (int y = 0; y < eg.game.ny; ++y) {
            if (eg.map.part_of(x, y) != part) continue;
            const double d = eg.game.dist_at(x, y);
            prob += d;
            for (int a = 0; a < eg.game.na; ++a)
                for (int b = 0; b < eg.game.nb; ++b) {
                    const double v = eg.game.score_at(x, y, a, b);
                    if (v == 0.0) continue;
                    value += d * v * pe.at(x, y, a, b);
                }
        }
    if (prob <= 0.0) throw ValidationError("part has no question pairs");
    return value / prob;
}

}  // namespace bellforge
