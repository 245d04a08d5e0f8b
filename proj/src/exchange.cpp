#include "bellforge/exchange.hpp"

#include <cmath>

namespace bellforge {

namespace {

// Register layout of the joint exchange state, most significant first:
//   R(2), S(3), A'(2^d), F_A(2), T(3), B'(2^d), F_B(2).
struct Layout {
    Eigen::Index half;   // 2^d
    Eigen::Index side;   // 3 * 2^d * 2
    Eigen::Index total;  // 2 * side * side

    explicit Layout(int d)
        : half(Eigen::Index(1) << d), side(6 * half), total(2 * side * side) {}

    Eigen::Index index(Eigen::Index r, Eigen::Index s, Eigen::Index ap, Eigen::Index fa,
                       Eigen::Index t, Eigen::Index bp, Eigen::Index fb) const {
        Eigen::Index i = r * 3 + s;
        i = (i * half + ap) * 2 + fa;
        i = (i * 3 + t) * half + bp;
        return i * 2 + fb;
    }
};

Vec joint_initial_state(const ExchangeStrategy& strat, const ExchangeInstance& inst) {
    const Layout lay(strat.d);
    Vec psi = Vec::Zero(lay.total);
    for (Eigen::Index r = 0; r < 2; ++r)
        for (Eigen::Index s = 0; s < 3; ++s)
            for (Eigen::Index t = 0; t < 3; ++t) {
                const cdouble ref = inst.referee_state.amps((r * 3 + s) * 3 + t);
                if (ref == cdouble(0.0, 0.0)) continue;
                for (Eigen::Index ap = 0; ap < lay.half; ++ap)
                    for (Eigen::Index bp = 0; bp < lay.half; ++bp) {
                        const cdouble g = strat.aux.amps(ap * lay.half + bp);
                        if (g == cdouble(0.0, 0.0)) continue;
                        psi(lay.index(r, s, ap, 0, t, bp, 0)) = ref * g;
                    }
            }
    return psi;
}

Vec after_provers(const ExchangeStrategy& strat, const ExchangeInstance& inst) {
    const Layout lay(strat.d);
    Vec psi = joint_initial_state(strat, inst);
    // u_a on (S, A', F_A); u_b on (T, B', F_B); both contiguous.
    apply_on_factor(psi, strat.u_a, 2, lay.side);
    apply_on_factor(psi, strat.u_b, 2 * lay.side, 1);
    return psi;
}

}  // namespace

ExchangeInstance ExchangeInstance::make(std::pair<int, int> levels) {
    if (levels.first < 0 || levels.first > 2 || levels.second < 0 || levels.second > 2 ||
        levels.first == levels.second)
        throw ValidationError("phi+ levels must be two distinct qutrit levels");
    ExchangeInstance inst;
    inst.phi_plus_levels = levels;
    Vec amps = Vec::Zero(2 * 3 * 3);
    const double r2 = 1.0 / std::sqrt(2.0);
    amps(0) = r2;  // |0>_R |00>_ST
    amps((1 * 3 + levels.first) * 3 + levels.first) = r2 * r2;
    amps((1 * 3 + levels.second) * 3 + levels.second) = r2 * r2;
    inst.referee_state = make_state({2, 3, 3}, std::move(amps));
    return inst;
}

double ExchangeInstance::branch_overlap() const {
    // <00|phi+> = 1/sqrt2 when level 0 carries a phi+ branch, else 0.
    return (phi_plus_levels.first == 0 || phi_plus_levels.second == 0)
               ? 1.0 / std::sqrt(2.0)
               : 0.0;
}

ExchangeStrategy build_exchange_strategy(int d) {
    if (d < 1) throw ValidationError("embezzler index d must be >= 1");
    if (d > kExchangeDenseCap) throw CapError("exchange dense cap is d <= 8");
    const Eigen::Index half = Eigen::Index(1) << d;
    const Eigen::Index side = 6 * half;

    // Relabeling permutation on (S, F): level 2 moves to (0, flag=1).
    auto relabel = [](Eigen::Index s, Eigen::Index f) -> std::pair<Eigen::Index, Eigen::Index> {
        if (f == 0 && s == 2) return {0, 1};
        if (f == 1 && s == 0) return {2, 0};
        return {s, f};
    };

    const Mat wt = embedded_shift(d);
    Mat u = Mat::Zero(side, side);
    // u = (relabel on (S,F)) o (W-tilde on (S,A') (x) I_F); rows of the shift
    // matrix are permuted in place of a matrix product.
    for (Eigen::Index s = 0; s < 3; ++s)
        for (Eigen::Index ap = 0; ap < half; ++ap)
            for (Eigen::Index f = 0; f < 2; ++f) {
                const auto [s2, f2] = relabel(s, f);
                const Eigen::Index out_row = (s2 * half + ap) * 2 + f2;
                for (Eigen::Index s0 = 0; s0 < 3; ++s0)
                    for (Eigen::Index ap0 = 0; ap0 < half; ++ap0) {
                        const cdouble w = wt(s * half + ap, s0 * half + ap0);
                        if (w == cdouble(0.0, 0.0)) continue;
                        u(out_row, (s0 * half + ap0) * 2 + f) = w;
                    }
            }

    ExchangeStrategy strat;
    strat.d = d;
    strat.aux = gamma_dense(d);
    strat.u_a = u;
    strat.u_b = std::move(u);  // identical construction on both sides
    return strat;
}

double success_probability(const ExchangeStrategy& s, const ExchangeInstance& inst) {
    if (inst.referee_state.amps.size() != 18)
        throw ShapeError("referee state must live on R,S,T");
    const Layout lay(s.d);
    const Vec psi = after_provers(s, inst);
    // Pi_1 = |gamma><gamma| on (R, O_A, O_B) with gamma = (|000>+|111>)/sqrt2;
    // the output qubits are the S and T levels {0,1}.
    const double r2 = 1.0 / std::sqrt(2.0);
    double p = 0.0;
    for (Eigen::Index ap = 0; ap < lay.half; ++ap)
        for (Eigen::Index fa = 0; fa < 2; ++fa)
            for (Eigen::Index bp = 0; bp < lay.half; ++bp)
                for (Eigen::Index fb = 0; fb < 2; ++fb) {
                    const cdouble amp = r2 * psi(lay.index(0, 0, ap, fa, 0, bp, fb)) +
                                        r2 * psi(lay.index(1, 1, ap, fa, 1, bp, fb));
                    p += std::norm(amp);
                }
    return p;
}

double flag_excitation_probability(const ExchangeStrategy& s, const ExchangeInstance& inst) {
    const Layout lay(s.d);
    const Vec psi = after_provers(s, inst);
    double p = 0.0;
    for (Eigen::Index i = 0; i < psi.size(); ++i) {
        const Eigen::Index fb = i % 2;
        const Eigen::Index fa = (i / (2 * 3 * lay.half)) % 2;
        if (fa == 1 || fb == 1) p += std::norm(psi(i));
    }
    return p;
}

double ltw_bound(std::int64_t local_dim) {
    if (local_dim < 1) throw ValidationError("local dimension must be >= 1");
    const double l = std::log2(3.0 * double(local_dim));
    return 1.0 - 1.0 / (32.0 * l * l);
}

}  // namespace bellforge
