#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bellforge/embezzle.hpp"

using namespace bellforge;

namespace {

// Dense overlap <Gamma_d|gamma'_d>: the independent check for the O(d) sums.
double dense_overlap(int d) {
    const StateVector g = gamma_dense(d);
    const StateVector gs = gamma_shifted_dense(d);
    return (g.amps.adjoint() * gs.amps)(0).real();
}

}  // namespace

TEST_CASE("gamma_dense smallest members") {
    const StateVector g1 = gamma_dense(1);
    REQUIRE(g1.amps.size() == 4);
    CHECK(std::abs(g1.amps(3) - cdouble(1.0)) < 1e-15);  // |11> on (A'1, B'1)
    CHECK(g1.amps.cwiseAbs().sum() == doctest::Approx(1.0).epsilon(1e-12));

    // d = 2: N_2 = 2 + sqrt(2); term j=2 is |11,11>, term j=1 spreads an EPR
    // pair over the second register pair.
    const StateVector g2 = gamma_dense(2);
    REQUIRE(g2.amps.size() == 16);
    const double n2 = 2.0 + std::sqrt(2.0);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(g2.amps(2 * 4 + 2) - cdouble(r / std::sqrt(n2))) < 1e-14);       // |10,10>
    CHECK(std::abs(g2.amps(3 * 4 + 3) - cdouble((1.0 + r) / std::sqrt(n2))) < 1e-14);  // |11,11>
    CHECK(std::abs(g2.amps(3 * 4 + 2)) == 0.0);

    for (int d = 1; d <= 8; ++d) CHECK(std::abs(gamma_dense(d).norm() - 1.0) < 1e-12);

    CHECK_THROWS_AS(gamma_dense(11), CapError);
    CHECK_THROWS_AS(gamma_dense(0), ValidationError);
}

TEST_CASE("shift unitary permutes registers") {
    const Mat w = shift_unitary(1, false);
    // |x0 x1> -> |x1 x0>
    for (int x0 = 0; x0 < 2; ++x0)
        for (int x1 = 0; x1 < 2; ++x1) {
            const int in = x0 * 2 + x1;
            const int out = x1 * 2 + x0;
            CHECK(w(out, in) == cdouble(1.0));
        }
    CHECK(is_unitary(w, 0.0));

    // corrected variant flips the new register 0
    const Mat wc = shift_unitary(3, true);
    const Mat flip = tensor(pauli_x(), Mat::Identity(8, 8));
    CHECK((wc - flip * shift_unitary(3, false)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("uncorrected shift embezzles EPR into |11>") {
    // joint registers (A, A', B, B'), shift applied per side
    const int d = 1;
    const StateVector gamma = gamma_dense(d);
    const double r = 1.0 / std::sqrt(2.0);
    Vec psi = Vec::Zero(16);
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < 2; ++b)
                for (int bp = 0; bp < 2; ++bp)
                    psi(((a * 2 + ap) * 2 + b) * 2 + bp) =
                        (a == b ? r : 0.0) * gamma.amps(ap * 2 + bp);
    const Mat w = shift_unitary(d, false);
    apply_on_factor(psi, w, 1, 4);  // (A, A') block
    apply_on_factor(psi, w, 4, 1);  // (B, B') block
    // expect |1>_A |1>_B (x) EPR_{A'B'}
    Vec expect = Vec::Zero(16);
    expect(((1 * 2 + 0) * 2 + 1) * 2 + 0) = r;
    expect(((1 * 2 + 1) * 2 + 1) * 2 + 1) = r;
    CHECK((psi - expect).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("gram summary closed values") {
    const EmbezzlerGram g1 = gram_summary(1);
    CHECK(g1.n_d == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(g1.x_d - 1.0 / std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(g1.deviation - std::sqrt(2.0 - std::sqrt(2.0))) < 1e-14);

    const EmbezzlerGram g2 = gram_summary(2);
    CHECK(std::abs(g2.n_d - (2.0 + std::sqrt(2.0))) < 1e-14);
    CHECK(std::abs(g2.x_d - (1.5 + std::sqrt(2.0)) / (2.0 + std::sqrt(2.0))) < 1e-14);

    CHECK_THROWS_AS(gram_summary(0), ValidationError);
}

TEST_CASE("gram summary matches dense overlaps") {
    for (int d = 1; d <= 6; ++d) {
        const EmbezzlerGram g = gram_summary(d);
        CHECK(std::abs(g.x_d - dense_overlap(d)) < 1e-12);
        CHECK(std::abs(gamma_shifted_dense(d).norm() - 1.0) < 1e-12);
        CHECK(std::abs(g.deviation - std::sqrt(2.0 - 2.0 * dense_overlap(d))) < 1e-10);
    }
}

TEST_CASE("shifted companion has the same normalizer") {
    const double r = 1.0 / std::sqrt(2.0);
    for (std::int64_t d : {2, 17, 400, 10000}) {
        // independent double loop over the shifted index range
        double n_shifted = 0.0;
        for (std::int64_t j = 0; j < d; ++j)
            for (std::int64_t k = 0; k < d; ++k)
                n_shifted += std::pow(r, double(std::llabs(j - k)));
        const EmbezzlerGram g = gram_summary(d);
        // both sides are O(d^2)-rounded sums; agreement well below 1e-11
        CHECK(std::abs(n_shifted - g.n_d) / g.n_d < 1e-11);
    }
}

TEST_CASE("overlap grows and deviation shrinks") {
    double prev_x = 0.0, prev_dev = 2.0;
    for (int d = 1; d <= 200; ++d) {
        const EmbezzlerGram g = gram_summary(d);
        CHECK(g.x_d > prev_x);
        CHECK(g.deviation < prev_dev);
        CHECK(g.n_d >= double(d));
        prev_x = g.x_d;
        prev_dev = g.deviation;
    }
    for (std::int64_t d = 256; d <= (1 << 20); d *= 2) {
        const EmbezzlerGram g = gram_summary(d);
        CHECK(g.x_d > prev_x);
        CHECK(g.deviation < prev_dev);
        prev_x = g.x_d;
        prev_dev = g.deviation;
    }
    // d = 10^6 still comes out monotone against the largest dyadic point
    CHECK(gram_summary(1000000).deviation < gram_summary(1 << 19).deviation);
}

TEST_CASE("deviation rate stays O(1/sqrt(d))") {
    double prev = 1e300;
    for (std::int64_t d = 16; d <= (1 << 20); d *= 2) {
        const EmbezzlerGram g = gram_summary(d);
        const double scaled = double(d) * g.deviation * g.deviation;
        CHECK(scaled < 0.5);
        CHECK(scaled <= prev + 1e-12);
        prev = scaled;
    }
}

TEST_CASE("embedded shift is unitary and fixes level 0") {
    for (int d = 1; d <= 4; ++d) {
        const Mat wt = embedded_shift(d);
        CHECK(is_unitary(wt, 1e-12));
        const Eigen::Index half = Eigen::Index(1) << d;
        CHECK((wt.block(0, 0, half, half) - Mat::Identity(half, half)).cwiseAbs().maxCoeff() ==
              0.0);
        CHECK(wt.block(half, 0, 2 * half, half).cwiseAbs().maxCoeff() == 0.0);
    }
}
