#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "bellforge/errors.hpp"

namespace bellforge {

using cdouble = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

// A pure state over a list of subsystems. Amplitudes are row-major with the
// first subsystem most significant; this ordering is the single convention
// used everywhere in the library.
struct StateVector {
    std::vector<Eigen::Index> dims;
    Vec amps;

    Eigen::Index total_dim() const;
    double norm() const { return amps.norm(); }
    bool is_consistent() const;
};

StateVector make_state(std::vector<Eigen::Index> dims, Vec amps);

// Projectors onto the strictly positive / strictly negative eigenspaces of a
// Hermitian operator, plus the projector onto its kernel. Eigenvalues with
// |lambda| < 1e-9 are classified as kernel.
struct EigSplit {
    Mat plus;
    Mat minus;
    Mat kernel;
};

// Parameters of the tilted CHSH family, tied together by
// tan(theta) = alpha, sin(2 theta) = sqrt((4 - beta^2)/(4 + beta^2)),
// mu = arctan(sin(2 theta)).
struct TiltedParams {
    double alpha;
    double beta;
    double theta;
    double mu;

    static TiltedParams from_alpha(double alpha);
};

struct TiltedPaulis {
    Mat tz;  // cos(mu) sigma_z + sin(mu) sigma_x
    Mat tx;  // cos(mu) sigma_z - sin(mu) sigma_x
};

Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

bool is_hermitian(const Mat& m, double tol = 1e-12);
bool is_projector(const Mat& m, double tol = 1e-10);
bool is_unitary(const Mat& m, double tol = 1e-10);

// Kronecker product, a's indices most significant.
Mat tensor(const Mat& a, const Mat& b);
Vec tensor(const Vec& a, const Vec& b);
StateVector tensor(const StateVector& a, const StateVector& b);

EigSplit eig_projectors(const Mat& m);

TiltedPaulis tilted_paulis(const TiltedParams& p);

// Pushforward V o V^dagger along the isometry V|0> = |1>, V|1> = |2>.
Mat embed_v(const Mat& o);

// A 2x2 operator acting on span{|0>,|1>} of a qutrit, level 2 annihilated.
Mat qubit_block(const Mat& o);

// Unitary factor of the polar decomposition: the unitary maximizing
// Re tr(U^dagger m). Rank-deficient inputs get a free orthogonal completion.
Mat polar_factor(const Mat& m);

// Unit eigenvector of the largest eigenvalue, with the lowest-index
// nonvanishing amplitude made real positive.
Vec principal_eigvec(const Mat& m);

// Apply op to the middle factor of a state laid out as (left, k, right).
void apply_on_factor(Vec& state, const Mat& op, Eigen::Index left, Eigen::Index right);

}  // namespace bellforge
