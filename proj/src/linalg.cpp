#include "bellforge/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <cmath>

namespace bellforge {

Eigen::Index StateVector::total_dim() const {
    Eigen::Index n = 1;
    for (Eigen::Index d : dims) n *= d;
    return n;
}

bool StateVector::is_consistent() const {
    return total_dim() == amps.size();
}

StateVector make_state(std::vector<Eigen::Index> dims, Vec amps) {
    StateVector s{std::move(dims), std::move(amps)};
    if (!s.is_consistent()) throw ShapeError("state amplitude length does not match dims");
    return s;
}

Mat pauli_x() {
    Mat m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Mat pauli_y() {
    Mat m(2, 2);
    m << 0, cdouble(0, -1), cdouble(0, 1), 0;
    return m;
}

Mat pauli_z() {
    Mat m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

bool is_hermitian(const Mat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_projector(const Mat& m, double tol) {
    if (!is_hermitian(m, 1e-10)) return false;
    return (m * m - m).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Mat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    Mat g = m.adjoint() * m;
    g.diagonal().array() -= 1.0;
    return g.cwiseAbs().maxCoeff() <= tol;
}

Mat tensor(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Vec tensor(const Vec& a, const Vec& b) {
    Vec out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    std::vector<Eigen::Index> dims = a.dims;
    dims.insert(dims.end(), b.dims.begin(), b.dims.end());
    return make_state(std::move(dims), tensor(a.amps, b.amps));
}

EigSplit eig_projectors(const Mat& m) {
    if (!is_hermitian(m))
        throw ValidationError("eig_projectors: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    const Eigen::Index n = m.rows();
    EigSplit out{Mat::Zero(n, n), Mat::Zero(n, n), Mat::Zero(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        const double lambda = es.eigenvalues()(i);
        const Vec v = es.eigenvectors().col(i);
        Mat p = v * v.adjoint();
        if (lambda > 1e-9)
            out.plus += p;
        else if (lambda < -1e-9)
            out.minus += p;
        else
            out.kernel += p;
    }
    return out;
}

TiltedParams TiltedParams::from_alpha(double alpha) {
    if (!(alpha > 0.0) || alpha > 1.0)
        throw ValidationError("tilted CHSH ratio alpha must lie in (0, 1]");
    TiltedParams p;
    p.alpha = alpha;
    p.theta = std::atan(alpha);
    // tan(theta) = alpha gives sin/cos of 2 theta algebraically; this keeps
    // beta exactly zero at alpha = 1.
    const double s2t = 2.0 * alpha / (1.0 + alpha * alpha);
    const double c2t = (1.0 - alpha) * (1.0 + alpha) / (1.0 + alpha * alpha);
    // invert sin(2 theta) = sqrt((4 - beta^2)/(4 + beta^2))
    p.beta = 2.0 * c2t / std::sqrt(1.0 + s2t * s2t);
    p.mu = std::atan(s2t);
    return p;
}

TiltedPaulis tilted_paulis(const TiltedParams& p) {
    const double c = std::cos(p.mu);
    const double s = std::sin(p.mu);
    return {c * pauli_z() + s * pauli_x(), c * pauli_z() - s * pauli_x()};
}

Mat embed_v(const Mat& o) {
    if (o.rows() != 2 || o.cols() != 2) throw ShapeError("embed_v expects a 2x2 operator");
    Mat out = Mat::Zero(3, 3);
    out.block(1, 1, 2, 2) = o;
    return out;
}

Mat qubit_block(const Mat& o) {
    if (o.rows() != 2 || o.cols() != 2) throw ShapeError("qubit_block expects a 2x2 operator");
    Mat out = Mat::Zero(3, 3);
    out.block(0, 0, 2, 2) = o;
    return out;
}

Mat polar_factor(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

Vec principal_eigvec(const Mat& m) {
    if (!is_hermitian(m))
        throw ValidationError("principal_eigvec: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    Vec v = es.eigenvectors().col(m.rows() - 1);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-12) {
            v *= std::conj(v(i)) / mag;
            break;
        }
    }
    return v;
}

void apply_on_factor(Vec& state, const Mat& op, Eigen::Index left, Eigen::Index right) {
    const Eigen::Index k = op.rows();
    if (op.cols() != k) throw ShapeError("apply_on_factor: operator must be square");
    if (state.size() != left * k * right) throw ShapeError("apply_on_factor: size mismatch");
    Vec sub(k), res(k);
    for (Eigen::Index l = 0; l < left; ++l) {
        for (Eigen::Index r = 0; r < right; ++r) {
            const Eigen::Index base = l * k * right + r;
            for (Eigen::Index j = 0; j < k; ++j) sub(j) = state(base + j * right);
            res.noalias() = op * sub;
            for (Eigen::Index j = 0; j < k; ++j) state(base + j * right) = res(j);
        }
    }
}

}  // namespace bellforge
