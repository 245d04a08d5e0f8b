#include "bellforge/seesaw.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "bellforge/rng.hpp"

namespace bellforge {

namespace {

constexpr double kBellEntryCap = 1e8;

int thread_budget(int requested) {
    int n = requested > 0 ? requested : int(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("BELLFORGE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

using Meas = std::vector<std::vector<Mat>>;

Meas random_measurements(Rng& rng, int questions, int outcomes, int dim) {
    Meas meas;
    meas.reserve(size_t(questions));
    for (int x = 0; x < questions; ++x) {
        Eigen::SelfAdjointEigenSolver<Mat> es(rng.gue(dim));
        std::vector<int> labels(static_cast<size_t>(dim));
        for (int& l : labels) l = int(rng.integer(std::uint64_t(outcomes)));
        std::vector<Mat> row(size_t(outcomes), Mat::Zero(dim, dim));
        for (int i = 0; i < dim; ++i) {
            const Vec v = es.eigenvectors().col(i);
            row[size_t(labels[size_t(i)])] += v * v.adjoint();
        }
        meas.push_back(std::move(row));
    }
    return meas;
}

// Contractions of the state with the other side's operators: maximizing
// sum_a tr(P_x^a M_x^a) over projective measurements is the per-question
// see-saw subproblem.
std::vector<Mat> alice_contractions(const NonlocalGame& g, const Mat& m, const Meas& q, int x) {
    std::vector<Mat> out(size_t(g.na), Mat::Zero(m.rows(), m.rows()));
    for (int y = 0; y < g.ny; ++y) {
        const double d = g.dist_at(x, y);
        if (d == 0.0) continue;
        for (int b = 0; b < g.nb; ++b) {
            const Mat r = m * q[size_t(y)][size_t(b)].transpose() * m.adjoint();
            for (int a = 0; a < g.na; ++a) {
                const double v = g.score_at(x, y, a, b);
                if (v != 0.0) out[size_t(a)] += d * v * r;
            }
        }
    }
    return out;
}

std::vector<Mat> bob_contractions(const NonlocalGame& g, const Mat& m, const Meas& p, int y) {
    std::vector<Mat> out(size_t(g.nb), Mat::Zero(m.cols(), m.cols()));
    for (int x = 0; x < g.nx; ++x) {
        const double d = g.dist_at(x, y);
        if (d == 0.0) continue;
        for (int a = 0; a < g.na; ++a) {
            const Mat r = (m.adjoint() * p[size_t(x)][size_t(a)] * m).transpose();
            for (int b = 0; b < g.nb; ++b) {
                const double v = g.score_at(x, y, a, b);
                if (v != 0.0) out[size_t(b)] += d * v * r;
            }
        }
    }
    return out;
}

double sub_objective(const std::vector<Mat>& ops, const std::vector<Mat>& contractions) {
    double s = 0.0;
    for (size_t a = 0; a < ops.size(); ++a)
        s += (ops[a].cwiseProduct(contractions[a].transpose())).sum().real();
    return s;
}

// Closed-form two-outcome update: P_0 is the projector onto the strictly
// positive eigenspace of M_0 - M_1.
std::vector<Mat> two_outcome_update(const std::vector<Mat>& contractions) {
    const Eigen::Index dim = contractions[0].rows();
    Mat delta = contractions[0] - contractions[1];
    delta = (delta + delta.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(delta);
    Mat p0 = Mat::Zero(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        if (es.eigenvalues()(i) > 0.0) {
            const Vec v = es.eigenvectors().col(i);
            p0 += v * v.adjoint();
        }
    return {p0, Mat::Identity(dim, dim) - p0};
}

// Polar iteration over P_a = U Pi_a U^dagger with the rank profile of the
// current measurement; U is improved by the polar factor of
// sum_a M_a U Pi_a until the objective stalls.
std::vector<Mat> projective_update(const std::vector<Mat>& current,
                                   const std::vector<Mat>& contractions) {
    const Eigen::Index dim = current[0].rows();
    const int outcomes = int(current.size());
    std::vector<int> ranks(static_cast<size_t>(outcomes));
    std::vector<Eigen::Index> offsets(static_cast<size_t>(outcomes));
    {
        Eigen::Index used = 0;
        for (int a = 0; a < outcomes; ++a) {
            ranks[size_t(a)] = int(std::lround(current[size_t(a)].trace().real()));
            offsets[size_t(a)] = used;
            used += ranks[size_t(a)];
        }
        if (used != dim) return current;  // degenerate profile; keep as is
    }

    // seed U from the ranges of the current projectors
    Mat u = Mat::Zero(dim, dim);
    for (int a = 0; a < outcomes; ++a) {
        if (ranks[size_t(a)] == 0) continue;
        Eigen::SelfAdjointEigenSolver<Mat> es(current[size_t(a)]);
        Eigen::Index col = offsets[size_t(a)];
        for (Eigen::Index i = 0; i < dim; ++i)
            if (es.eigenvalues()(i) > 0.5) u.col(col++) = es.eigenvectors().col(i);
    }

    auto assemble = [&](const Mat& basis) {
        std::vector<Mat> ops(size_t(outcomes), Mat::Zero(dim, dim));
        for (int a = 0; a < outcomes; ++a) {
            const Mat cols = basis.middleCols(offsets[size_t(a)], Eigen::Index(ranks[size_t(a)]));
            ops[size_t(a)] = cols * cols.adjoint();
        }
        return ops;
    };

    double last = sub_objective(assemble(u), contractions);
    for (int iter = 0; iter < 50; ++iter) {
        Mat x = Mat::Zero(dim, dim);
        for (int a = 0; a < outcomes; ++a) {
            if (ranks[size_t(a)] == 0) continue;
            x.middleCols(offsets[size_t(a)], Eigen::Index(ranks[size_t(a)])) +=
                contractions[size_t(a)] * u.middleCols(offsets[size_t(a)], Eigen::Index(ranks[size_t(a)]));
        }
        const Mat next = polar_factor(x);
        const double obj = sub_objective(assemble(next), contractions);
        if (obj <= last + 1e-13) break;
        u = next;
        last = obj;
    }
    return assemble(u);
}

RestartTrace run_restart(const NonlocalGame& g, const SeesawConfig& cfg, int index,
                         QuantumStrategy& best_out) {
    Rng rng(cfg.seed ^ std::uint64_t(index));
    RestartTrace trace;
    trace.restart = index;

    const int da = cfg.dim_a, db = cfg.dim_b;
    Vec psi = rng.gaussian_state(Eigen::Index(da) * db);
    Meas p = random_measurements(rng, g.nx, g.na, da);
    Meas q = random_measurements(rng, g.ny, g.nb, db);

    QuantumStrategy s;
    s.dim_a = da;
    s.dim_b = db;
    double last = -std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < cfg.max_iters; ++sweep) {
        s.state = make_state({da, db}, psi);
        s.meas_a = p;
        s.meas_b = q;
        Mat bell = bell_operator(g, s);
        bell = (bell + bell.adjoint()) / 2.0;
        psi = principal_eigvec(bell);
        Eigen::Map<const Eigen::Matrix<cdouble, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
            m_row(psi.data(), da, db);
        const Mat m = m_row;

        for (int x = 0; x < g.nx; ++x) {
            const std::vector<Mat> ms = alice_contractions(g, m, q, x);
            auto& row = p[size_t(x)];
            const std::vector<Mat> candidate =
                g.na == 2 ? two_outcome_update(ms) : projective_update(row, ms);
            if (sub_objective(candidate, ms) > sub_objective(row, ms)) row = candidate;
        }
        for (int y = 0; y < g.ny; ++y) {
            const std::vector<Mat> ns = bob_contractions(g, m, p, y);
            auto& row = q[size_t(y)];
            const std::vector<Mat> candidate =
                g.nb == 2 ? two_outcome_update(ns) : projective_update(row, ns);
            if (sub_objective(candidate, ns) > sub_objective(row, ns)) row = candidate;
        }

        s.state = make_state({da, db}, psi);
        s.meas_a = p;
        s.meas_b = q;
        const double value = strategy_value(g, s);
        trace.trajectory.emplace_back(sweep, value);
        if (value > trace.best || sweep == 0) {
            trace.best = value;
            best_out = s;
        }
        if (value - last < cfg.tol && sweep > 0) {
            trace.converged = true;
            break;
        }
        last = value;
    }
    return trace;
}

}  // namespace

void SeesawConfig::validate() const {
    if (dim_a < 2 || dim_b < 2) throw ValidationError("see-saw dimensions must be >= 2");
    if (restarts < 1) throw ValidationError("see-saw needs at least one restart");
    if (max_iters < 1) throw ValidationError("see-saw needs at least one iteration");
    if (!(tol > 0.0)) throw ValidationError("see-saw tolerance must be positive");
}

Mat bell_operator(const NonlocalGame& g, const QuantumStrategy& s) {
    if (int(s.meas_a.size()) != g.nx || int(s.meas_b.size()) != g.ny)
        throw ShapeError("strategy question count does not match game");
    const Eigen::Index n = s.dim_a * s.dim_b;
    if (double(n) * double(n) > kBellEntryCap)
        throw CapError("Bell operator above the 10^8 entry cap");
    Mat bell = Mat::Zero(n, n);
    for (int x = 0; x < g.nx; ++x)
        for (int y = 0; y < g.ny; ++y) {
            const double d = g.dist_at(x, y);
            if (d == 0.0) continue;
            for (int a = 0; a < g.na; ++a)
                for (int b = 0; b < g.nb; ++b) {
                    const double v = g.score_at(x, y, a, b);
                    if (v == 0.0) continue;
                    bell += (d * v) * tensor(s.meas_a[size_t(x)][size_t(a)],
                                             s.meas_b[size_t(y)][size_t(b)]);
                }
        }
    return bell;
}

SeesawReport optimize(const NonlocalGame& g, const SeesawConfig& cfg) {
    cfg.validate();
    g.validate();
    const double entries = double(cfg.dim_a) * cfg.dim_b;
    if (entries * entries > kBellEntryCap) throw CapError("see-saw dimensions above memory cap");

    std::vector<RestartTrace> traces(size_t(cfg.restarts));
    std::vector<QuantumStrategy> bests(size_t(cfg.restarts));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= cfg.restarts) return;
            traces[size_t(i)] = run_restart(g, cfg, i, bests[size_t(i)]);
        }
    };
    const int threads = std::min(thread_budget(cfg.threads), cfg.restarts);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(size_t(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SeesawReport report;
    report.restarts = std::move(traces);
    report.best_value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < cfg.restarts; ++i) {
        if (report.restarts[size_t(i)].best > report.best_value) {
            report.best_value = report.restarts[size_t(i)].best;
            report.best_restart = i;
        }
    }
    report.best_strategy = std::move(bests[size_t(report.best_restart)]);
    return report;
}

}  // namespace bellforge
