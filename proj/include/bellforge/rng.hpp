#pragma once

#include <cstdint>
#include <random>

#include "bellforge/linalg.hpp"

namespace bellforge {

// mt19937_64 with hand-rolled uniform/Gaussian transforms so streams do not
// depend on the standard library's distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() {  // [0, 1)
        return double(engine_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

    std::uint64_t integer(std::uint64_t bound) {  // [0, bound)
        return engine_() % bound;
    }

    Vec gaussian_state(Eigen::Index dim) {
        Vec v(dim);
        for (Eigen::Index i = 0; i < dim; ++i) v(i) = cdouble(gaussian(), gaussian());
        v /= v.norm();
        return v;
    }

    Mat gue(Eigen::Index dim) {
        Mat g(dim, dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            for (Eigen::Index j = 0; j < dim; ++j) g(i, j) = cdouble(gaussian(), gaussian());
        return (g + g.adjoint()) / 2.0;
    }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace bellforge
