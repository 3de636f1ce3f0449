#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

#include "kinelim/velocity_space.hpp"

namespace kinelim {

// Discrete orthonormal basis of span{sqrt(mu), v_i sqrt(mu), |v|^2 sqrt(mu)}.
// Gram-Schmidt is redone in the grid inner product, starting from
// {sqrt(mu), v_i sqrt(mu), (|v|^2 - 3) sqrt(mu) / sqrt(6)}, so the
// projection is exact to round-off on the grid.
struct NullBasis {
    std::array<VelocityFunction, 5> psi;
    // psi_m = sum_n T(m, n) phi_n with phi = {sqrt(mu), v_1.., |v|^2 sqrt(mu)}
    Eigen::Matrix<double, 5, 5> T;
    double w = 0.0;
    size_t nv = 0;

    // alpha_m = (g, psi_m)
    template <class S>
    std::array<S, 5> coords(const S* g) const {
        std::array<S, 5> a{};
        for (int m = 0; m < 5; ++m) {
            S s{};
            const double* p = psi[m].data();
            for (size_t i = 0; i < nv; ++i) s += p[i] * g[i];
            a[m] = s * w;
        }
        return a;
    }

    // out = sum_m alpha_m psi_m
    template <class S>
    void expand(const std::array<S, 5>& a, S* out) const {
        for (size_t i = 0; i < nv; ++i) {
            S s{};
            for (int m = 0; m < 5; ++m) s += a[m] * psi[m][i];
            out[i] = s;
        }
    }

    // g <- (I - P) g, returns the removed coordinates
    template <class S>
    std::array<S, 5> remove(S* g) const {
        auto a = coords(g);
        for (size_t i = 0; i < nv; ++i) {
            S s{};
            for (int m = 0; m < 5; ++m) s += a[m] * psi[m][i];
            g[i] -= s;
        }
        return a;
    }

    // (a, b1, b2, b3, c) of Pg = (a + b.v + c|v|^2) sqrt(mu)
    template <class S>
    std::array<S, 5> to_abc(const std::array<S, 5>& alpha) const {
        std::array<S, 5> out{};
        for (int n = 0; n < 5; ++n) {
            S s{};
            for (int m = 0; m < 5; ++m) s += T(m, n) * alpha[m];
            out[n] = s;
        }
        return out;
    }
};

NullBasis build_null_basis(const VelocityGrid& grid);

}  // namespace kinelim
