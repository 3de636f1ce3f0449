#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "kinelim/collision.hpp"
#include "kinelim/distribution.hpp"
#include "kinelim/null_space.hpp"
#include "kinelim/spatial.hpp"
#include "kinelim/velocity_space.hpp"

namespace kinelim {

struct MacroFields {
    std::vector<double> a, c;
    std::array<std::vector<double>, 3> b;
    std::vector<double> rho, theta3, theta5;
    std::array<std::vector<double>, 3> u;
};

struct Projection {
    MacroFields macro;
    Distribution Pg;
    Distribution g2;
};

Projection project_P(const Distribution& g, const VelocityGrid& grid);

// Test functions of the fluid moments: sqrt(mu), v_i sqrt(mu),
// (|v|^2/3 - 1) sqrt(mu), (|v|^2/5 - 1) sqrt(mu).
struct MomentWeights {
    VelocityFunction rho;
    std::array<VelocityFunction, 3> u;
    VelocityFunction theta3;
    VelocityFunction theta5;
};
MomentWeights moment_weights(const VelocityGrid& grid);

// The 13 functions {sqrt(mu), v_i sqrt(mu), v_i v_j sqrt(mu) (i <= j),
// v_i |v|^2 sqrt(mu)} and the dual family with (e*_j, e_k) = delta_jk.
struct MomentBasis {
    static constexpr int kSize = 13;
    std::array<VelocityFunction, kSize> e;
    std::array<VelocityFunction, kSize> e_star;
    Eigen::Matrix<double, kSize, kSize> gram;
    double condition = 0.0;

    // slots of the family
    static constexpr int kA = 0;
    static int b(int i) { return 1 + i; }
    static int pair(int i, int j);  // v_i v_j, any order
    static int cflux(int i) { return 10 + i; }
};

MomentBasis build_moment_basis(const VelocityGrid& grid, double max_condition = 1e12);

using Moment13 = std::array<double, MomentBasis::kSize>;

struct MacroSources {
    std::vector<Moment13> r, m, l, h;
};

MacroSources macro_sources(const Distribution& g, const LinearOperatorHandle& op, const SpatialGrid& sgrid,
                           const MomentBasis& basis);

struct ConservationResidual {
    double t = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// Residuals of the local conservation laws between consecutive snapshots,
// evaluated at the midpoints with forward differences in time and averaged
// spatial terms (second order in the snapshot spacing).
std::vector<ConservationResidual> conservation_residuals(const std::vector<Distribution>& snaps, double eps,
                                                         const VelocityGrid& grid, const SpatialGrid& sgrid);

}  // namespace kinelim
