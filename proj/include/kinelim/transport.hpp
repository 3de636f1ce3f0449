#pragma once

#include "kinelim/collision.hpp"

namespace kinelim {

struct SolveOptions {
    double tol = 1e-10;
    int max_iter = 10000;
    // rhs whose N component exceeds this fraction of its norm is rejected
    double ill_posed_ratio = 0.9;
    bool force_matrix_free = false;
};

struct SolveInfo {
    double residual = 0.0;  // ||L f - rhs_perp|| / ||rhs_perp||
    int iterations = 0;
    bool matrix_free = false;
};

// Returns f in N-perp with L f = (I - P) rhs. Assembled handles use a
// Cholesky factorization of L + P; otherwise conjugate gradients on the
// symmetric part (L + L^T)/2, projected onto N-perp every iteration.
VelocityFunction solve_inverse_L(const VelocityFunction& rhs, const LinearOperatorHandle& op,
                                 const SolveOptions& opt = {}, SolveInfo* info = nullptr);
VelocityFunction solve_inverse_L(const VelocityFunction& rhs, const LinearOperatorHandle& op,
                                 const VelocityGrid& grid, const SolveOptions& opt = {}, SolveInfo* info = nullptr);

struct TransportCoefficients {
    // (1/15) sum_ij (A_ij sqrt(mu), A_hat_ij) and (2/15) sum_i (B_i sqrt(mu), B_hat_i)
    double nu = 0.0;
    double kappa = 0.0;
    // (A_12 sqrt(mu), A_hat_12): the shear viscosity of the limit equations
    double nu12 = 0.0;
    double residual_A = 0.0;
    double residual_B = 0.0;
    // raw sums, kept for the isotropy check
    double sum_A = 0.0;
    double sum_B = 0.0;
    bool matrix_free = false;
};

TransportCoefficients compute_transport(const LinearOperatorHandle& op, const SolveOptions& opt = {});
TransportCoefficients compute_transport(const CollisionKernel& kernel, const VelocityGrid& grid,
                                        const SolveOptions& opt = {}, size_t assemble_limit = 4096);

// A_ij sqrt(mu) and B_i sqrt(mu) tabulated on the grid.
VelocityFunction burnett_A(const VelocityGrid& grid, int i, int j);
VelocityFunction burnett_B(const VelocityGrid& grid, int i);

}  // namespace kinelim
