#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kinelim/config.hpp"
#include "kinelim/null_space.hpp"
#include "kinelim/velocity_space.hpp"

namespace kinelim {

enum class KernelModel { BGK, VHS, HardSphere };

// Product rule on the half sphere theta in [0, pi/2]: Gauss-Legendre in
// cos(theta), equispaced phi at (k + 1/2) 2pi / n_phi. Weights are doubled
// so that they sum to 4pi.
struct AngularRule {
    std::vector<double> cos_theta;
    std::vector<double> sin_theta;
    std::vector<double> cos_phi;
    std::vector<double> sin_phi;
    std::vector<double> weight;
    size_t size() const { return weight.size(); }
};

AngularRule half_sphere_rule(int n_theta, int n_phi);

struct CollisionKernel {
    KernelModel model = KernelModel::BGK;
    double tau = 1.0;
    double gamma = 1.0;
    double b0 = 0.0;
    int n_theta = 8;
    int n_phi = 4;
    AngularRule rule;

    bool is_bgk() const { return model == KernelModel::BGK; }
    std::string name() const;
    double speed_factor(double r) const;  // |u|^gamma, 0 at r = 0
};

CollisionKernel make_bgk(double tau);
CollisionKernel make_vhs(double gamma, double b0, int n_theta = 8, int n_phi = 4);
CollisionKernel make_hard_sphere(int n_theta = 8, int n_phi = 4);
// [kernel] table: model = "bgk" | "vhs" | "hard_sphere", tau, gamma, b0,
// sigma_theta, sigma_phi (or sigma_nodes = 4 * sigma_theta).
CollisionKernel kernel_from_config(const json& cfg);
json kernel_to_json(const CollisionKernel& k);

constexpr double kMuFloor = 1e-30;

// Shared per-grid tables for the quadrature loops.
struct CollisionContext {
    const VelocityGrid* grid = nullptr;
    CollisionKernel kernel;
    NullBasis null;
    std::vector<double> inv_sqrt_mu;  // 1/sqrt(mu), 0 below the floor
    std::vector<double> mask;         // 1 above the floor, 0 below
};

std::shared_ptr<const CollisionContext> make_collision_context(const CollisionKernel& kernel,
                                                               const VelocityGrid& grid);

struct LinearOperatorHandle {
    std::shared_ptr<const CollisionContext> ctx;
    bool assembled = false;
    Eigen::MatrixXd matrix;
    double asymmetry = 0.0;  // relative Frobenius deviation before symmetrization

    const CollisionKernel& kernel() const { return ctx->kernel; }
    const VelocityGrid& grid() const { return *ctx->grid; }
};

LinearOperatorHandle matrix_free_L(const CollisionKernel& kernel, const VelocityGrid& grid);
// Dense L, columns L e_k, symmetrized. ResourceError above max_rows.
LinearOperatorHandle assemble_L_matrix(const CollisionKernel& kernel, const VelocityGrid& grid,
                                       size_t max_rows = 4096);

// Quadrature of Q(g, h) with energy-remapped interpolation and the
// conservative remap. UnsupportedError for BGK.
VelocityFunction q_bilinear(const VelocityFunction& g, const VelocityFunction& h,
                            const CollisionKernel& kernel, const VelocityGrid& grid);
VelocityFunction q_bilinear(const VelocityFunction& g, const VelocityFunction& h,
                            const CollisionContext& ctx);

// mu^{-1/2} Q(sqrt(mu) g, sqrt(mu) h). For BGK this returns the quadratic
// part of the relaxation term, (1/(2 tau)) (I - P)[Phi_g Phi_h sqrt(mu)].
VelocityFunction gamma_bilinear(const VelocityFunction& g, const VelocityFunction& h,
                                const CollisionKernel& kernel, const VelocityGrid& grid);
VelocityFunction gamma_bilinear(const VelocityFunction& g, const VelocityFunction& h,
                                const CollisionContext& ctx);
// Same with raw pointers, writes out[0..nv).
void gamma_bilinear_into(const double* g, const double* h, const CollisionContext& ctx, double* out);
// count pairs stored contiguously (count x nv); same values as count calls
// of gamma_bilinear_into, at a fraction of the stencil work.
void gamma_bilinear_batch(const double* g, const double* h, size_t count, const CollisionContext& ctx, double* out);

// Gamma before the conservative remap (VHS only).
VelocityFunction gamma_raw(const VelocityFunction& g, const VelocityFunction& h,
                           const CollisionContext& ctx);

VelocityFunction apply_L(const VelocityFunction& g, const LinearOperatorHandle& op);
VelocityFunction apply_L(const VelocityFunction& g, const LinearOperatorHandle& op,
                         const VelocityGrid& grid);
VelocityFunction apply_L_transpose(const VelocityFunction& g, const LinearOperatorHandle& op);

// Smallest eigenvalue of the assembled symmetric matrix restricted to N-perp.
double spectral_gap(const LinearOperatorHandle& op);

// Interpolation stencil used by the quadrature: trilinear minus the
// second-difference correction, exact for quadratics. 11 points.
struct Stencil {
    int idx[11];
    double wt[11];
};
void interp_stencil(const VelocityGrid& grid, const double p[3], Stencil& s);
inline double interp_apply(const Stencil& s, const double* f) {
    double r = 0.0;
    for (int q = 0; q < 11; ++q) r += s.wt[q] * f[s.idx[q]];
    return r;
}

}  // namespace kinelim
