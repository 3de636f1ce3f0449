#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kinelim/config.hpp"
#include "kinelim/spatial.hpp"

namespace kinelim {

using VectorField = std::array<std::vector<double>, 3>;
using SpectralVector = std::array<std::vector<cplx>, 3>;

// Limit initial data in physical space (one value per cell).
struct WellPreparedIC {
    std::vector<double> rho0;
    VectorField u0;
    std::vector<double> theta0;
    // kinetic remainder: "zero" or "random" (N-perp noise of given amplitude)
    std::string remainder = "zero";
    double remainder_amplitude = 0.0;
    std::uint64_t seed = 0;
};

WellPreparedIC zero_ic(const SpatialGrid& grid);
// Taylor-Green: u0 = delta (sin x cos y, -cos x sin y, 0) and
// theta0 = delta * theta_amp * cos(x + y). shear_tg adds the shear modes
// delta * shear_amp * (sin 2y, cos 2x).
// [ic] table: type = "zero" | "taylor_green" | "shear_tg", delta, theta_amp,
// boussinesq (rho0 = -theta0 when true, else rho0 = rho_amp * cos(x)), remainder, remainder_amp, seed.
WellPreparedIC ic_from_config(const json& cfg, const SpatialGrid& grid);

struct FluidState {
    double t = 0.0;
    SpectralVector u;  // d components used, the rest zero
    std::vector<cplx> theta;
};

VectorField leray_project(const VectorField& w, const SpatialGrid& grid);
void leray_project_spectral(SpectralVector& w, const SpatialGrid& grid);

FluidState nsf_initial_data(const WellPreparedIC& ic, const SpatialGrid& grid);

VectorField fluid_velocity(const FluidState& s, const SpatialGrid& grid);
std::vector<double> fluid_theta(const FluidState& s, const SpatialGrid& grid);

// Integrating-factor Heun scheme with 2/3 dealiasing and a Leray
// projection at each stage. Owns its FFT plans.
class NSFSolver {
public:
    NSFSolver(const SpatialGrid& grid, double nu, double kappa, double cfl_max = 1.0);
    void step(FluidState& s, double dt) const;
    // -P div(u u) and -div(u theta), spectral; also returns max |u|.
    void nonlinear(const FluidState& s, SpectralVector& Nu, std::vector<cplx>& Nt, double* umax) const;
    double nu() const { return nu_; }
    double kappa() const { return kappa_; }

private:
    const SpatialGrid* grid_;
    double nu_, kappa_, cfl_max_;
    int nprod_;
    std::unique_ptr<FFT> fft_in_;
    std::unique_ptr<FFT> fft_prod_;
};

FluidState nsf_step(const FluidState& s, double nu, double kappa, double dt, const SpatialGrid& grid);

struct FluidDiagnostics {
    double t = 0.0;
    double kinetic = 0.0;       // ||u||^2
    double dissipation = 0.0;   // 2 nu int_0^t ||grad u||^2 (trapezoid)
    double theta_l2 = 0.0;
    double theta_max = 0.0;
    double div_l2 = 0.0;
    std::vector<double> probes;  // u1, u2, theta per probe
};

struct FluidTrajectory {
    std::vector<FluidState> snapshots;
    std::vector<FluidDiagnostics> series;
};

// Integrates to t_end with fixed dt. Diagnostics every `diag_every` steps,
// snapshots at every time in `snapshot_times` (must be multiples of dt).
FluidTrajectory run_nsf(const WellPreparedIC& ic, double nu, double kappa, double t_end, const SpatialGrid& grid,
                        double dt, const std::vector<double>& snapshot_times = {}, int diag_every = 1,
                        const std::vector<std::array<int, 3>>& probes = {});

// Pressure recovered from the gradient part of the nonlinear term.
std::vector<double> diagnostic_pressure(const FluidState& s, const SpatialGrid& grid);

}  // namespace kinelim
