#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "kinelim/collision.hpp"
#include "kinelim/config.hpp"
#include "kinelim/distribution.hpp"
#include "kinelim/macro_decomp.hpp"
#include "kinelim/norms_energy.hpp"
#include "kinelim/nsf_solver.hpp"
#include "kinelim/spatial.hpp"

namespace kinelim {

struct RunConfig {
    double eps = 0.1;
    double dt = 1e-3;
    double t_end = 1.0;
    int d = 2;
    int n_x = 16;
    double V = 8.0;
    int n_v = 20;
    double tol_mass = 1e-6;
    CollisionKernel kernel = make_bgk(1.0);
    json ic = json::object();  // {"ic": <[ic] table>}
    std::string integrator = "imex";  // imex | picard
    int picard_K = 6;
    double output_every = 0.25;  // snapshot and moment cadence (time)
    int energy_every = 1;        // steps between energy evaluations
    int N = 2;
    double d1 = 0.01;
    double c0 = 0.0;   // (1 - c0 E_N) factor in the dissipation sum
    double w_D = 1.0;  // weight of D_N^2 / eps^2
    double w_C = 0.0;  // weight of C_N^2
    double cfl_max = 0.9;
    double governor = 0.5;  // dt ||Gamma|| / eps <= governor ||g||, else substeps
    bool write_snapshots = true;
    size_t assemble_limit = 4096;
    double picard_max_energy = 1.0;  // E_N(g0) above this is refused by picard_solve
    std::vector<std::array<int, 3>> probes;
};

// [run] eps, dt, t_end, integrator, picard_K, picard_max_energy, output_every, energy_every,
// cfl_max, governor, write_snapshots, probes = [[i, j], ...];
// [space] d, n_x; [velocity] V, n_v, tol_mass; [kernel]; [ic];
// [energy] N, d1, c0, w_D, w_C.
RunConfig run_config_from_toml(const json& cfg);
json run_config_to_json(const RunConfig& cfg);

// g0 = {rho0 + u0.v + theta0 (|v|^2/2 - 3/2)} sqrt(mu) + remainder, the
// remainder projected onto N-perp (a warning is printed when the supplied
// one had an N component above 1e-8).
Distribution initial_fluctuation(const WellPreparedIC& ic, const VelocityGrid& grid, const SpatialGrid& sgrid,
                                 const Distribution* remainder = nullptr);

// Nonlinear term Gamma(g, g) in compact spectral form. For BGK only the ten
// quadratic coefficient fields are stored; other kernels store the full
// spectral field.
struct ExplicitTerm {
    bool zero = true;
    std::vector<cplx> data;
};

struct StageTerms {
    ExplicitTerm s1, s2;
};

// Fluid moments of one state, spectral, one array per field.
struct MomentSpectra {
    double t = 0.0;
    std::vector<cplx> rho, theta3, theta5;
    std::array<std::vector<cplx>, 3> u;
};

// Second-order IMEX (ARS(2,2,2)) integrator in Fourier space. Transport and
// L are implicit and solved per mode; Gamma is explicit. Holds mutable
// factorization caches, so one instance must not be shared across threads.
class KineticSolver {
public:
    KineticSolver(const RunConfig& cfg, const VelocityGrid& grid, const SpatialGrid& sgrid);
    ~KineticSolver();

    SpectralState to_spectral(const Distribution& g) const;
    Distribution to_physical(const SpectralState& gh, double t) const;

    // Advances gh by dt. With `frozen`, the stage nonlinear terms are taken
    // from it instead of from gh (linear problem of the iteration); `own`
    // receives this state's stage terms.
    void step(SpectralState& gh, double dt, const StageTerms* frozen = nullptr, StageTerms* own = nullptr) const;
    // Step with the Gamma governor: splits into substeps while the explicit
    // term is too large.
    void step_governed(SpectralState& gh, double dt, int depth = 0) const;

    ExplicitTerm eval_gamma(const SpectralState& gh) const;
    void add_explicit(const ExplicitTerm& e, double scale, SpectralState& out) const;
    double explicit_norm(const ExplicitTerm& e) const;

    void check_cfl(double dt) const;
    double max_stable_dt() const;
    MomentSpectra moments(const SpectralState& gh, double t) const;
    double l2_norm(const SpectralState& gh) const;

    const VelocityGrid& grid() const { return *grid_; }
    const SpatialGrid& sgrid() const { return *sgrid_; }
    const RunConfig& config() const { return cfg_; }
    const LinearOperatorHandle& op() const { return op_; }

private:
    struct Impl;
    void advance(SpectralState& gh, double dt, const ExplicitTerm* e1, const StageTerms* frozen,
                 StageTerms* own) const;
    void implicit_solve(SpectralState& x, double dt) const;

    RunConfig cfg_;
    const VelocityGrid* grid_;
    const SpatialGrid* sgrid_;
    LinearOperatorHandle op_;
    std::unique_ptr<Impl> impl_;
};

Distribution step_imex(const Distribution& g, const RunConfig& cfg, const VelocityGrid& grid,
                       const SpatialGrid& sgrid);

struct Trajectory {
    std::vector<Distribution> snapshots;
    std::vector<EnergyReport> energy;
    std::vector<double> phi;               // energy functional with accumulated dissipation
    std::vector<double> int_D2;            // running sum of dt D^2 / eps^2
    std::vector<double> int_C2;            // running sum of dt C^2
    std::vector<MomentSpectra> macro;      // every step
    std::vector<MomentSpectra> outputs;    // at the output cadence
    SpectralState final_state;
    double dt_used = 0.0;
    long steps = 0;
};

// Fills `out` as it goes, so a failing run leaves the completed part behind.
void run_simulation_into(const RunConfig& cfg, const VelocityGrid& grid, const SpatialGrid& sgrid,
                         const Distribution& g0, Trajectory& out);
// Integrates cfg from the configured initial data. When `ic` is given it
// replaces cfg.ic.
Trajectory run_simulation(const RunConfig& cfg, const WellPreparedIC* ic = nullptr);
Trajectory run_simulation(const RunConfig& cfg, const VelocityGrid& grid, const SpatialGrid& sgrid,
                          const Distribution& g0);

struct PicardResult {
    std::vector<Distribution> iterates;  // g^1..g^K at t_end
    std::vector<double> increments;      // sup_t ||g^{n+1} - g^n||, n = 0..K-1 (g^0 = 0)
    Distribution direct;                 // the nonlinear solve with the same steps
    double final_vs_direct = 0.0;        // ||g^K - direct|| at t_end, sup over t
    double initial_energy = 0.0;
};

PicardResult picard_solve(const Distribution& g0, const RunConfig& cfg, int K, const VelocityGrid& grid,
                          const SpatialGrid& sgrid);

// Physical moment fields of a spectral moment set.
struct MomentFields {
    std::vector<double> rho, theta3, theta5;
    std::array<std::vector<double>, 3> u;
};
MomentFields moment_fields(const MomentSpectra& ms, const SpatialGrid& sgrid);

}  // namespace kinelim
