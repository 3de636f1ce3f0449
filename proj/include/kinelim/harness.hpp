#pragma once

#include <array>
#include <string>
#include <vector>

#include "kinelim/config.hpp"
#include "kinelim/kinetic_solver.hpp"
#include "kinelim/nsf_solver.hpp"
#include "kinelim/transport.hpp"

namespace kinelim {

struct SweepConfig {
    RunConfig base;
    std::vector<double> eps{0.2, 0.1, 0.05};
    std::vector<double> times{0.25, 0.5, 1.0};
    std::vector<double> etas{0.5, 1.0};
    std::string out_dir = "sweep_out";
    double nsf_dt = 1e-3;
    bool write_runs = true;       // per-eps CSVs and manifests
    bool write_snapshots = false;  // per-eps snapshots.bin
    int threads = 0;              // 0: KINELIM_THREADS or hardware concurrency
    double t0_tolerance = 1e-10;
    double weak_decay = 1.5;      // required factor per eps halving
    // false keeps the weak-residual decay in the report without gating on it
    bool gate_weak_decay = true;
};

// [sweep] eps, times, etas, out, nsf_dt, write_runs, write_snapshots,
// threads, t0_tolerance, weak_decay, gate_weak_decay; the remaining tables
// form the base RunConfig.
SweepConfig sweep_config_from_toml(const json& cfg);

// ||div u(t)||_{L^2} per moment sample.
std::vector<double> incompressibility_residual(const std::vector<MomentSpectra>& series, const SpatialGrid& sgrid);
// ||grad(rho + theta)(t)||_{L^2}, theta the (|v|^2/3 - 1) moment.
std::vector<double> boussinesq_residual(const std::vector<MomentSpectra>& series, const SpatialGrid& sgrid);

// Real trigonometric test function: cos or sin of k.x times a direction
// (divergence-free for the momentum battery, unused for the scalar one).
struct TestFunction {
    std::array<int, 3> k{};
    std::array<double, 3> dir{};
    bool sine = false;
};

// Battery: every wavevector with 0 < |k|_inf <= 2, one of each +-k pair.
std::vector<TestFunction> momentum_battery(const SpatialGrid& sgrid);
std::vector<TestFunction> scalar_battery(const SpatialGrid& sgrid);

struct WeakResiduals {
    std::vector<TestFunction> momentum_tests, scalar_tests;
    std::vector<double> momentum, theta;  // signed pairings
    double momentum_max = 0.0;
    double theta_max = 0.0;
};

// Pairings of the rewritten momentum and theta equations with the battery,
// weighted in time by sin^2(pi t / T) over the sampled window:
//   -int chi' (u, phi) + int chi [(div(u u), phi) + nu |k|^2 (u, phi)]
//   -int chi' (th, phi) + int chi [(div(u th), phi) + kappa |k|^2 (th, phi)]
// with th = (3/5) theta - (2/5) rho. UsageError for fewer than 3 samples.
WeakResiduals fluid_system_residual(const std::vector<MomentSpectra>& series, double nu, double kappa,
                                    const SpatialGrid& sgrid);

// sqrt(sum mult (1 + |k|^2)^s |f_k|^2 * parseval), s = 0 gives L^2.
double sobolev_norm(const std::vector<cplx>& fh, const SpatialGrid& sgrid, double s);

// Least-squares slope of log(err) against log(eps); residual is the RMS misfit.
struct OrderFit {
    bool valid = false;
    double order = 0.0;
    double residual = 0.0;
};
OrderFit fit_order(const std::vector<double>& eps, const std::vector<double>& err);

struct TimeErrors {
    double t = 0.0;
    double u_l2 = 0.0;
    double theta_l2 = 0.0;
    std::vector<double> u_hs, theta_hs;  // per eta, s = N - eta
    double div = 0.0;
    double bous = 0.0;
};

struct EpsResult {
    double eps = 0.0;
    bool ok = false;
    std::string error;
    double dt = 0.0;
    long steps = 0;
    std::vector<TimeErrors> errors;
    double div_l2t = 0.0;   // (int ||div u||^2 dt)^{1/2}
    double bous_l2t = 0.0;
    double sup_E = 0.0;
    double E0 = 0.0;
    WeakResiduals weak;
    std::vector<std::array<double, 2>> energy;  // (t, E_N), subsampled
};

struct ReportCheck {
    std::string name;
    bool passed = false;
    bool gating = true;
    std::string detail;
};

struct ConvergenceReport {
    SweepConfig cfg;
    TransportCoefficients transport;
    double nu_ref = 0.0;
    double kappa_ref = 0.0;
    std::vector<EpsResult> runs;
    std::vector<std::pair<std::string, OrderFit>> orders;
    std::vector<ReportCheck> checks;
    bool passed = false;
};

// Runs the kinetic problem for each eps (in parallel) and one NSF reference
// with the transport coefficients of the kernel, then assembles the report.
// Failed eps runs are recorded and the sweep continues.
ConvergenceReport epsilon_sweep(const SweepConfig& cfg);

json report_to_json(const ConvergenceReport& r);
std::string render_report_txt(const json& report);
std::string render_report_csv(const json& report);
std::vector<std::pair<std::string, std::string>> render_plot_files(const json& report);
// Writes report.json, then renders txt/csv/plots from the re-read JSON.
void write_report(const std::string& dir, const json& report);
// Re-renders the text products of an existing report directory. Returns the
// stored verdict.
bool rerender_report(const std::string& dir);

// Run outputs: manifest.json, energy.csv, moments.csv, optional snapshots.bin.
void write_run_outputs(const std::string& dir, const RunConfig& cfg, const Trajectory& tr,
                       const SpatialGrid& sgrid, const std::string& error = "");
void write_nsf_outputs(const std::string& dir, const FluidTrajectory& tr, const SpatialGrid& sgrid, double nu,
                       double kappa, double dt, double t_end, const json& ic, bool snapshots);

// Number of worker threads for independent jobs.
int worker_threads(int requested);

int cli_main(int argc, char** argv);

}  // namespace kinelim
