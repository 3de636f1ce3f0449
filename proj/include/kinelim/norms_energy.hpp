#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "kinelim/collision.hpp"
#include "kinelim/distribution.hpp"
#include "kinelim/macro_decomp.hpp"
#include "kinelim/spatial.hpp"

namespace kinelim {

struct TripleNormOptions {
    // Use (mu' - mu)^2 in the second integrand instead of (sqrt(mu') - sqrt(mu))^2.
    bool literal_mu = false;
    // Non-cutoff angular factor K theta^{-2-2s}, integrated on [theta_min, pi/2].
    bool noncutoff = false;
    double theta_min = 0.0;
    double s = 0.5;
    double K = 1.0;
};

struct TripleNormResult {
    double value = 0.0;
    std::string label;  // "cutoff", "bgk-l2" or "truncated"
};

TripleNormResult triple_norm_ex(const VelocityFunction& f, const CollisionKernel& kernel, const VelocityGrid& grid,
                                const TripleNormOptions& opt = {});
double triple_norm(const VelocityFunction& f, const CollisionKernel& kernel, const VelocityGrid& grid);

// Dense quadratic form T with |||f|||^2 = f^T T f (cutoff kernels).
Eigen::MatrixXd triple_norm_matrix(const CollisionKernel& kernel, const VelocityGrid& grid,
                                   const TripleNormOptions& opt = {});

struct EnergyReport {
    double t = 0.0;
    int N = 0;
    double E_N = 0.0;
    double C_N = 0.0;
    double D_N = 0.0;
    double E_N_combined = 0.0;
    bool has_combined = false;
};

// Spectral kinetic state: [mode * nv + node], FFTW half spectrum.
using SpectralState = std::vector<cplx>;

// Evaluates the functionals from Fourier data. Holds the tables that do not
// change along a trajectory.
class EnergyEvaluator {
public:
    EnergyEvaluator(const CollisionKernel& kernel, const VelocityGrid& grid, const SpatialGrid& sgrid, int N,
                    double d1 = 0.01);

    EnergyReport evaluate(const SpectralState& gh, double t) const;
    // Adds the cross terms with coefficient d1 * eps.
    EnergyReport evaluate_combined(const SpectralState& gh, double t, double eps) const;

    int N() const { return N_; }
    double d1() const { return d1_; }

private:
    double cross_terms(const SpectralState& gh) const;

    const VelocityGrid* grid_;
    const SpatialGrid* sgrid_;
    CollisionKernel kernel_;
    int N_;
    double d1_;
    NullBasis null_;
    MomentBasis moments_;
    std::vector<double> wN_, wN1_;
    Eigen::MatrixXd T_;  // triple-norm form, cutoff kernels only
};

EnergyReport energy_functionals(const Distribution& g, const CollisionKernel& kernel, const VelocityGrid& grid,
                                const SpatialGrid& sgrid, int N);
EnergyReport energy_functionals_combined(const Distribution& g, const CollisionKernel& kernel,
                                         const VelocityGrid& grid, const SpatialGrid& sgrid, int N, double eps,
                                         double d1);

struct EquivalenceConstants {
    double C1 = 0.0;
    double C2 = 0.0;
    double c_coercive = 0.0;
    double C_trilinear = 0.0;
    int samples = 0;
};

// Extreme ratios over random velocity functions (fixed seed). The trilinear
// constant needs one Gamma evaluation per draw and is sampled on the first
// kTrilinearSamples draws only.
constexpr int kTrilinearSamples = 10;
EquivalenceConstants check_equivalence_constants(int samples, const LinearOperatorHandle& op,
                                                 std::uint64_t seed = 20240601);

}  // namespace kinelim
