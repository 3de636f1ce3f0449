#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace kinelim {

// One real value per velocity node.
using VelocityFunction = std::vector<double>;

// Midpoint grid on [-V, V]^3 with n points per axis. Node (i, j, k) sits at
// (x_i, x_j, x_k) with x_i = -V + (i + 1/2) h, flat index (i*n + j)*n + k.
struct VelocityGrid {
    double V = 0.0;
    int n = 0;
    double h = 0.0;
    double w = 0.0;  // uniform cell volume h^3
    std::vector<std::array<double, 3>> nodes;
    std::vector<double> weights;
    std::vector<double> maxwellian;
    std::vector<double> sqrt_maxwellian;

    size_t size() const { return nodes.size(); }
    size_t index(int i, int j, int k) const {
        return (static_cast<size_t>(i) * n + j) * n + k;
    }
    double axis(int i) const { return -V + (i + 0.5) * h; }
    // Index of the node reflected through the origin.
    size_t mirror(size_t idx) const { return size() - 1 - idx; }
};

// Throws ConfigError for odd n_v, n_v < 8, V <= 0, or when the tabulated
// Maxwellian mass falls outside [1 - tol_mass, 1].
VelocityGrid build_velocity_grid(double V, int n_v, double tol_mass = 1e-6);

double maxwellian_at(const std::array<double, 3>& v);

// (sum_i w_i <v_i>^{2l} f_i^2)^{1/2}
double weighted_l2_norm(const VelocityFunction& f, const VelocityGrid& grid, double l = 0.0);

// Discrete L^2(dv) inner product, fixed summation order.
double vinner(const VelocityFunction& f, const VelocityFunction& g, const VelocityGrid& grid);

// sum_i w_i mu_i p(v_i) for a polynomial supplied as a callable. Nodes are
// summed in mirror pairs, so odd moments cancel exactly.
template <class F>
double gaussian_moment(const VelocityGrid& grid, F&& p) {
    double s = 0.0;
    for (size_t i = 0; i < grid.size() / 2; ++i) {
        const size_t j = grid.mirror(i);
        s += grid.weights[i] * grid.maxwellian[i] * p(grid.nodes[i]) +
             grid.weights[j] * grid.maxwellian[j] * p(grid.nodes[j]);
    }
    return s;
}

}  // namespace kinelim
