#pragma once

#include <cstddef>
#include <vector>

namespace kinelim {

// g(t, x, v) sampled per spatial cell and velocity node, velocity fastest.
struct Distribution {
    size_t cells = 0;
    size_t nv = 0;
    std::vector<double> values;
    double t = 0.0;
    double eps = 1.0;

    Distribution() = default;
    Distribution(size_t cells_, size_t nv_) : cells(cells_), nv(nv_), values(cells_ * nv_, 0.0) {}

    double* cell(size_t c) { return values.data() + c * nv; }
    const double* cell(size_t c) const { return values.data() + c * nv; }
};

}  // namespace kinelim
