#pragma once

#include <stdexcept>
#include <string>

namespace kinelim {

// Bad or missing configuration. The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Wrong call sequence or arguments (too few snapshots, zero samples, ...).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IllPosedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolverError : std::runtime_error {
    SolverError(const std::string& what, double res, int its)
        : std::runtime_error(what), residual(res), iterations(its) {}
    double residual;
    int iterations;
};

struct CflError : std::runtime_error {
    CflError(const std::string& what, double dt)
        : std::runtime_error(what), advisory_dt(dt) {}
    double advisory_dt;
};

struct NonContractionError : std::runtime_error {
    NonContractionError(const std::string& what, double e0)
        : std::runtime_error(what), initial_energy(e0) {}
    double initial_energy;
};

}  // namespace kinelim
