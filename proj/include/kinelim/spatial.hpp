#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace kinelim {

using cplx = std::complex<double>;

// Periodic torus [0, 2pi)^d with n cells per axis. Fourier data use the FFTW
// real-to-complex half spectrum: shape n^{d-1} x (n/2 + 1), last axis fastest.
struct SpatialGrid {
    int d = 2;
    int n = 0;
    double L = 0.0;
    size_t cells = 0;
    size_t modes = 0;
    std::vector<std::array<double, 3>> k;   // derivative wavenumbers, Nyquist set to 0
    std::vector<std::array<int, 3>> kint;   // signed integer wavenumbers
    std::vector<double> mult;               // Hermitian multiplicity, 1 or 2
    std::vector<unsigned char> dealias;     // 1 where the 2/3 rule keeps the mode

    double dx() const { return L / n; }
    double cell_volume() const;
    // int |f|^2 dx = parseval() * sum_k mult |f_hat_k|^2 for unnormalized forward transforms
    double parseval() const;
    double volume() const;
    std::array<double, 3> position(size_t cell) const;
    size_t cell_index(const std::array<int, 3>& idx) const;
    double k2(size_t m) const { return k[m][0] * k[m][0] + k[m][1] * k[m][1] + k[m][2] * k[m][2]; }
};

SpatialGrid build_spatial_grid(int d, int n);

// Batched transforms of `howmany` interleaved fields: real data at
// [cell * howmany + f], spectral data at [mode * howmany + f]. forward is
// unnormalized, backward divides by the cell count. Plans are created under a
// global lock; execution is thread-safe.
class FFT {
public:
    FFT(const SpatialGrid& grid, int howmany);
    ~FFT();
    FFT(const FFT&) = delete;
    FFT& operator=(const FFT&) = delete;

    void forward(const double* in, cplx* out) const;
    void backward(const cplx* in, double* out) const;
    int howmany() const { return howmany_; }

private:
    const SpatialGrid* grid_;
    int howmany_;
    void* fwd_ = nullptr;
    void* bwd_ = nullptr;
};

// Convenience single-field helpers.
std::vector<cplx> fft_forward(const SpatialGrid& grid, const std::vector<double>& f);
std::vector<double> fft_backward(const SpatialGrid& grid, const std::vector<cplx>& fh);

// Zero the modes removed by the 2/3 rule, `howmany` interleaved fields.
void apply_dealias(const SpatialGrid& grid, cplx* data, size_t howmany);

// ||f||_{L^2(dx)}^2 of one spectral field.
double spectral_l2_sq(const SpatialGrid& grid, const std::vector<cplx>& fh);
// Real part of int f g dx from two spectral fields.
double spectral_inner(const SpatialGrid& grid, const std::vector<cplx>& fh, const std::vector<cplx>& gh);

// Multi-index H^N weight sum_{|alpha| <= N} k^{2 alpha}.
double sobolev_weight(const std::array<double, 3>& k, int d, int N);

}  // namespace kinelim
