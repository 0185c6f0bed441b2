#pragma once

#include <cstdint>
#include <vector>

#include "expanded.hpp"
#include "panel.hpp"
#include "types.hpp"

namespace sdd {

// Fourier grid for sample length n: indices j in [-floor((n-1)/2), floor(n/2)],
// frequencies lambda_j = 2*pi*j/n.
struct FourierGrid {
    Eigen::Index n = 0;

    Eigen::Index min_index() const { return -((n - 1) / 2); }
    Eigen::Index max_index() const { return n / 2; }
    Eigen::Index size() const { return n; }
    bool contains(Eigen::Index j) const { return j >= min_index() && j <= max_index(); }
    double frequency(Eigen::Index j) const;  // throws BoundsError if j outside grid
};

FourierGrid fourier_grid(Eigen::Index n);

// Default smoothing span: ceil(n^(2/3)), computed exactly in integers.
Eigen::Index default_bandwidth(Eigen::Index n);

// Grid index whose frequency is closest to target_hz given sampling rate fs
// (ties toward the smaller index). target_hz must lie in [0, fs/2].
Eigen::Index nearest_fourier_index(double target_hz, Eigen::Index n, double fs);

// Same in angular units, target in [0, pi].
Eigen::Index nearest_fourier_index_rad(double target_rad, Eigen::Index n);

// count evenly spaced targets in [0, pi - 1/n] snapped to the grid, duplicates
// removed (order preserved). n = 100 yields the 50 distinct indices 0..49.
std::vector<Eigen::Index> evenly_spaced_indices(Eigen::Index n, Eigen::Index count);

// Per-panel spectral engine. Caches the per-channel DFT
//   d_c(lambda_j) = sum_{t=1..n} x_{t,c} e^{-i lambda_j t}
// so periodograms at arbitrary grid indices are cheap outer products.
// The panel should be demeaned first; the engine does not alter the data.
// Thread safety: const methods are safe to call concurrently after
// construction.
class SpectralEngine {
public:
    explicit SpectralEngine(const TimeSeriesPanel& panel);

    Eigen::Index n() const { return n_; }
    Eigen::Index p() const { return p_; }
    const FourierGrid& grid() const { return grid_; }

    // Raw periodogram P(lambda_j) = d d^H / (2 pi n). Hermitian PSD of rank 1.
    // j may be any integer; it is wrapped with period n onto the grid.
    ComplexMatrix periodogram(Eigen::Index j) const;

    // Smoothed periodogram: (2M+1)^-1 sum_{k=j-M}^{j+M} P(lambda_k) with
    // periodic index wraparound. Requires 1 <= 2M+1 <= n (BandwidthError)
    // and j on the grid (BoundsError).
    ComplexMatrix smoothed(Eigen::Index j, Eigen::Index bandwidth) const;

private:
    // DFT coefficient vector at wrapped index k (one column per channel draw).
    ComplexVector dft_column(Eigen::Index k) const;

    Eigen::Index n_ = 0;
    Eigen::Index p_ = 0;
    FourierGrid grid_;
    // dft_(k, c) for k = 0..n/2 from the real-to-complex transform; negative
    // indices come from conjugate symmetry.
    ComplexMatrix dft_;
};

// All raw periodograms over the full grid, ordered by index. O(n p^2) memory;
// intended for small inputs and tests.
std::vector<ComplexMatrix> periodogram_all(const TimeSeriesPanel& panel);

} // namespace sdd
