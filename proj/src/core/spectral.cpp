#include "spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

#include "errors.hpp"

namespace sdd {

namespace {

// FFTW planning is not thread-safe; execution of a plan is.
std::mutex fftw_plan_mutex;

constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace

double FourierGrid::frequency(Eigen::Index j) const {
    if (!contains(j)) {
        throw BoundsError("Fourier index " + std::to_string(j) + " outside grid [" +
                          std::to_string(min_index()) + ", " + std::to_string(max_index()) +
                          "] for n = " + std::to_string(n));
    }
    return two_pi * static_cast<double>(j) / static_cast<double>(n);
}

FourierGrid fourier_grid(Eigen::Index n) {
    if (n < 2) throw ArgumentError("fourier_grid needs n >= 2");
    return FourierGrid{n};
}

Eigen::Index default_bandwidth(Eigen::Index n) {
    if (n < 2) throw ArgumentError("default_bandwidth needs n >= 2");
    // Smallest m with m^3 >= n^2, i.e. ceil(n^(2/3)) without floating-point
    // edge cases at perfect cubes.
    const auto n2 = static_cast<unsigned long long>(n) * static_cast<unsigned long long>(n);
    auto m = static_cast<Eigen::Index>(std::floor(std::pow(static_cast<double>(n), 2.0 / 3.0))) - 2;
    if (m < 1) m = 1;
    while (static_cast<unsigned long long>(m) * m * m < n2) ++m;
    return m;
}

Eigen::Index nearest_fourier_index_rad(double target_rad, Eigen::Index n) {
    if (n < 2) throw ArgumentError("nearest_fourier_index needs n >= 2");
    if (!(target_rad >= 0.0 && target_rad <= std::numbers::pi)) {
        throw ArgumentError("target frequency " + std::to_string(target_rad) +
                            " rad outside [0, pi]");
    }
    const double exact = target_rad * static_cast<double>(n) / two_pi;
    // Round half toward the smaller index.
    auto j = static_cast<Eigen::Index>(std::ceil(exact - 0.5));
    const FourierGrid grid{n};
    if (j > grid.max_index()) j = grid.max_index();
    if (j < 0) j = 0;
    return j;
}

Eigen::Index nearest_fourier_index(double target_hz, Eigen::Index n, double fs) {
    if (!(fs > 0.0)) throw ArgumentError("sampling rate must be positive");
    if (!(target_hz >= 0.0 && target_hz <= fs / 2.0)) {
        throw ArgumentError("target frequency " + std::to_string(target_hz) +
                            " Hz outside [0, " + std::to_string(fs / 2.0) + "] (Nyquist)");
    }
    return nearest_fourier_index_rad(two_pi * target_hz / fs, n);
}

std::vector<Eigen::Index> evenly_spaced_indices(Eigen::Index n, Eigen::Index count) {
    if (count < 1) throw ArgumentError("need at least one frequency");
    const double hi = std::numbers::pi - 1.0 / static_cast<double>(n);
    std::vector<Eigen::Index> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Eigen::Index k = 0; k < count; ++k) {
        const double target =
            count == 1 ? 0.0 : hi * static_cast<double>(k) / static_cast<double>(count - 1);
        const Eigen::Index j = nearest_fourier_index_rad(target, n);
        if (out.empty() || out.back() != j) out.push_back(j);
    }
    return out;
}

SpectralEngine::SpectralEngine(const TimeSeriesPanel& panel)
    : n_(panel.n()), p_(panel.p()), grid_(fourier_grid(panel.n())) {
    // Real-to-complex DFT per channel. FFTW computes
    //   F_c(k) = sum_{s=0..n-1} x_{s+1,c} e^{-2 pi i k s / n},
    // which differs from the t = 1..n convention only by the phase
    // e^{-i lambda_k}; the phase cancels in d d^H, so it is omitted.
    const auto half = static_cast<std::size_t>(n_ / 2 + 1);
    dft_.resize(n_ / 2 + 1, p_);

    std::vector<double> in(static_cast<std::size_t>(n_));
    std::vector<fftw_complex> out(half);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n_), in.data(), out.data(), FFTW_ESTIMATE);
    }
    if (!plan) throw Error("FFTW plan creation failed");
    for (Eigen::Index c = 0; c < p_; ++c) {
        for (Eigen::Index t = 0; t < n_; ++t) in[static_cast<std::size_t>(t)] = panel.data(t, c);
        fftw_execute_dft_r2c(plan, in.data(), out.data());
        for (Eigen::Index k = 0; k <= n_ / 2; ++k) {
            dft_(k, c) = Complex(out[static_cast<std::size_t>(k)][0],
                                 out[static_cast<std::size_t>(k)][1]);
        }
    }
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(plan);
    }
}

ComplexVector SpectralEngine::dft_column(Eigen::Index k) const {
    Eigen::Index w = k % n_;
    if (w < 0) w += n_;
    if (w <= n_ / 2) return dft_.row(w).transpose();
    return dft_.row(n_ - w).transpose().conjugate();
}

ComplexMatrix SpectralEngine::periodogram(Eigen::Index j) const {
    const ComplexVector d = dft_column(j);
    return (d * d.adjoint()) / (two_pi * static_cast<double>(n_));
}

ComplexMatrix SpectralEngine::smoothed(Eigen::Index j, Eigen::Index bandwidth) const {
    if (!grid_.contains(j)) {
        throw BoundsError("Fourier index " + std::to_string(j) + " outside grid for n = " +
                          std::to_string(n_));
    }
    if (bandwidth < 0 || 2 * bandwidth + 1 > n_) {
        throw BandwidthError("smoothing span 2*" + std::to_string(bandwidth) +
                             "+1 must lie in [1, " + std::to_string(n_) + "]");
    }
    ComplexMatrix acc = ComplexMatrix::Zero(p_, p_);
    for (Eigen::Index k = j - bandwidth; k <= j + bandwidth; ++k) {
        const ComplexVector d = dft_column(k);
        acc.noalias() += d * d.adjoint();
    }
    acc /= two_pi * static_cast<double>(n_) * static_cast<double>(2 * bandwidth + 1);
    return acc;
}

std::vector<ComplexMatrix> periodogram_all(const TimeSeriesPanel& panel) {
    SpectralEngine engine(panel);
    const FourierGrid& grid = engine.grid();
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(grid.size()));
    for (Eigen::Index j = grid.min_index(); j <= grid.max_index(); ++j) {
        out.push_back(engine.periodogram(j));
    }
    return out;
}

} // namespace sdd
