#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/errors.hpp"
#include "core/spectral.hpp"
#include "test_util.hpp"

using namespace sdd;

namespace {

constexpr double pi = std::numbers::pi;

// Independent O(n^2) reference: P(lambda_j) = d d^H / (2 pi n) with
// d_c = sum_{t=1..n} x_{t,c} e^{-i lambda_j t}, summed term by term.
ComplexMatrix direct_periodogram(const Matrix& x, Eigen::Index j) {
    const Eigen::Index n = x.rows();
    const Eigen::Index p = x.cols();
    const double lambda = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
    ComplexVector d = ComplexVector::Zero(p);
    for (Eigen::Index t = 1; t <= n; ++t) {
        const Complex w = std::exp(Complex(0.0, -lambda * static_cast<double>(t)));
        for (Eigen::Index c = 0; c < p; ++c) d(c) += x(t - 1, c) * w;
    }
    return (d * d.adjoint()) / (2.0 * pi * static_cast<double>(n));
}

// Independent smoothed estimate: plain average with periodic index wrap.
ComplexMatrix direct_smoothed(const Matrix& x, Eigen::Index j, Eigen::Index m) {
    const Eigen::Index n = x.rows();
    ComplexMatrix acc = ComplexMatrix::Zero(x.cols(), x.cols());
    for (Eigen::Index k = j - m; k <= j + m; ++k) {
        Eigen::Index w = k % n;
        if (w < 0) w += n;
        acc += direct_periodogram(x, w);
    }
    return acc / static_cast<double>(2 * m + 1);
}

TimeSeriesPanel noise_panel(Eigen::Index n, Eigen::Index p, std::uint64_t seed) {
    Rng rng(seed);
    TimeSeriesPanel panel;
    panel.data.resize(n, p);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < p; ++j) panel.data(i, j) = rng.normal();
    return panel;
}

} // namespace

TEST_CASE("fourier grid covers [-floor((n-1)/2), floor(n/2)]") {
    const FourierGrid g4 = fourier_grid(4);
    CHECK(g4.min_index() == -1);
    CHECK(g4.max_index() == 2);
    CHECK(g4.size() == 4);

    const FourierGrid g5 = fourier_grid(5);
    CHECK(g5.min_index() == -2);
    CHECK(g5.max_index() == 2);

    double prev = -10.0;
    for (Eigen::Index j = g5.min_index(); j <= g5.max_index(); ++j) {
        const double f = g5.frequency(j);
        CHECK(f > prev);
        prev = f;
    }
    CHECK(g5.frequency(0) == 0.0);
    CHECK_THROWS_AS(g4.frequency(3), BoundsError);
    CHECK_THROWS_AS(g4.frequency(-2), BoundsError);
}

TEST_CASE("default bandwidth is ceil(n^(2/3))") {
    CHECK(default_bandwidth(1000) == 100);
    CHECK(default_bandwidth(200) == 35);
    CHECK(default_bandwidth(100) == 22);
    CHECK(default_bandwidth(2000) == 159);
    CHECK(default_bandwidth(8) == 4);
    CHECK(default_bandwidth(27) == 9);   // perfect cube: exactly 27^(2/3)
    CHECK(default_bandwidth(64) == 16);
}

TEST_CASE("nearest fourier index snaps in hz with ties to the smaller index") {
    CHECK(nearest_fourier_index(10.0, 1000, 250.0) == 40);
    CHECK(nearest_fourier_index(0.0, 1000, 250.0) == 0);
    CHECK(nearest_fourier_index(125.0, 1000, 250.0) == 500);
    // 0.1125 Hz maps exactly halfway between indices 0 and 1 when n*hz/fs = 0.5.
    CHECK(nearest_fourier_index(0.125, 1000, 250.0) == 0);
    CHECK_THROWS_AS(nearest_fourier_index(126.0, 1000, 250.0), ArgumentError);
    CHECK_THROWS_AS(nearest_fourier_index(-1.0, 1000, 250.0), ArgumentError);
    CHECK_THROWS_AS(nearest_fourier_index(10.0, 1000, -250.0), ArgumentError);
}

TEST_CASE("evenly spaced indices dedupe to the available grid") {
    const auto idx100 = evenly_spaced_indices(100, 100);
    CHECK(idx100.size() == 50);
    CHECK(idx100.front() == 0);
    CHECK(idx100.back() == 49);

    const auto idx2000 = evenly_spaced_indices(2000, 100);
    CHECK(idx2000.size() == 100);
    CHECK(idx2000.front() == 0);
    CHECK(idx2000.back() == 1000);
    for (std::size_t i = 1; i < idx2000.size(); ++i) CHECK(idx2000[i] > idx2000[i - 1]);
}

TEST_CASE("fft periodograms match the direct dft oracle") {
    for (Eigen::Index n : {16, 37, 64, 101}) {
        TimeSeriesPanel panel = noise_panel(n, 3, 1000 + static_cast<std::uint64_t>(n));
        SpectralEngine engine(panel);
        const FourierGrid& grid = engine.grid();
        for (Eigen::Index j = grid.min_index(); j <= grid.max_index(); ++j) {
            const ComplexMatrix fast = engine.periodogram(j);
            const ComplexMatrix slow = direct_periodogram(panel.data, j);
            const double scale = std::max(1e-30, slow.cwiseAbs().maxCoeff());
            CHECK((fast - slow).cwiseAbs().maxCoeff() / scale <= 1e-9);
        }
    }
}

TEST_CASE("smoothed estimates match the direct oracle including wraparound") {
    const TimeSeriesPanel panel = noise_panel(50, 2, 7);
    SpectralEngine engine(panel);
    for (Eigen::Index j : {0L, 3L, 24L, 25L, -24L}) {
        const ComplexMatrix fast = engine.smoothed(j, 6);
        const ComplexMatrix slow = direct_smoothed(panel.data, j, 6);
        const double scale = std::max(1e-30, slow.cwiseAbs().maxCoeff());
        CHECK((fast - slow).cwiseAbs().maxCoeff() / scale <= 1e-9);
    }
}

TEST_CASE("pure cosine at a grid frequency concentrates the periodogram") {
    const Eigen::Index n = 64, j = 5;
    const double lambda = 2.0 * pi * static_cast<double>(j) / static_cast<double>(n);
    TimeSeriesPanel panel;
    panel.data.resize(n, 1);
    for (Eigen::Index t = 1; t <= n; ++t) panel.data(t - 1, 0) = std::cos(lambda * static_cast<double>(t));

    SpectralEngine engine(panel);
    // |d(lambda_j)|^2 = (n/2)^2, so P = n / (8 pi).
    const double want = static_cast<double>(n) / (8.0 * pi);
    CHECK(engine.periodogram(j)(0, 0).real() == doctest::Approx(want).epsilon(1e-9));
    CHECK(engine.periodogram(-j)(0, 0).real() == doctest::Approx(want).epsilon(1e-9));
    // Energy away from +-j is numerically zero.
    CHECK(engine.periodogram(j + 7)(0, 0).real() <= 1e-12);
}

TEST_CASE("periodograms satisfy parseval") {
    const TimeSeriesPanel panel = noise_panel(§33, 3, 9);
}

TEST_CASE("periodogram energy matches the time domain (parseval)") {
    const TimeSeriesPanel panel = noise_panel(33, 3, 9);
    const auto all = periodogram_all(panel);
    double lhs = 0.0;
    for (const auto& m : all) lhs += m.real().trace();
    lhs *= 2.0 * pi / 33.0;
    const double rhs = panel.data.squaredNorm() / 33.0;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("smoothed periodogram is hermitian positive semidefinite") {
    const TimeSeriesPanel panel = noise_panel(128, 4, 12);
    SpectralEngine engine(panel);
    for (Eigen::Index j : {0L, 17L, 64L}) {
        const ComplexMatrix s = engine.smoothed(j, default_bandwidth(128));
        CHECK((s - s.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
        Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(s);
        CHECK(eig.eigenvalues().minCoeff() >= -1e-10);
    }
}

TEST_CASE("white noise smoothed spectrum approaches I/(2 pi)") {
    const Eigen::Index n = 4096;
    const TimeSeriesPanel panel = noise_panel(n, 2, 42);
    SpectralEngine engine(panel);
    const Eigen::Index m = default_bandwidth(n);
    for (Eigen::Index j : {300L, 1000L, 1800L}) {
        const ComplexMatrix s = engine.smoothed(j, m);
        CHECK(std::abs(s(0, 0).real() - 1.0 / (2.0 * pi)) <= 0.05);
        CHECK(std::abs(s(1, 1).real() - 1.0 / (2.0 * pi)) <= 0.05);
        CHECK(std::abs(s(0, 1)) <= 0.05);
    }
}

TEST_CASE("bandwidth and index validation") {
    const TimeSeriesPanel panel = noise_panel(20, 2, 5);
    SpectralEngine engine(panel);
    CHECK_THROWS_AS(engine.smoothed(0, 10), BandwidthError);   // 2*10+1 > 20
    CHECK_NOTHROW(engine.smoothed(0, 9));
    CHECK_THROWS_AS(engine.smoothed(0, -1), BandwidthError);
    CHECK_THROWS_AS(engine.smoothed(11, 2), BoundsError);
    CHECK_THROWS_AS(engine.smoothed(-10, 2), BoundsError);
}
