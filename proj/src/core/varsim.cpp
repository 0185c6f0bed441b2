#include "varsim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "rng.hpp"

namespace sdd {

namespace {

constexpr double stability_limit = 0.99;
constexpr double rescale_target = 0.95;
constexpr long max_retries = 100;

// Draw `count` distinct cells of a dim x dim block and fill them with
// +-Uniform(0.2, 0.5), signs equiprobable. Cell positions are sampled without
// replacement via partial Fisher-Yates over the flattened index set.
Matrix draw_sparse_block(Eigen::Index dim, Eigen::Index count, Rng& rng) {
    const Eigen::Index cells = dim * dim;
    std::vector<Eigen::Index> idx(static_cast<std::size_t>(cells));
    for (Eigen::Index i = 0; i < cells; ++i) idx[static_cast<std::size_t>(i)] = i;
    Matrix block = Matrix::Zero(dim, dim);
    for (Eigen::Index k = 0; k < count; ++k) {
        const auto pick = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(cells - k)));
        std::swap(idx[static_cast<std::size_t>(k)], idx[static_cast<std::size_t>(k + pick)]);
        const Eigen::Index flat = idx[static_cast<std::size_t>(k)];
        const double magnitude = rng.uniform(0.2, 0.5);
        const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
        block(flat / dim, flat % dim) = sign * magnitude;
    }
    return block;
}

Eigen::Index ceil_fraction(double frac, Eigen::Index cells) {
    return static_cast<Eigen::Index>(std::ceil(frac * static_cast<double>(cells)));
}

Matrix setting1_block() {
    Matrix b(3, 3);
    b << 0.5, 0.9, 0.0,
         0.0, 0.5, 0.9,
         0.0, 0.0, 0.5;
    return b;
}

} // namespace

double spectral_radius(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw ArgumentError("transition matrix must be square and non-empty");
    }
    return Eigen::EigenSolver<Matrix>(a, false).eigenvalues().cwiseAbs().maxCoeff();
}

VarModel make_var_model(const Matrix& a) {
    const double radius = spectral_radius(a);
    if (radius >= 1.0) {
        throw GenerationError("transition matrix is unstable (spectral radius " +
                              std::to_string(radius) + " >= 1)");
    }
    return VarModel{a};
}

void build_setting(int setting, std::uint64_t seed, VarModel& a1, VarModel& a2,
                   SettingInfo* info) {
    SettingInfo meta;
    meta.setting = setting;
    meta.seed = seed;

    constexpr Eigen::Index p = 54;
    Matrix a = Matrix::Zero(p, p);

    if (setting == 1) {
        const Matrix block = setting1_block();
        for (Eigen::Index k = 0; k < 18; ++k) a.block<3, 3>(3 * k, 3 * k) = block;
    } else if (setting == 2 || setting == 3) {
        Rng small_rng(derive_seed(seed, 1));
        Rng large_rng(derive_seed(seed, 2));

        Matrix small = draw_sparse_block(3, ceil_fraction(0.6, 9), small_rng);
        for (long r = 0; r < max_retries && spectral_radius(small) >= stability_limit; ++r) {
            small = draw_sparse_block(3, ceil_fraction(0.6, 9), small_rng);
        }
        if (spectral_radius(small) >= stability_limit) {
            small *= rescale_target / spectral_radius(small);
        }

        const double fill = setting == 2 ? 0.4 : 0.05;
        const Eigen::Index nnz = ceil_fraction(fill, 51 * 51);
        Matrix large = draw_sparse_block(51, nnz, large_rng);
        for (long r = 0; r < max_retries && spectral_radius(large) >= stability_limit; ++r) {
            large = draw_sparse_block(51, nnz, large_rng);
            meta.retries = r + 1;
        }
        if (spectral_radius(large) >= stability_limit) {
            large *= rescale_target / spectral_radius(large);
            meta.rescaled = true;
        }

        a.topLeftCorner(51, 51) = large;
        a.bottomRightCorner(3, 3) = small;
    } else {
        throw ArgumentError("unknown simulation setting " + std::to_string(setting) +
                            " (expected 1, 2, or 3)");
    }

    Matrix a_neg = a;
    a_neg.bottomRightCorner(3, 3) *= -1.0;

    a1 = make_var_model(a);
    a2 = make_var_model(a_neg);
    if (info != nullptr) *info = meta;
}

TimeSeriesPanel simulate_var1(const VarModel& model, Eigen::Index n, std::uint64_t seed,
                              Eigen::Index burn_in) {
    if (n < 2) throw ArgumentError("simulation length must be at least 2");
    if (burn_in < 0) throw ArgumentError("burn-in cannot be negative");
    const Eigen::Index p = model.p();

    Rng rng(derive_seed(seed, 0));
    TimeSeriesPanel panel;
    panel.data.resize(n, p);
    Vector x = Vector::Zero(p);
    Vector eps(p);
    for (Eigen::Index t = 0; t < burn_in + n; ++t) {
        for (Eigen::Index c = 0; c < p; ++c) eps(c) = rng.normal();
        x = model.a * x + eps;
        if (t >= burn_in) panel.data.row(t - burn_in) = x.transpose();
    }
    panel.channel_names.resize(static_cast<std::size_t>(p));
    for (Eigen::Index c = 0; c < p; ++c) {
        panel.channel_names[static_cast<std::size_t>(c)] = "ch" + std::to_string(c + 1);
    }
    return panel;
}

ComplexMatrix true_spectral_density(const VarModel& model, double lambda) {
    const Eigen::Index p = model.p();
    const Complex z = std::exp(Complex(0.0, -lambda));
    const ComplexMatrix transfer = ComplexMatrix::Identity(p, p) - model.a.cast<Complex>() * z;
    const ComplexMatrix inv = transfer.partialPivLu().inverse();
    return (inv * inv.adjoint()) / (2.0 * std::numbers::pi);
}

ExpandedMatrix true_difference(const VarModel& m1, const VarModel& m2, double lambda) {
    if (m1.p() != m2.p()) throw ArgumentError("true_difference: dimension mismatch");
    const ComplexMatrix f1 = true_spectral_density(m1, lambda);
    const ComplexMatrix f2 = true_spectral_density(m2, lambda);
    const ComplexMatrix diff = f1.partialPivLu().inverse() - f2.partialPivLu().inverse();
    return expand(diff);
}

} // namespace sdd
