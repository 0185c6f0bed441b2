#pragma once

#include <Eigen/Dense>
#include <complex>
#include <filesystem>
#include <random>
#include <string>

#include "core/rng.hpp"
#include "core/types.hpp"

namespace testutil {

// Random complex matrix with entries uniform in [-1, 1]^2.
inline sdd::ComplexMatrix random_complex(Eigen::Index p, sdd::Rng& rng) {
    sdd::ComplexMatrix m(p, p);
    for (Eigen::Index j = 0; j < p; ++j)
        for (Eigen::Index i = 0; i < p; ++i)
            m(i, j) = sdd::Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return m;
}

// Random Hermitian positive definite matrix with eigenvalues in
// [min_eig, min_eig + spread].
inline sdd::ComplexMatrix random_hermitian_pd(Eigen::Index p, sdd::Rng& rng,
                                              double min_eig = 0.5, double spread = 1.5) {
    const sdd::ComplexMatrix g = random_complex(p, rng);
    Eigen::SelfAdjointEigenSolver<sdd::ComplexMatrix> eig(g + g.adjoint());
    sdd::ComplexVector vals(p);
    for (Eigen::Index i = 0; i < p; ++i) vals(i) = min_eig + rng.uniform() * spread;
    return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().adjoint();
}

// Random real symmetric matrix with entries in [-1, 1].
inline sdd::Matrix random_symmetric(Eigen::Index d, sdd::Rng& rng) {
    sdd::Matrix m(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i)
            m(i, j) = rng.uniform(-1.0, 1.0);
    return 0.5 * (m + m.transpose()).eval();
}

// Scratch directory under the system temp root, unique per call.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                (tag + "-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

} // namespace testutil
