#pragma once

#include <cstdint>

#include "expanded.hpp"
#include "panel.hpp"
#include "types.hpp"

namespace sdd {

// Stationary VAR(1) process x_t = A x_{t-1} + eps_t with eps ~ N(0, I).
struct VarModel {
    Matrix a;  // p x p transition matrix, spectral radius < 1

    Eigen::Index p() const { return a.rows(); }
};

double spectral_radius(const Matrix& a);

// Wrap a transition matrix, enforcing squareness and spectral radius < 1
// (GenerationError otherwise).
VarModel make_var_model(const Matrix& a);

// Metadata of a constructed simulation setting.
struct SettingInfo {
    int setting = 0;
    std::uint64_t seed = 0;
    long retries = 0;       // stability re-draws of the large block
    bool rescaled = false;  // large block scaled down to reach stability
};

// The three benchmark settings, all with p = 54 channels. Setting 1 is
// deterministic: 18 copies of the block [[.5,.9,0],[0,.5,.9],[0,0,.5]] down
// the diagonal. Settings 2 and 3 draw one 51 x 51 block with ceil(40%) resp.
// ceil(5%) of its entries nonzero and one 3 x 3 block with ceil(60%) nonzero;
// values are +-Uniform(0.2, 0.5) with equal sign probability. The second
// condition negates the final 3 x 3 block. If the large block is unstable
// (radius >= 0.99) it is redrawn up to 100 times and then rescaled to radius
// 0.95; info reports retries and rescaling.
void build_setting(int setting, std::uint64_t seed, VarModel& a1, VarModel& a2,
                   SettingInfo* info = nullptr);

// Simulate n rows after discarding burn_in initial rows, starting from
// x_0 = 0. Deterministic for a given seed; the innovation stream is row-major
// (p normals per time step in channel order).
TimeSeriesPanel simulate_var1(const VarModel& model, Eigen::Index n, std::uint64_t seed,
                              Eigen::Index burn_in = 1000);

// f(lambda) = (2 pi)^-1 Ainv Ainv^H with Ainv = (I - A e^{-i lambda})^-1.
// Hermitian positive definite for stable models.
ComplexMatrix true_spectral_density(const VarModel& model, double lambda);

// Expanded difference of inverse spectral densities
// expand(f1)^-1 - expand(f2)^-1, computed on the complex side and expanded.
ExpandedMatrix true_difference(const VarModel& m1, const VarModel& m2, double lambda);

} // namespace sdd
