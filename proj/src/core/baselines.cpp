#include "baselines.hpp"

#include <cmath>
#include <limits>

#include "errors.hpp"

namespace sdd {

namespace {

Matrix checked_inverse(const ExpandedMatrix& s, const char* name) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (s.matrix() + s.matrix().transpose()));
    if (eig.info() != Eigen::Success) throw Error("eigendecomposition failed");
    const double min_eig = eig.eigenvalues().minCoeff();
    if (min_eig <= 1e-10) {
        throw SingularityError(std::string(name) + " is numerically singular (min eigenvalue " +
                               std::to_string(min_eig) + ")");
    }
    return eig.eigenvectors() * eig.eigenvalues().cwiseInverse().asDiagonal() *
           eig.eigenvectors().transpose();
}

} // namespace

DifferenceEstimate naive_difference(const ExpandedMatrix& s1, const ExpandedMatrix& s2) {
    if (s1.dim() != s2.dim()) throw ArgumentError("naive_difference: dimension mismatch");
    const Matrix delta = checked_inverse(s1, "S1") - checked_inverse(s2, "S2");

    DifferenceEstimate out;
    out.delta = project_block_structure(delta).matrix();
    out.delta_complex = recover(out.delta, 1e-6);
    out.tau = 0.0;
    out.iterations = 0;
    out.converged = true;
    out.kkt = std::nullopt;
    return out;
}

DifferenceEstimate hard_threshold(const DifferenceEstimate& d, double t) {
    if (t < 0.0) throw ArgumentError("threshold must be nonnegative");
    DifferenceEstimate out = d;
    out.delta = (d.delta.array().abs() <= t).select(0.0, d.delta);
    out.delta_complex = recover(project_block_structure(out.delta), 1e-6);
    out.tau = t;
    return out;
}

std::vector<double> threshold_path(const DifferenceEstimate& d, Eigen::Index k) {
    if (k < 2) throw ArgumentError("threshold path needs at least two points");
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (Eigen::Index j = 0; j < d.delta.cols(); ++j) {
        for (Eigen::Index i = 0; i < d.delta.rows(); ++i) {
            const double a = std::abs(d.delta(i, j));
            if (a > 0.0) {
                lo = std::min(lo, a);
                hi = std::max(hi, a);
            }
        }
    }
    if (hi == 0.0) throw DegeneratePathError("threshold path is degenerate: estimate has no nonzero entries");

    std::vector<double> out(static_cast<std::size_t>(k));
    const double step = std::log(hi / lo) / static_cast<double>(k - 1);
    for (Eigen::Index i = 0; i < k; ++i) {
        out[static_cast<std::size_t>(i)] = lo * std::exp(step * static_cast<double>(i));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

PathResult hard_threshold_select(const DifferenceEstimate& d, const ExpandedMatrix& s1,
                                 const ExpandedMatrix& s2, Eigen::Index n1, Eigen::Index n2,
                                 double gamma, Eigen::Index p_channels, Eigen::Index k) {
    const std::vector<double> thresholds = threshold_path(d, k);

    PathResult out;
    out.records.reserve(thresholds.size());
    std::vector<DifferenceEstimate> estimates;
    estimates.reserve(thresholds.size());
    for (double t : thresholds) {
        DifferenceEstimate est = hard_threshold(d, t);
        TuningRecord rec;
        rec.tau = t;
        rec.edge_count = count_edges(est.delta);
        rec.ebic = ebic(est.delta, s1, s2, n1, n2, gamma, p_channels);
        rec.converged = true;
        out.records.push_back(rec);
        estimates.push_back(std::move(est));
    }
    out.selected = select_tau(out.records, nullptr);
    out.any_converged = true;
    out.estimate = std::move(estimates[out.selected]);
    return out;
}

} // namespace sdd
