#include "tuning.hpp"

#include <cmath>

#include "errors.hpp"

namespace sdd {

double tau_max(const ExpandedMatrix& s1, const ExpandedMatrix& s2) {
    if (s1.dim() != s2.dim()) throw ArgumentError("tau_max: dimension mismatch");
    return 2.0 * (s1.matrix() - s2.matrix()).cwiseAbs().maxCoeff();
}

std::vector<double> penalty_path(const ExpandedMatrix& s1, const ExpandedMatrix& s2,
                                 Eigen::Index k) {
    if (k < 2) throw ArgumentError("penalty path needs at least two points");
    const double top = tau_max(s1, s2);
    if (top <= 0.0) {
        throw DegeneratePathError("penalty path is degenerate: S1 and S2 are identical");
    }
    const double lo = 1e-3 * top;
    std::vector<double> taus(static_cast<std::size_t>(k));
    const double step = std::log(top / lo) / static_cast<double>(k - 1);
    for (Eigen::Index i = 0; i < k; ++i) {
        taus[static_cast<std::size_t>(i)] = top * std::exp(-step * static_cast<double>(i));
    }
    taus.front() = top;  // guard the endpoint against rounding
    taus.back() = lo;
    return taus;
}

Eigen::Index count_edges(const Matrix& delta, double threshold) {
    if (delta.rows() != delta.cols() || delta.rows() % 2 != 0) {
        throw ArgumentError("count_edges expects a square expanded matrix of even dimension");
    }
    const Eigen::Index p = delta.rows() / 2;
    Eigen::Index count = 0;
    for (Eigen::Index j = 0; j < p; ++j) {
        for (Eigen::Index i = 0; i <= j; ++i) {
            if (std::abs(delta(i, j)) > threshold) ++count;          // real block
            if (std::abs(delta(i, j + p)) > threshold) ++count;      // imaginary block
        }
    }
    return count;
}

double ebic(const Matrix& delta, const ExpandedMatrix& s1, const ExpandedMatrix& s2,
            Eigen::Index n1, Eigen::Index n2, double gamma, Eigen::Index p_channels) {
    if (n1 < 1 || n2 < 1) throw ArgumentError("sample sizes must be positive");
    if (p_channels < 1) throw ArgumentError("channel count must be positive");
    if (gamma < 0.0) throw ArgumentError("gamma must be nonnegative");
    const Matrix& m1 = s1.matrix();
    const Matrix& m2 = s2.matrix();
    const double n = static_cast<double>(std::min(n1, n2));
    const double fit = 0.5 * (m1 * delta * m2 + m2 * delta * m1 - m2 + m1).cwiseAbs().maxCoeff();
    const auto e = static_cast<double>(count_edges(delta, 1e-6));
    return n * fit + std::log(n) * e + 4.0 * gamma * e * std::log(static_cast<double>(p_channels));
}

std::size_t select_tau(const std::vector<TuningRecord>& records, bool* used_nonconverged) {
    if (records.empty()) throw ArgumentError("cannot select from an empty path");
    bool all_bad = true;
    for (const auto& r : records) all_bad = all_bad && !r.converged;
    if (used_nonconverged != nullptr) *used_nonconverged = all_bad;

    std::size_t best = records.size();
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!all_bad && !records[i].converged) continue;
        if (best == records.size() || records[i].ebic < records[best].ebic ||
            (records[i].ebic == records[best].ebic && records[i].tau > records[best].tau)) {
            best = i;
        }
    }
    return best;
}

PathResult solve_path(const ExpandedMatrix& s1, const ExpandedMatrix& s2, Eigen::Index n1,
                      Eigen::Index n2, double gamma, Eigen::Index p_channels,
                      Eigen::Index path_len, const SolverOptions& opts) {
    const std::vector<double> taus = penalty_path(s1, s2, path_len);
    SolverWorkspace ws(s1, s2, opts.rho);

    PathResult out;
    out.records.reserve(taus.size());
    std::vector<DifferenceEstimate> estimates;
    estimates.reserve(taus.size());

    WarmStart warm;
    for (double tau : taus) {
        DifferenceEstimate est = solve_sdd(ws, tau, opts, &warm);
        TuningRecord rec;
        rec.tau = tau;
        rec.edge_count = count_edges(est.delta);
        rec.ebic = ebic(est.delta, s1, s2, n1, n2, gamma, p_channels);
        rec.converged = est.converged;
        out.records.push_back(rec);
        estimates.push_back(std::move(est));
    }

    bool used_nonconverged = false;
    out.selected = select_tau(out.records, &used_nonconverged);
    out.any_converged = !used_nonconverged;
    out.estimate = std::move(estimates[out.selected]);
    return out;
}

} // namespace sdd
