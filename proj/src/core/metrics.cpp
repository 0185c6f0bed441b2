#include "metrics.hpp"

#include <cmath>

#include "errors.hpp"

namespace sdd {

FrequencyMetrics score(const Matrix& estimate, const Matrix& truth, double edge_tol) {
    if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols() ||
        estimate.rows() != estimate.cols()) {
        throw ArgumentError("score expects two square matrices of equal size");
    }
    if (edge_tol < 0.0) throw ArgumentError("edge tolerance must be nonnegative");

    FrequencyMetrics m;
    double num = 0.0, den = 0.0;
    for (Eigen::Index j = 0; j < truth.cols(); ++j) {
        for (Eigen::Index i = 0; i < truth.rows(); ++i) {
            const double e = estimate(i, j);
            const double t = truth(i, j);
            const bool est_edge = std::abs(e) > edge_tol;
            const bool true_edge = std::abs(t) > edge_tol;
            m.tp += est_edge && true_edge;
            m.fp += est_edge && !true_edge;
            m.fn += !est_edge && true_edge;
            m.tn += !est_edge && !true_edge;
            num += (e - t) * (e - t);
            den += t * t;
        }
    }
    const auto total = static_cast<double>(truth.size());
    m.n_true_edges = m.tp + m.fn;
    m.n_est_edges = m.tp + m.fp;
    m.accuracy = static_cast<double>(m.tp + m.tn) / total;
    if (m.n_est_edges > 0) m.precision = static_cast<double>(m.tp) / static_cast<double>(m.n_est_edges);
    if (m.n_true_edges > 0) m.recall = static_cast<double>(m.tp) / static_cast<double>(m.n_true_edges);
    if (den > 0.0) m.rrmse = std::sqrt(num / den);
    return m;
}

namespace {

template <typename Get>
MetricSummary summarize(const std::vector<FrequencyMetrics>& reports, Get get) {
    MetricSummary s;
    double sum = 0.0;
    for (const auto& r : reports) {
        if (const std::optional<double> v = get(r)) {
            sum += *v;
            ++s.count;
        } else {
            ++s.skipped;
        }
    }
    if (s.count == 0) return s;
    s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
        double ss = 0.0;
        for (const auto& r : reports) {
            if (const std::optional<double> v = get(r)) {
                ss += (*v - s.mean) * (*v - s.mean);
            }
        }
        const double sd = std::sqrt(ss / static_cast<double>(s.count - 1));
        s.se = sd / std::sqrt(static_cast<double>(s.count));
    }
    return s;
}

} // namespace

MetricsReport aggregate(std::vector<FrequencyMetrics> reports) {
    if (reports.empty()) throw ArgumentError("cannot aggregate zero reports");
    MetricsReport out;
    out.precision = summarize(reports, [](const FrequencyMetrics& r) { return r.precision; });
    out.recall = summarize(reports, [](const FrequencyMetrics& r) { return r.recall; });
    out.rrmse = summarize(reports, [](const FrequencyMetrics& r) { return r.rrmse; });
    out.accuracy = summarize(reports, [](const FrequencyMetrics& r) {
        return std::optional<double>(r.accuracy);
    });
    out.true_edges = summarize(reports, [](const FrequencyMetrics& r) {
        return std::optional<double>(static_cast<double>(r.n_true_edges));
    });
    out.est_edges = summarize(reports, [](const FrequencyMetrics& r) {
        return std::optional<double>(static_cast<double>(r.n_est_edges));
    });
    out.per_frequency = std::move(reports);
    return out;
}

} // namespace sdd
