#pragma once

#include <optional>
#include <vector>

#include "types.hpp"

namespace sdd {

// Support-recovery and error metrics for one frequency, computed over all
// (2p)^2 entries of the expanded matrices. An entry is an edge when
// |value| > edge_tol.
struct FrequencyMetrics {
    long tp = 0, fp = 0, tn = 0, fn = 0;
    Eigen::Index n_true_edges = 0;  // tp + fn
    Eigen::Index n_est_edges = 0;   // tp + fp
    double accuracy = 0.0;
    std::optional<double> precision;  // absent when no edges were estimated
    std::optional<double> recall;     // absent when the truth has no edges
    std::optional<double> rrmse;      // absent when the truth is all zero
};

FrequencyMetrics score(const Matrix& estimate, const Matrix& truth, double edge_tol = 1e-6);

struct MetricSummary {
    double mean = 0.0;
    double se = 0.0;       // sample standard deviation / sqrt(count); 0 for count <= 1
    long count = 0;        // frequencies with the metric defined
    long skipped = 0;      // frequencies where it was undefined
};

// Aggregate across frequencies. Undefined per-frequency values are excluded
// from the corresponding mean and counted as skipped.
struct MetricsReport {
    std::vector<FrequencyMetrics> per_frequency;
    MetricSummary precision, recall, accuracy, rrmse;
    MetricSummary true_edges, est_edges;
};

MetricsReport aggregate(std::vector<FrequencyMetrics> reports);

} // namespace sdd
