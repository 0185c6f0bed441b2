#pragma once

#include <vector>

#include "dtrace.hpp"
#include "expanded.hpp"

namespace sdd {

// Largest useful penalty: 2 * max|S1 - S2|. At this level the zero matrix
// satisfies the optimality condition, so the path top is exactly sparse.
double tau_max(const ExpandedMatrix& s1, const ExpandedMatrix& s2);

// k log-linearly spaced penalties from 0.001*tau_max up to tau_max, returned
// strictly descending (solve order, enabling warm starts). Throws
// DegeneratePathError when S1 == S2 entrywise (tau_max = 0), ArgumentError
// for k < 2.
std::vector<double> penalty_path(const ExpandedMatrix& s1, const ExpandedMatrix& s2,
                                 Eigen::Index k = 20);

// Paper-style edge count |E| of an expanded difference: entries with
// |value| > threshold in the upper triangles (diagonals included) of the
// leading p x p block and of the p x p block to its right.
Eigen::Index count_edges(const Matrix& delta, double threshold = 1e-6);

// Extended BIC with the max-norm fit term:
//   min(n1,n2) * |(S1 D S2 + S2 D S1 - S2 + S1)/2|_inf
//   + log(min(n1,n2)) * |E| + 4 * gamma * |E| * log(p_channels)
// where p_channels is the original channel count (not 2p) and |E| uses
// count_edges at threshold 1e-6.
double ebic(const Matrix& delta, const ExpandedMatrix& s1, const ExpandedMatrix& s2,
            Eigen::Index n1, Eigen::Index n2, double gamma, Eigen::Index p_channels);

struct TuningRecord {
    double tau = 0.0;
    Eigen::Index edge_count = 0;
    double ebic = 0.0;
    bool converged = false;
};

struct PathResult {
    std::vector<TuningRecord> records;  // in solve order (descending tau)
    std::size_t selected = 0;           // index into records
    DifferenceEstimate estimate;        // estimate at the selected penalty
    bool any_converged = true;          // false if selection had to use
                                        // non-converged solutions only
};

// Index of the minimum-eBIC record. Non-converged records are excluded unless
// every record is non-converged; ties break toward the larger tau.
std::size_t select_tau(const std::vector<TuningRecord>& records, bool* used_nonconverged = nullptr);

// Solve the full penalty path with warm starts and pick the eBIC minimizer.
PathResult solve_path(const ExpandedMatrix& s1, const ExpandedMatrix& s2, Eigen::Index n1,
                      Eigen::Index n2, double gamma, Eigen::Index p_channels,
                      Eigen::Index path_len = 20, const SolverOptions& opts = {});

} // namespace sdd
