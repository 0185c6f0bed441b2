#pragma once

#include <vector>

#include "dtrace.hpp"
#include "expanded.hpp"
#include "tuning.hpp"

namespace sdd {

// Unpenalized plug-in difference S1^-1 - S2^-1. Requires both inputs
// symmetric with minimum eigenvalue > 1e-10; throws SingularityError
// otherwise (no pseudo-inverse fallback). Diagnostics fields (iterations,
// kkt) are absent in the result.
DifferenceEstimate naive_difference(const ExpandedMatrix& s1, const ExpandedMatrix& s2);

// Copy of the estimate with entries |value| <= t set to zero (strict
// inequality keeps values exactly at |value| = t only when |value| > t;
// t = 0 zeroes nothing that was nonzero).
DifferenceEstimate hard_threshold(const DifferenceEstimate& d, double t);

// k geometric thresholds between the smallest and largest nonzero |entry| of
// the estimate, ascending. Throws DegeneratePathError if the estimate is all
// zero, ArgumentError for k < 2.
std::vector<double> threshold_path(const DifferenceEstimate& d, Eigen::Index k = 20);

// Score every threshold with the same eBIC used for the penalized estimator
// and keep the minimizer (ties toward the larger threshold). Records reuse
// TuningRecord with tau holding the threshold.
PathResult hard_threshold_select(const DifferenceEstimate& d, const ExpandedMatrix& s1,
                                 const ExpandedMatrix& s2, Eigen::Index n1, Eigen::Index n2,
                                 double gamma, Eigen::Index p_channels, Eigen::Index k = 20);

} // namespace sdd
