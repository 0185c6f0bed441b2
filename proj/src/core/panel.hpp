#pragma once

#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace sdd {

// Multichannel time-series panel: rows are time points, columns are channels.
struct TimeSeriesPanel {
    Matrix data;                             // n x p, n >= 2, p >= 1
    std::vector<std::string> channel_names;  // size p
    std::optional<double> sampling_rate_hz;  // absent unless the caller knows it
    std::string condition_label;

    Eigen::Index n() const { return data.rows(); }
    Eigen::Index p() const { return data.cols(); }
};

// Read a panel from CSV. Cells are comma-separated decimal numbers; an
// optional first row of channel names is detected by failing to parse as
// numbers. With rows_are_channels the file holds one row per channel and is
// transposed on load (header names are ignored in that orientation).
// Throws ParseError (bad cell), StructureError (ragged rows), ArgumentError
// (fewer than two time points), IoError.
TimeSeriesPanel load_panel_csv(const std::string& path, bool rows_are_channels = false);

// Write rows-as-time CSV with a header of channel names. Values use %.17g so
// a load/save round trip is value-identical.
void save_panel_csv(const TimeSeriesPanel& panel, const std::string& path);

// Subtract each channel's mean.
TimeSeriesPanel demean(const TimeSeriesPanel& panel);

// Rows [start, end) as a new panel. Does not re-demean.
TimeSeriesPanel segment(const TimeSeriesPanel& panel, Eigen::Index start, Eigen::Index end);

// Plain matrix CSV helpers shared by the spectral / estimate dumps.
void save_matrix_csv(const Matrix& m, const std::string& path,
                     const std::vector<std::string>& header = {});
Matrix load_matrix_csv(const std::string& path);

// Complex matrix as interleaved re/im columns: row i holds
// re(i,0),im(i,0),...,re(i,p-1),im(i,p-1).
void save_complex_csv(const ComplexMatrix& m, const std::string& path);
ComplexMatrix load_complex_csv(const std::string& path);

} // namespace sdd
