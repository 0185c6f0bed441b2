#include "panel.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace sdd {

namespace {

// Parse one CSV cell as a finite double; std::from_chars rejects leading
// whitespace, so trim first. Returns false on any leftover garbage.
bool parse_cell(std::string cell, double& out) {
    const auto first = cell.find_first_not_of(" \t\r");
    if (first == std::string::npos) return false;
    const auto last = cell.find_last_not_of(" \t\r");
    cell = cell.substr(first, last - first + 1);
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct RawCsv {
    std::vector<std::string> header;  // empty if the first row parsed as data
    std::vector<std::vector<double>> rows;
};

RawCsv read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");

    RawCsv out;
    std::string line;
    long file_row = 0;
    std::size_t width = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++file_row;
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        auto cells = split_line(line);
        if (!saw_data) {
            // First non-empty row: header iff any cell is non-numeric.
            bool all_numeric = true;
            std::vector<double> values(cells.size());
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (!parse_cell(cells[c], values[c])) {
                    all_numeric = false;
                    break;
                }
            }
            width = cells.size();
            saw_data = true;
            if (all_numeric) {
                out.rows.push_back(std::move(values));
            } else {
                out.header.assign(cells.begin(), cells.end());
            }
            continue;
        }
        if (cells.size() != width) {
            throw StructureError("ragged CSV: row " + std::to_string(file_row) + " of '" + path +
                                 "' has " + std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(width));
        }
        std::vector<double> values(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (!parse_cell(cells[c], values[c])) {
                throw ParseError("cannot parse '" + cells[c] + "' in '" + path + "'",
                                 file_row, static_cast<long>(c + 1));
            }
        }
        out.rows.push_back(std::move(values));
    }
    if (!saw_data || out.rows.empty()) throw ArgumentError("'" + path + "' contains no data rows");
    return out;
}

Matrix to_matrix(const std::vector<std::vector<double>>& rows) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

} // namespace

TimeSeriesPanel load_panel_csv(const std::string& path, bool rows_are_channels) {
    RawCsv raw = read_csv(path);
    Matrix m = to_matrix(raw.rows);
    if (rows_are_channels) m.transposeInPlace();

    TimeSeriesPanel panel;
    panel.data = std::move(m);
    if (panel.n() < 2) throw ArgumentError("panel '" + path + "' needs at least two time points");
    if (!rows_are_channels && !raw.header.empty() &&
        raw.header.size() == static_cast<std::size_t>(panel.p())) {
        panel.channel_names = std::move(raw.header);
    } else {
        panel.channel_names.resize(static_cast<std::size_t>(panel.p()));
        for (Eigen::Index j = 0; j < panel.p(); ++j)
            panel.channel_names[static_cast<std::size_t>(j)] = "ch" + std::to_string(j + 1);
    }
    return panel;
}

void save_panel_csv(const TimeSeriesPanel& panel, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    for (Eigen::Index j = 0; j < panel.p(); ++j) {
        if (j) out << ',';
        out << panel.channel_names[static_cast<std::size_t>(j)];
    }
    out << '\n';
    for (Eigen::Index i = 0; i < panel.n(); ++i) {
        for (Eigen::Index j = 0; j < panel.p(); ++j) {
            if (j) out << ',';
            out << format_value(panel.data(i, j));
        }
        out << '\n';
    }
    if (!out) throw IoError("write to '" + path + "' failed");
}

TimeSeriesPanel demean(const TimeSeriesPanel& panel) {
    TimeSeriesPanel out = panel;
    out.data.rowwise() -= panel.data.colwise().mean();
    return out;
}

TimeSeriesPanel segment(const TimeSeriesPanel& panel, Eigen::Index start, Eigen::Index end) {
    if (start < 0 || end > panel.n() || start >= end) {
        throw BoundsError("segment [" + std::to_string(start) + ", " + std::to_string(end) +
                          ") out of range for panel with " + std::to_string(panel.n()) + " rows");
    }
    TimeSeriesPanel out = panel;
    out.data = panel.data.middleRows(start, end - start).eval();
    return out;
}

void save_matrix_csv(const Matrix& m, const std::string& path,
                     const std::vector<std::string>& header) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    if (!header.empty()) {
        for (std::size_t j = 0; j < header.size(); ++j) {
            if (j) out << ',';
            out << header[j];
        }
        out << '\n';
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) out << ',';
            out << format_value(m(i, j));
        }
        out << '\n';
    }
    if (!out) throw IoError("write to '" + path + "' failed");
}

Matrix load_matrix_csv(const std::string& path) {
    return to_matrix(read_csv(path).rows);
}

void save_complex_csv(const ComplexMatrix& m, const std::string& path) {
    std::vector<std::string> header;
    header.reserve(static_cast<std::size_t>(2 * m.cols()));
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        header.push_back("re_" + std::to_string(j + 1));
        header.push_back("im_" + std::to_string(j + 1));
    }
    Matrix flat(m.rows(), 2 * m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            flat(i, 2 * j) = m(i, j).real();
            flat(i, 2 * j + 1) = m(i, j).imag();
        }
    }
    save_matrix_csv(flat, path, header);
}

ComplexMatrix load_complex_csv(const std::string& path) {
    Matrix flat = load_matrix_csv(path);
    if (flat.cols() % 2 != 0) {
        throw StructureError("'" + path + "' is not an interleaved re/im matrix (odd column count)");
    }
    ComplexMatrix m(flat.rows(), flat.cols() / 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = Complex(flat(i, 2 * j), flat(i, 2 * j + 1));
    return m;
}

} // namespace sdd
