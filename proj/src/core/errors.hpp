#pragma once

#include <stdexcept>
#include <string>

namespace sdd {

// Error taxonomy shared by the C++ core and mapped onto C API status codes.
// Every condition a caller can trigger with bad input derives from Error;
// anything else escaping the core is a plain std::exception (internal bug).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument values: non-positive sizes, out-of-range tunables, etc.
class ArgumentError : public Error {
public:
    using Error::Error;
};

// CSV cell that does not parse as a finite number; message carries row/column.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, long row, long col)
        : Error(msg + " (row " + std::to_string(row) + ", column " + std::to_string(col) + ")"),
          row_(row), col_(col) {}
    long row() const { return row_; }
    long col() const { return col_; }

private:
    long row_;
    long col_;
};

// Structural problems: ragged CSV rows, block-structure violations.
class StructureError : public Error {
public:
    using Error::Error;
};

// Index or range outside the data.
class BoundsError : public Error {
public:
    using Error::Error;
};

// Smoothing bandwidth incompatible with the sample length.
class BandwidthError : public Error {
public:
    using Error::Error;
};

// Symmetric input with eigenvalues below the positive-semidefinite tolerance.
class NotPsdError : public Error {
public:
    using Error::Error;
};

// Matrix inversion requested on a numerically singular input.
class SingularityError : public Error {
public:
    using Error::Error;
};

// Tuning path cannot be formed (identical inputs, all-zero estimate, ...).
class DegeneratePathError : public Error {
public:
    using Error::Error;
};

// Random model construction failed its stability safeguard.
class GenerationError : public Error {
public:
    using Error::Error;
};

// Filesystem read/write failures.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace sdd
