#include "expanded.hpp"

#include "errors.hpp"

namespace sdd {

namespace {

void require_even(const Matrix& raw) {
    if (raw.rows() != raw.cols() || raw.rows() % 2 != 0 || raw.rows() == 0) {
        throw ArgumentError("expanded matrix must be square with even dimension, got " +
                            std::to_string(raw.rows()) + "x" + std::to_string(raw.cols()));
    }
}

} // namespace

double ExpandedMatrix::structure_deviation(const Matrix& raw) {
    require_even(raw);
    const Eigen::Index p = raw.rows() / 2;
    const double d1 = (raw.topLeftCorner(p, p) - raw.bottomRightCorner(p, p)).cwiseAbs().maxCoeff();
    const double d2 = (raw.bottomLeftCorner(p, p) + raw.topRightCorner(p, p)).cwiseAbs().maxCoeff();
    return std::max(d1, d2);
}

ExpandedMatrix ExpandedMatrix::from_raw(const Matrix& raw, double tol) {
    const double dev = structure_deviation(raw);
    if (dev > tol) {
        throw StructureError("block-structure violation: max deviation " + std::to_string(dev) +
                             " exceeds tolerance " + std::to_string(tol));
    }
    return ExpandedMatrix(raw);
}

ExpandedMatrix expand(const ComplexMatrix& f) {
    if (f.rows() != f.cols() || f.rows() == 0) {
        throw ArgumentError("expand needs a square non-empty complex matrix");
    }
    const Eigen::Index p = f.rows();
    Matrix m(2 * p, 2 * p);
    const Matrix a = f.real();
    const Matrix b = f.imag();
    m.topLeftCorner(p, p) = a;
    m.bottomRightCorner(p, p) = a;
    m.bottomLeftCorner(p, p) = b;
    m.topRightCorner(p, p) = -b;
    return ExpandedMatrix(std::move(m));
}

ComplexMatrix recover(const Matrix& raw, double tol) {
    const double dev = ExpandedMatrix::structure_deviation(raw);
    if (dev > tol) {
        throw StructureError("recover: block-structure violation " + std::to_string(dev) +
                             " exceeds tolerance " + std::to_string(tol));
    }
    const Eigen::Index p = raw.rows() / 2;
    ComplexMatrix f(p, p);
    f.real() = raw.topLeftCorner(p, p);
    f.imag() = raw.bottomLeftCorner(p, p);
    return f;
}

ComplexMatrix recover(const ExpandedMatrix& s, double tol) {
    return recover(s.matrix(), tol);
}

ExpandedMatrix project_block_structure(const Matrix& raw) {
    require_even(raw);
    const Eigen::Index p = raw.rows() / 2;
    const Matrix a = 0.5 * (raw.topLeftCorner(p, p) + raw.bottomRightCorner(p, p));
    const Matrix b = 0.5 * (raw.bottomLeftCorner(p, p) - raw.topRightCorner(p, p));
    Matrix m(2 * p, 2 * p);
    m.topLeftCorner(p, p) = a;
    m.bottomRightCorner(p, p) = a;
    m.bottomLeftCorner(p, p) = b;
    m.topRightCorner(p, p) = -b;
    return ExpandedMatrix(std::move(m));
}

} // namespace sdd
