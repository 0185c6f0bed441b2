#pragma once

#include "types.hpp"

namespace sdd {

// Real 2p x 2p image of a complex p x p matrix F = A + iB:
//
//     [ A  -B ]
//     [ B   A ]
//
// The map is a ring homomorphism (sums and products of images are images),
// images of Hermitian matrices are symmetric, and the image of F^-1 is the
// inverse of the image of F. ExpandedMatrix owns the invariant that the four
// blocks are consistent; construct via expand(), project_block_structure(),
// or from_raw() which validates.
class ExpandedMatrix {
public:
    ExpandedMatrix() = default;

    // Dimension 2p.
    Eigen::Index dim() const { return m_.rows(); }
    // Channel count p.
    Eigen::Index p() const { return m_.rows() / 2; }

    const Matrix& matrix() const { return m_; }

    // Block accessors (copies).
    Matrix real_block() const { return m_.topLeftCorner(p(), p()); }
    Matrix imag_block() const { return m_.bottomLeftCorner(p(), p()); }

    // Largest block-consistency deviation of a raw matrix:
    // max over |S11-S22| and |S21+S12|.
    static double structure_deviation(const Matrix& raw);

    // Wrap a raw matrix, requiring structure_deviation <= tol.
    // Throws StructureError (reporting the deviation) or ArgumentError
    // (odd dimension).
    static ExpandedMatrix from_raw(const Matrix& raw, double tol = 1e-8);

    friend ExpandedMatrix expand(const ComplexMatrix& f);
    friend ExpandedMatrix project_block_structure(const Matrix& raw);

private:
    explicit ExpandedMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

// Build [[A,-B],[B,A]] from F = A + iB.
ExpandedMatrix expand(const ComplexMatrix& f);

// Recover A + iB from the (1,1) and (2,1) blocks. The input must satisfy the
// block structure within tol (checked; throws StructureError).
ComplexMatrix recover(const ExpandedMatrix& s, double tol = 1e-8);
ComplexMatrix recover(const Matrix& raw, double tol = 1e-8);

// Nearest matrix with exact block structure:
// A = (S11 + S22)/2, B = (S21 - S12)/2. Throws ArgumentError on odd dimension.
ExpandedMatrix project_block_structure(const Matrix& raw);

} // namespace sdd
