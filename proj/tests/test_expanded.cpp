#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "core/errors.hpp"
#include "core/expanded.hpp"
#include "test_util.hpp"

using namespace sdd;

TEST_CASE("expand lays out [[A,-B],[B,A]]") {
    ComplexMatrix f(2, 2);
    f << Complex(1, 0), Complex(0, 1),
         Complex(0, -1), Complex(1, 0);
    const Matrix m = expand(f).matrix();
    Matrix want(4, 4);
    want << 1, 0, 0, -1,
            0, 1, 1, 0,
            0, 1, 1, 0,
            -1, 0, 0, 1;
    CHECK((m - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("recover inverts expand exactly") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const ComplexMatrix f = testutil::random_complex(1 + t % 7, rng);
        const ComplexMatrix back = recover(expand(f));
        CHECK((back - f).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("hermitian input gives a symmetric expansion") {
    Rng rng(22);
    const ComplexMatrix f = testutil::random_hermitian_pd(5, rng);
    const Matrix m = expand(f).matrix();
    CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("expand is a ring homomorphism") {
    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        const Eigen::Index p = 1 + t % 6;
        const ComplexMatrix f = testutil::random_complex(p, rng);
        const ComplexMatrix g = testutil::random_complex(p, rng);
        const Matrix sum = expand(f).matrix() + expand(g).matrix();
        CHECK((expand(f + g).matrix() - sum).cwiseAbs().maxCoeff() <= 1e-12);
        const Matrix prod = expand(f).matrix() * expand(g).matrix();
        CHECK((expand(f * g).matrix() - prod).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("expansion of the inverse is the inverse of the expansion") {
    // For Hermitian positive definite f, expand(f) expand(f^-1) = I.
    Rng rng(24);
    for (int t = 0; t < 100; ++t) {
        const Eigen::Index p = 1 + t % 6;
        const ComplexMatrix f = testutil::random_hermitian_pd(p, rng);
        const ComplexMatrix finv = f.partialPivLu().inverse();
        const Matrix prod = expand(f).matrix() * expand(finv).matrix();
        const Matrix eye = Matrix::Identity(2 * p, 2 * p);
        CHECK((prod - eye).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("expansion doubles the multiplicity of hermitian eigenvalues") {
    Rng rng(25);
    const Eigen::Index p = 4;
    const ComplexMatrix f = testutil::random_hermitian_pd(p, rng);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> ec(f);
    Eigen::SelfAdjointEigenSolver<Matrix> er(expand(f).matrix());
    std::vector<double> doubled;
    for (Eigen::Index i = 0; i < p; ++i) {
        doubled.push_back(ec.eigenvalues()(i));
        doubled.push_back(ec.eigenvalues()(i));
    }
    std::sort(doubled.begin(), doubled.end());
    for (Eigen::Index i = 0; i < 2 * p; ++i) {
        CHECK(er.eigenvalues()(i) == doctest::Approx(doubled[static_cast<std::size_t>(i)]).epsilon(1e-9));
    }
}

TEST_CASE("project averages the blocks") {
    Matrix raw(2, 2);
    raw << 0, 0,
           0, 2;
    const Matrix m = project_block_structure(raw).matrix();
    CHECK(m(0, 0) == 1.0);
    CHECK(m(1, 1) == 1.0);
    CHECK(m(0, 1) == 0.0);
    CHECK(m(1, 0) == 0.0);
}

TEST_CASE("projection is idempotent and exact on valid input") {
    Rng rng(26);
    const ComplexMatrix f = testutil::random_complex(4, rng);
    const Matrix m = expand(f).matrix();
    CHECK((project_block_structure(m).matrix() - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("structure validation reports the deviation") {
    Matrix raw = Matrix::Zero(4, 4);
    raw(0, 0) = 1.0;  // top-left disagrees with bottom-right by 1
    CHECK(ExpandedMatrix::structure_deviation(raw) == 1.0);
    CHECK_THROWS_AS(ExpandedMatrix::from_raw(raw), StructureError);
    CHECK_THROWS_AS(recover(raw), StructureError);

    Matrix odd = Matrix::Zero(3, 3);
    CHECK_THROWS_AS(project_block_structure(odd), ArgumentError);
}
