#pragma once

#include <optional>
#include <vector>

#include "expanded.hpp"
#include "types.hpp"

namespace sdd {

// D-trace loss for the inverse-difference target, with <A,B> = tr(A B^T):
//   L(D; S1, S2) = 1/4 (<S2 D, D S1> + <S1 D, D S2>) - <D, S2 - S1>.
// Convex in D for positive semidefinite S1, S2; for positive definite inputs
// the unique unpenalized minimizer is S1^-1 - S2^-1.
double dtrace_loss(const Matrix& d, const ExpandedMatrix& s1, const ExpandedMatrix& s2);

// dL/dD = (S2 D S1 + S1 D S2)/2 - (S2 - S1).
Matrix dtrace_gradient(const Matrix& d, const ExpandedMatrix& s1, const ExpandedMatrix& s2);

// Max-norm violation of the subgradient optimality condition of
// L(D) + tau*|D|_1: |g_ij + tau*sign(D_ij)| where D_ij != 0,
// max(0, |g_ij| - tau) where D_ij = 0.
double kkt_residual(const Matrix& d, const ExpandedMatrix& s1, const ExpandedMatrix& s2,
                    double tau);

struct SolverOptions {
    double rho = 1.0;
    long max_iters = 2000;
    double primal_tol = 1e-7;  // absolute, max-norm
    double dual_tol = 1e-7;    // absolute, max-norm
    bool symmetrize = true;    // replace D with (D + D^T)/2 after solving
    // Entries with |value| below this are snapped to exact zero post-solve.
    double zero_tol = 1e-10;
    // Record the penalized objective per iteration in diagnostics.
    bool track_objective = false;
};

struct DifferenceEstimate {
    Matrix delta;                  // 2p x 2p expanded difference
    ComplexMatrix delta_complex;   // p x p recovered difference
    double tau = 0.0;              // penalty level (threshold for baselines)
    long iterations = 0;
    bool converged = true;
    std::optional<double> kkt = std::nullopt;  // absent for baseline estimates
    std::vector<double> objective_trace;       // filled when track_objective
};

// Warm-start state; a default-constructed WarmStart means a cold start.
struct WarmStart {
    Matrix d1, d2, z, u1, u2;
    bool valid = false;
};

// Eigendecompositions of S1 and S2 plus derived quantities shared across all
// penalty levels at one frequency. Constructing it validates symmetry (1e-8)
// and positive semidefiniteness (eigenvalues >= -1e-8); throws ArgumentError
// or NotPsdError.
class SolverWorkspace {
public:
    SolverWorkspace(const ExpandedMatrix& s1, const ExpandedMatrix& s2, double rho);

    const ExpandedMatrix& s1() const { return s1_; }
    const ExpandedMatrix& s2() const { return s2_; }
    double rho() const { return rho_; }

private:
    friend DifferenceEstimate solve_sdd(const SolverWorkspace&, double, const SolverOptions&,
                                        WarmStart*);
    ExpandedMatrix s1_, s2_;
    double rho_;
    Matrix q1_, q2_;    // eigenvectors of S1, S2
    Vector e1_, e2_;    // eigenvalues of S1, S2
    Matrix den12_;      // (e1_a e2_b)/2 + rho  (for the S1 . S2 term)
    Matrix den21_;      // (e2_a e1_b)/2 + rho  (for the S2 . S1 term)
    Matrix diff_;       // S2 - S1
};

// Minimize L(D; S1, S2) + tau * sum_ij |D_ij| over real 2p x 2p matrices by
// consensus ADMM. The penalty covers every entry including the diagonal.
// Non-convergence within max_iters is reported via converged = false, not an
// exception. With warm != nullptr the solver starts from and updates the state.
DifferenceEstimate solve_sdd(const SolverWorkspace& ws, double tau,
                             const SolverOptions& opts = {}, WarmStart* warm = nullptr);

DifferenceEstimate solve_sdd(const ExpandedMatrix& s1, const ExpandedMatrix& s2, double tau,
                             const SolverOptions& opts = {});

} // namespace sdd
