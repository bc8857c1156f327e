#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "strongring/operators.hpp"

namespace strongring {

// One sampled state of the isospectral deformation D' = [B, D] with
// B = d - d* + i beta b; d is the strictly degree-raising part of D by the
// CellBasis grading (recomputed from position each step), b the remainder.
struct LaxState {
    double t = 0.0;
    double spectral_drift = 0.0;  // max |sigma(D_t) - sigma(D_0)| / scale
    double d_norm = 0.0;          // Frobenius norm of d_t
    double d2_residual = 0.0;     // Frobenius norm of d_t * d_t
    double hodge_drift = 0.0;     // entrywise drift of D_t^2 (diagnostic only)
};

struct LaxTrajectory {
    std::vector<LaxState> states;
    std::vector<std::complex<double>> D_final; // row major
    int n = 0;
};

// Fixed-step RK4 integration up to t_end; drift and residual are checked at
// every step against the bound (throws StepTooLarge beyond it).
LaxTrajectory lax_flow(const OperatorBundle& bundle, double beta, double t_end, double dt,
                       double drift_bound = 1e-6);

// Scalar nonlinearity with derivative and a Lipschitz constant for the
// a-priori contraction bound.
struct ScalarNonlinearity {
    std::function<double(double)> f;
    std::function<double(double)> df;
    double lipschitz = 1.0;
};

struct ContinuationResult {
    std::vector<double> u;
    double residual = 0.0;
    int steps = 0;
    double contraction = 0.0; // eps * Lip(V) * ||L^-1||_inf
};

// Solves L u + eps V(u) = rhs by Newton iteration from u0 = L^-1 rhs. The
// kinetic part is inverted exactly; eps * Lip(V) * ||L^-1||_inf must be < 1.
ContinuationResult newton_continuation(const IntMatrix& L, const ScalarNonlinearity& V,
                                       const std::vector<double>& rhs, double eps, double tol,
                                       int max_iter = 50);

} // namespace strongring
