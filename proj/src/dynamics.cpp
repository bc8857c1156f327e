#include "strongring/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "strongring/errors.hpp"

namespace strongring {

namespace {

using CMat = Eigen::MatrixXcd;

// Strictly degree-raising part of M by the basis grading.
CMat raising_part(const CMat& M, const CellBasis& basis) {
    CMat d = CMat::Zero(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j)
            if (basis.dim(i) > basis.dim(j)) d(i, j) = M(i, j);
    return d;
}

CMat flow_field(const CMat& D, const CellBasis& basis, double beta) {
    CMat d = raising_part(D, basis);
    CMat B = d - d.adjoint();
    if (beta != 0.0) {
        CMat b = D - d - d.adjoint();
        B += std::complex<double>(0.0, beta) * b;
    }
    return B * D - D * B;
}

std::vector<double> hermitian_eigs(const CMat& M) {
    Eigen::SelfAdjointEigenSolver<CMat> solver(M, Eigen::EigenvaluesOnly);
    std::vector<double> v(solver.eigenvalues().data(), solver.eigenvalues().data() + M.rows());
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

LaxTrajectory lax_flow(const OperatorBundle& bundle, double beta, double t_end, double dt,
                       double drift_bound) {
    if (dt <= 0) throw BadParameter("lax_flow requires dt > 0");
    const int n = bundle.basis.size();
    CMat D = CMat::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (const auto& [j, v] : bundle.D.row[static_cast<std::size_t>(i)])
            D(i, j) = static_cast<double>(v);
    const CMat H0 = D * D;
    const std::vector<double> spec0 = hermitian_eigs(D);
    double scale = 1.0;
    for (double v : spec0) scale = std::max(scale, std::fabs(v));

    LaxTrajectory traj;
    traj.n = n;
    auto record = [&](double t) {
        LaxState s;
        s.t = t;
        std::vector<double> spec = hermitian_eigs(D);
        for (std::size_t i = 0; i < spec.size(); ++i)
            s.spectral_drift = std::max(s.spectral_drift, std::fabs(spec[i] - spec0[i]) / scale);
        CMat d = raising_part(D, bundle.basis);
        s.d_norm = d.norm();
        s.d2_residual = (d * d).norm();
        s.hodge_drift = (D * D - H0).cwiseAbs().maxCoeff();
        if (s.spectral_drift > drift_bound)
            throw StepTooLarge("spectral drift " + std::to_string(s.spectral_drift) +
                               " exceeds bound at t = " + std::to_string(t));
        if (s.d2_residual > 1e-6)
            throw StepTooLarge("d^2 residual " + std::to_string(s.d2_residual) +
                               " exceeds bound at t = " + std::to_string(t));
        traj.states.push_back(s);
    };

    record(0.0);
    const long long steps = static_cast<long long>(std::llround(t_end / dt));
    for (long long k = 0; k < steps; ++k) {
        CMat k1 = flow_field(D, bundle.basis, beta);
        CMat k2 = flow_field(D + 0.5 * dt * k1, bundle.basis, beta);
        CMat k3 = flow_field(D + 0.5 * dt * k2, bundle.basis, beta);
        CMat k4 = flow_field(D + dt * k3, bundle.basis, beta);
        D += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        record(static_cast<double>(k + 1) * dt);
    }
    traj.D_final.assign(D.data(), D.data() + static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    return traj;
}

ContinuationResult newton_continuation(const IntMatrix& L, const ScalarNonlinearity& V,
                                       const std::vector<double>& rhs, double eps, double tol,
                                       int max_iter) {
    const int n = L.rows();
    if (L.cols() != n) throw NotSquare("kinetic part must be square");
    if (static_cast<int>(rhs.size()) != n) throw BadParameter("rhs size mismatch");

    IntMatrix ginv;
    try {
        ginv = inverse_unimodular(L);
    } catch (const NotUnimodular&) {
        throw ContractionBoundViolated("kinetic part is not exactly invertible (singular or non-unimodular)");
    }
    // ||L^-1||_inf from the exact inverse
    double norm_inv = 0;
    for (int i = 0; i < n; ++i) {
        double row = 0;
        for (int j = 0; j < n; ++j) row += std::fabs(ginv.at(i, j).get_d());
        norm_inv = std::max(norm_inv, row);
    }
    double contraction = eps * V.lipschitz * norm_inv;
    if (contraction >= 1.0)
        throw ContractionBoundViolated("eps * Lip(V) * ||L^-1|| = " + std::to_string(contraction) +
                                       " >= 1");

    Eigen::MatrixXd Ld(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Ld(i, j) = L.at(i, j).get_d();
    Eigen::Map<const Eigen::VectorXd> b(rhs.data(), n);

    // u0 = L^-1 rhs via the exact inverse
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) u(i) += ginv.at(i, j).get_d() * rhs[static_cast<std::size_t>(j)];

    ContinuationResult result;
    result.contraction = contraction;
    auto residual_of = [&](const Eigen::VectorXd& x) {
        Eigen::VectorXd r = Ld * x - b;
        for (int i = 0; i < n; ++i) r(i) += eps * V.f(x(i));
        return r;
    };
    for (int it = 0; it <= max_iter; ++it) {
        Eigen::VectorXd r = residual_of(u);
        result.residual = r.lpNorm<Eigen::Infinity>();
        result.steps = it;
        if (result.residual < tol) {
            result.u.assign(u.data(), u.data() + n);
            return result;
        }
        Eigen::MatrixXd J = Ld;
        for (int i = 0; i < n; ++i) J(i, i) += eps * V.df(u(i));
        u -= J.partialPivLu().solve(r);
    }
    throw NoConvergence("Newton iteration did not reach tolerance in " +
                        std::to_string(max_iter) + " steps");
}

} // namespace strongring
