#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "strongring/dynamics.hpp"
#include "strongring/generators.hpp"
#include "strongring/operators.hpp"
#include "strongring/verify.hpp"

using namespace strongring;

TEST_CASE("lax flow of K1 stays zero") {
    OperatorBundle b = operator_bundle(ProductTerm(gen_complete(1)));
    LaxTrajectory traj = lax_flow(b, 0.0, 1.0, 0.01);
    for (const auto& s : traj.states) {
        CHECK(s.d_norm == 0.0);
        CHECK(s.spectral_drift == 0.0);
    }
}

TEST_CASE("lax flow on C4: isospectral, d decreasing") {
    OperatorBundle b = operator_bundle(ProductTerm(gen_cycle(4)));
    LaxTrajectory traj = lax_flow(b, 0.0, 5.0, 1e-3);
    double max_drift = 0, prev = 1e300;
    bool monotone = true;
    for (const auto& s : traj.states) {
        max_drift = std::max(max_drift, s.spectral_drift);
        if (s.d_norm > prev + 1e-9) monotone = false;
        prev = s.d_norm;
    }
    CHECK(max_drift < 1e-6);
    CHECK(monotone);
    // the flow actually moves: the off-diagonal part shrinks
    CHECK(traj.states.back().d_norm < traj.states.front().d_norm);
}

TEST_CASE("isospectrality on random complexes, also with beta != 0") {
    Rng rng(21);
    for (double beta : {0.0, 0.7}) {
        SimplicialComplex g = random_complex(rng, 15);
        OperatorBundle b = operator_bundle(ProductTerm(g));
        LaxTrajectory traj = lax_flow(b, beta, 2.0, 1e-3);
        CHECK(traj.states.back().spectral_drift < 1e-6);
    }
}

TEST_CASE("drift scales like dt^4") {
    OperatorBundle b = operator_bundle(ProductTerm(gen_cycle(5)));
    auto final_drift = [&](double dt) {
        LaxTrajectory traj = lax_flow(b, 0.0, 1.0, dt, 1e-2);
        double d = 0;
        for (const auto& s : traj.states) d = std::max(d, s.spectral_drift);
        return d;
    };
    double coarse = final_drift(4e-2);
    double fine = final_drift(2e-2);
    CHECK(coarse > 0);
    CHECK(coarse / fine >= 8.0);
}

TEST_CASE("newton continuation") {
    // eps = 0 reproduces the exact linear solve
    IntMatrix L = connection_laplacian(ProductTerm(gen_cycle(10))).to_int_matrix();
    std::vector<double> rhs(static_cast<std::size_t>(L.rows()), 1.0);
    ScalarNonlinearity sine{[](double x) { return std::sin(x); },
                            [](double x) { return std::cos(x); }, 1.0};
    ContinuationResult lin = newton_continuation(L, sine, rhs, 0.0, 1e-12);
    CHECK(lin.steps <= 1);
    CHECK(lin.residual < 1e-12);

    // C100 torus with eps = 0.05: certified contraction, <= 8 iterations
    IntMatrix L100 = connection_laplacian(ProductTerm(gen_cycle(100))).to_int_matrix();
    std::vector<double> rhs100(static_cast<std::size_t>(L100.rows()));
    Rng rng(22);
    for (auto& v : rhs100) v = rng.uniform01() - 0.5;
    ContinuationResult r = newton_continuation(L100, sine, rhs100, 0.05, 1e-10);
    CHECK(r.contraction < 1.0);
    CHECK(r.steps <= 8);
    CHECK(r.residual < 1e-10);

    // continuity in eps: ||u(eps) - u(0)|| <= C eps with C from ||L^-1||
    ContinuationResult r0 = newton_continuation(L100, sine, rhs100, 0.0, 1e-12);
    double diff = 0, base = 0;
    for (std::size_t i = 0; i < r.u.size(); ++i) {
        diff = std::max(diff, std::fabs(r.u[i] - r0.u[i]));
        base = std::max(base, std::fabs(r0.u[i]));
    }
    double norm_inv = r.contraction / (0.05 * sine.lipschitz);
    CHECK(diff <= 0.05 * norm_inv * (base + 1.0));

    // a singular kinetic part is rejected up front
    OperatorBundle b = operator_bundle(ProductTerm(gen_cycle(6)));
    IntMatrix H0 = b.blocks[0].to_int_matrix();
    std::vector<double> rhs6(6, 1.0);
    CHECK_THROWS_AS(newton_continuation(H0, sine, rhs6, 0.05, 1e-10), ContractionBoundViolated);
}
