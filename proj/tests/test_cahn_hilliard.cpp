#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "chns/cahn_hilliard.hpp"
#include "test_util.hpp"

using namespace chns;

TEST_CASE("convex splitting of the quartic potential") {
    for (double c : {-1.5, -0.3, 0.0, 0.8, 2.0}) {
        // psi'(c) = c^3 - c splits as 2c + (c^3 - 3c)
        CHECK(psi1_prime(c) + psi2_prime(c) == doctest::Approx(c * c * c - c).epsilon(1e-14));
        double d = 1e-6;
        CHECK(psi2_second(c) ==
              doctest::Approx((psi2_prime(c + d) - psi2_prime(c - d)) / (2 * d)).epsilon(1e-7));
    }
}

TEST_CASE("coefficient Laplacian is conservative") {
    const int M = 7;
    const double h = 1.0 / M;
    Field c(M, M);
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& v : c.data) v = u(rng);

    // flux form with zero wall fluxes: cell sums cancel exactly
    Field out = m2_apply(c, h);
    CHECK(std::abs(field_sum(out)) < 1e-10 * (1.0 + field_max_abs(out)) * M * M);

    Field k(M, M, 0.4);
    CHECK(field_max_abs(m2_apply(k, h)) == doctest::Approx(0.0).epsilon(1e-14));
}

// continuous target: div( psi2''(c) grad c ) for smooth Neumann-compatible c
static double m2_error(int M) {
    MacGrid g = make_grid(M);
    Field c(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) c(i, j) = 0.3 * std::cos(M_PI * g.xp(i)) * std::cos(2.0 * M_PI * g.yp(j));
    Field out = m2_apply(c, g.h);
    double err = 0.0;
    for (int j = 0; j < M; ++j) {
        for (int i = 0; i < M; ++i) {
            double x = g.xp(i), y = g.yp(j);
            double cv = 0.3 * std::cos(M_PI * x) * std::cos(2.0 * M_PI * y);
            double cx = -0.3 * M_PI * std::sin(M_PI * x) * std::cos(2.0 * M_PI * y);
            double cy = -0.6 * M_PI * std::cos(M_PI * x) * std::sin(2.0 * M_PI * y);
            double lap = -(M_PI * M_PI + 4.0 * M_PI * M_PI) * cv;
            double kappa = 3.0 * cv * cv - 3.0;
            double kprime = 6.0 * cv;  // d(psi2'')/dc
            double exact = kappa * lap + kprime * (cx * cx + cy * cy);
            err = std::max(err, std::abs(out(i, j) - exact));
        }
    }
    return err;
}

TEST_CASE("coefficient Laplacian is second-order accurate") {
    double r = m2_error(32) / m2_error(64);
    CHECK(r > 3.3);
    CHECK(r < 4.8);
}

TEST_CASE("stage operator is SPD and matches its dense assembly") {
    const int M = 8;
    MacGrid g = make_grid(M);
    Field rho(M, M);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (double& v : rho.data) v = u(rng);

    ChSystemOperator A(rho, 0.01, 1e-3, g.h);
    Eigen::MatrixXd Ad = dense_from_operator(A);
    CHECK((Ad - Ad.transpose()).cwiseAbs().maxCoeff() < 1e-11);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Ad);
    CHECK(es.eigenvalues().minCoeff() > 0.0);

    std::vector<double> d = A.diagonal();
    for (int i = 0; i < A.dim(); ++i) CHECK(d[i] == doctest::Approx(Ad(i, i)).epsilon(1e-11));
}

TEST_CASE("stage operator Gauss-Seidel sweep matches the dense sweep") {
    const int M = 6;
    MacGrid g = make_grid(M);
    Field rho(M, M);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    for (double& v : rho.data) v = u(rng);
    ChSystemOperator A(rho, 0.02, 1e-3, g.h);
    Eigen::MatrixXd Ad = dense_from_operator(A);

    const int n = A.dim();
    std::vector<double> b = random_vec(n, 3);
    std::vector<double> x = random_vec(n, 6), xd = x;

    A.gs_sweep(x, b, true);
    for (int i = 0; i < n; ++i) {
        double r = b[i];
        for (int j = 0; j < n; ++j) r -= Ad(i, j) * xd[j];
        xd[i] += r / Ad(i, i);
    }
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(xd[i]).epsilon(1e-10));

    // backward sweep as well
    A.gs_sweep(x, b, false);
    for (int i = n - 1; i >= 0; --i) {
        double r = b[i];
        for (int j = 0; j < n; ++j) r -= Ad(i, j) * xd[j];
        xd[i] += r / Ad(i, i);
    }
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(xd[i]).epsilon(1e-10));
}

TEST_CASE("conjugate gradient solves the stage system") {
    const int M = 10;
    MacGrid g = make_grid(M);
    Field rho(M, M);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(0.8, 1.6);
    for (double& v : rho.data) v = u(rng);
    ChSystemOperator A(rho, 0.005, 1e-4, g.h);

    std::vector<double> b = random_vec(A.dim(), 21);
    std::vector<double> x(A.dim(), 0.0);
    SolveReport rep = cg(A, b, x, 1e-11, 10 * A.dim());
    CHECK(rep.converged);

    Eigen::MatrixXd Ad = dense_from_operator(A);
    Eigen::VectorXd xe = Ad.ldlt().solve(Eigen::Map<Eigen::VectorXd>(b.data(), A.dim()));
    for (int i = 0; i < A.dim(); ++i) CHECK(x[i] == doctest::Approx(xe(i)).epsilon(1e-7));
}

TEST_CASE("implicit piece of the order-parameter right side is consistent") {
    // ch_rhs(rho, c, c~) = 2 Lap c + M2(c~)c~ - eps Lap(Lap c / rho)
    const int M = 8;
    MacGrid g = make_grid(M);
    Field rho(M, M, 1.3), c(M, M), ct(M, M);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (double& v : c.data) v = u(rng);
    for (double& v : ct.data) v = u(rng);

    Field r = ch_rhs(rho, c, ct, 1e-3, g.h);
    Field lapc = laplacian2d(c, g.h);
    Field w(M, M);
    for (size_t k = 0; k < w.size(); ++k) w.data[k] = lapc.data[k] / 1.3;
    Field lapw = laplacian2d(w, g.h);
    Field m2 = m2_apply(ct, g.h);
    for (size_t k = 0; k < r.size(); ++k)
        CHECK(r.data[k] ==
              doctest::Approx(2.0 * lapc.data[k] + m2.data[k] - 1e-3 * lapw.data[k]).epsilon(1e-12));
}
