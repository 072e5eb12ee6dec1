#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "chns/viscosity.hpp"
#include "test_util.hpp"

using namespace chns;

TEST_CASE("viscous stencil path equals the matrix form") {
    const int M = 9;
    MacGrid g = make_grid(M);
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Field v1(M - 1, M), v2(M, M - 1);
    for (double& v : v1.data) v = u(rng);
    for (double& v : v2.data) v = u(rng);

    auto [s1, s2] = visc_apply(v1, v2, 1.0, 0.1, g.h);
    auto [m1, m2] = visc_apply_matrix(v1, v2, 1.0, 0.1, g.h);
    double scale = std::max(field_max_abs(m1), field_max_abs(m2));
    for (size_t k = 0; k < s1.size(); ++k) CHECK(std::abs(s1.data[k] - m1.data[k]) < 1e-12 * scale);
    for (size_t k = 0; k < s2.size(); ++k) CHECK(std::abs(s2.data[k] - m2.data[k]) < 1e-12 * scale);
}

TEST_CASE("stage operator is SPD, cross blocks are adjoint") {
    const int M = 7;
    MacGrid g = make_grid(M);
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    Field rx(M - 1, M), ry(M, M - 1);
    for (double& v : rx.data) v = u(rng);
    for (double& v : ry.data) v = u(rng);

    ViscSystemOperator A(rx, ry, 0.02, 1.0, 0.1, g.h);
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
    Field rx(M - 1, M, 1.0), ry(M, M - 1, 1.0);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.7, 1.5);
    for (double& v : rx.data) v = u(rng);
    for (double& v : ry.data) v = u(rng);
    ViscSystemOperator A(rx, ry, 0.05, 1.0, 0.1, g.h);
    Eigen::MatrixXd Ad = dense_from_operator(A);

    const int n = A.dim();
    std::vector<double> b = random_vec(n, 33);
    std::vector<double> x = random_vec(n, 44), xd = x;

    A.gs_sweep(x, b, true);
    for (int i = 0; i < n; ++i) {
        double r = b[i];
        for (int j = 0; j < n; ++j) r -= Ad(i, j) * xd[j];
        xd[i] += r / Ad(i, i);
    }
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(xd[i]).epsilon(1e-10));

    A.gs_sweep(x, b, false);
    for (int i = n - 1; i >= 0; --i) {
        double r = b[i];
        for (int j = 0; j < n; ++j) r -= Ad(i, j) * xd[j];
        xd[i] += r / Ad(i, i);
    }
    for (int i = 0; i < n; ++i) CHECK(x[i] == doctest::Approx(xd[i]).epsilon(1e-10));
}

TEST_CASE("conjugate gradient solves the velocity stage system") {
    const int M = 8;
    MacGrid g = make_grid(M);
    Field rx(M - 1, M, 1.0), ry(M, M - 1, 1.0);
    std::mt19937_64 rng(71);
    std::uniform_real_distribution<double> u(0.8, 1.4);
    for (double& v : rx.data) v = u(rng);
    for (double& v : ry.data) v = u(rng);
    ViscSystemOperator A(rx, ry, 0.01, 1.0, 0.1, g.h);

    std::vector<double> b = random_vec(A.dim(), 55);
    std::vector<double> x(A.dim(), 0.0);
    SolveReport rep = cg(A, b, x, 1e-11, 10 * A.dim());
    CHECK(rep.converged);

    Eigen::MatrixXd Ad = dense_from_operator(A);
    Eigen::VectorXd xe = Ad.ldlt().solve(Eigen::Map<Eigen::VectorXd>(b.data(), A.dim()));
    for (int i = 0; i < A.dim(); ++i) CHECK(x[i] == doctest::Approx(xe(i)).epsilon(1e-7));
}

// manufactured velocity respecting the no-penetration / no-slip walls:
//   v1 = sin(pi x) sin(pi y), v2 = sin(pi x) sin(pi y)
static double visc_error(int M) {
    MacGrid g = make_grid(M);
    const double nu = 1.0, lam = 0.1;
    Field v1(M - 1, M), v2(M, M - 1);
    for (int j = 0; j < M; ++j)
        for (int f = 0; f < M - 1; ++f) v1(f, j) = std::sin(M_PI * g.xf(f)) * std::sin(M_PI * g.yp(j));
    for (int gg = 0; gg < M - 1; ++gg)
        for (int i = 0; i < M; ++i) v2(i, gg) = std::sin(M_PI * g.xp(i)) * std::sin(M_PI * g.yg(gg));
    auto [f1, f2] = visc_apply(v1, v2, nu, lam, g.h);

    double err = 0.0;
    const double p2 = M_PI * M_PI;
    for (int j = 2; j < M - 2; ++j)
        for (int f = 2; f < M - 3; ++f) {
            double x = g.xf(f), y = g.yp(j);
            double uxx = -p2 * std::sin(M_PI * x) * std::sin(M_PI * y);
            double uyy = uxx;
            double wxy = p2 * std::cos(M_PI * x) * std::cos(M_PI * y);
            double exact = (2.0 * nu + lam) * uxx + nu * uyy + (nu + lam) * wxy;
            err = std::max(err, std::abs(f1(f, j) - exact));
        }
    for (int gg = 2; gg < M - 3; ++gg)
        for (int i = 2; i < M - 2; ++i) {
            double x = g.xp(i), y = g.yg(gg);
            double wxx = -p2 * std::sin(M_PI * x) * std::sin(M_PI * y);
            double wyy = wxx;
            double uxy = p2 * std::cos(M_PI * x) * std::cos(M_PI * y);
            double exact = nu * wxx + (2.0 * nu + lam) * wyy + (nu + lam) * uxy;
            err = std::max(err, std::abs(f2(i, gg) - exact));
        }
    return err;
}

TEST_CASE("viscous force is second-order accurate in the interior") {
    double r = visc_error(32) / visc_error(64);
    CHECK(r > 3.3);
    CHECK(r < 4.8);
}
