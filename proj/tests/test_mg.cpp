#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "chns/mg.hpp"
#include "test_util.hpp"

using namespace chns;

namespace {

Field smooth_rho(int M) {
    MacGrid g = make_grid(M);
    Field rho(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i)
            rho(i, j) = 1.25 + 0.4 * std::cos(2 * M_PI * g.xp(i)) * std::cos(M_PI * g.yp(j));
    return rho;
}

}  // namespace

TEST_CASE("cell restriction averages children") {
    Field f(8, 8);
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) f(i, j) = i + 10.0 * j;
    Field c = restrict_cell(f);
    REQUIRE(c.nx == 4);
    CHECK(c(1, 2) == doctest::Approx(0.25 * (2 + 40 + 3 + 40 + 2 + 50 + 3 + 50)).epsilon(1e-14));
}

TEST_CASE("coarsenability rule") {
    CHECK(mg_coarsenable(8));
    CHECK(mg_coarsenable(64));
    CHECK_FALSE(mg_coarsenable(4));
    CHECK_FALSE(mg_coarsenable(6));
    CHECK(mg_coarsenable(12));  // 12 -> 6 is allowed, 6 stops there
    MgHierarchy H = build_ch_hierarchy(smooth_rho(12), 0.01, 1e-4, 1.0 / 12.0);
    CHECK(H.ops.size() == 2);  // 12 and 6
    MgHierarchy H4 = build_ch_hierarchy(smooth_rho(4), 0.01, 1e-4, 0.25);
    CHECK(H4.pc == nullptr);
}

TEST_CASE("V-cycle is a symmetric positive preconditioner (order parameter)") {
    const int M = 8;
    MgHierarchy H = build_ch_hierarchy(smooth_rho(M), 0.02, 1e-3, 1.0 / M);
    REQUIRE(H.pc != nullptr);
    const int n = M * M;
    Eigen::MatrixXd P(n, n);
    std::vector<double> e(n, 0.0), z(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        H.pc->apply(e, z);
        for (int i = 0; i < n; ++i) P(i, j) = z[i];
        e[j] = 0.0;
    }
    CHECK((P - P.transpose()).cwiseAbs().maxCoeff() < 1e-9 * P.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (P + P.transpose()));
    CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("V-cycle is a symmetric positive preconditioner (velocity)") {
    const int M = 8;
    MgHierarchy H = build_visc_hierarchy(smooth_rho(M), 0.05, 1.0, 0.1, 1.0 / M);
    REQUIRE(H.pc != nullptr);
    const int n = 2 * (M - 1) * M;
    Eigen::MatrixXd P(n, n);
    std::vector<double> e(n, 0.0), z(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        H.pc->apply(e, z);
        for (int i = 0; i < n; ++i) P(i, j) = z[i];
        e[j] = 0.0;
    }
    CHECK((P - P.transpose()).cwiseAbs().maxCoeff() < 1e-9 * P.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (P + P.transpose()));
    CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("preconditioning cuts iteration counts on a fine grid") {
    const int M = 64;
    const double h = 1.0 / M;
    Field rho = smooth_rho(M);
    const double coeff = 0.25 * h;  // a realistic dt * alpha_ii scale

    ChSystemOperator A(rho, coeff, 1e-4, h);
    std::vector<double> b = random_vec(A.dim(), 99);
    std::vector<double> x0(A.dim(), 0.0), x1(A.dim(), 0.0);
    SolveReport plain = cg(A, b, x0, 1e-10, 10 * A.dim());
    MgHierarchy H = build_ch_hierarchy(rho, coeff, 1e-4, h);
    Preconditioner pc = H.pc->as_preconditioner();
    SolveReport mg = cg(A, b, x1, 1e-10, 10 * A.dim(), &pc);
    CHECK(plain.converged);
    CHECK(mg.converged);
    CHECK(mg.iterations * 2 < plain.iterations);
    for (int i = 0; i < A.dim(); ++i) CHECK(x0[i] == doctest::Approx(x1[i]).epsilon(1e-6));

    ViscSystemOperator Av(to_staggered(rho, Axis::X), to_staggered(rho, Axis::Y), coeff, 1.0, 0.1,
                          h);
    std::vector<double> bv = random_vec(Av.dim(), 7);
    std::vector<double> y0(Av.dim(), 0.0), y1(Av.dim(), 0.0);
    SolveReport plainv = cg(Av, bv, y0, 1e-10, 10 * Av.dim());
    MgHierarchy Hv = build_visc_hierarchy(rho, coeff, 1.0, 0.1, h);
    Preconditioner pcv = Hv.pc->as_preconditioner();
    SolveReport mgv = cg(Av, bv, y1, 1e-10, 10 * Av.dim(), &pcv);
    CHECK(plainv.converged);
    CHECK(mgv.converged);
    CHECK(mgv.iterations * 2 < plainv.iterations);
}
