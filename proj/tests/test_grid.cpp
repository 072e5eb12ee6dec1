#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chns/grid.hpp"

using namespace chns;

TEST_CASE("grid construction") {
    MacGrid g = make_grid(8);
    CHECK(g.M == 8);
    CHECK(g.h == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(g.n_primal() == 64);
    CHECK(g.n_face() == 56);
    CHECK(g.n_state() == 2 * 64 + 2 * 56);
    CHECK(g.xp(0) == doctest::Approx(0.0625));
    CHECK(g.xf(0) == doctest::Approx(0.125));
    CHECK_THROWS_AS(make_grid(3), config_error);
}

TEST_CASE("reflection index maps") {
    double s;
    s = 1.0;
    CHECK(reflect_cell_index(-1, 8, Parity::Symmetric, &s) == 0);
    CHECK(s == 1.0);
    s = 1.0;
    CHECK(reflect_cell_index(-1, 8, Parity::Antisymmetric, &s) == 0);
    CHECK(s == -1.0);
    s = 1.0;
    CHECK(reflect_cell_index(8, 8, Parity::Antisymmetric, &s) == 7);
    CHECK(s == -1.0);
    s = 1.0;
    CHECK(reflect_cell_index(-3, 8, Parity::Symmetric, &s) == 2);
    s = 1.0;
    CHECK(reflect_face_index(-2, 8, Parity::Antisymmetric, &s) == 2);
    CHECK(s == -1.0);
    s = 1.0;
    CHECK(reflect_face_index(9, 8, Parity::Antisymmetric, &s) == 7);
    CHECK(s == -1.0);
    s = 1.0;
    CHECK(reflect_face_index(0, 8, Parity::Antisymmetric, &s) == 0);
    CHECK(s == 1.0);
    // double fold
    s = 1.0;
    CHECK(reflect_cell_index(17, 8, Parity::Antisymmetric, &s) == 1);
    CHECK(s == 1.0);
}

TEST_CASE("two-point staggering is exact on linear fields") {
    MacGrid g = make_grid(12);
    Field rho(g.M, g.M);
    for (int j = 0; j < g.M; ++j)
        for (int i = 0; i < g.M; ++i) rho(i, j) = 2.0 + 3.0 * g.xp(i) - 0.7 * g.yp(j);
    Field rx = to_staggered(rho, Axis::X);
    Field ry = to_staggered(rho, Axis::Y);
    for (int j = 0; j < g.M; ++j)
        for (int f = 0; f < g.M - 1; ++f)
            CHECK(rx(f, j) == doctest::Approx(2.0 + 3.0 * g.xf(f) - 0.7 * g.yp(j)).epsilon(1e-14));
    for (int gg = 0; gg < g.M - 1; ++gg)
        for (int i = 0; i < g.M; ++i)
            CHECK(ry(i, gg) == doctest::Approx(2.0 + 3.0 * g.xp(i) - 0.7 * g.yg(gg)).epsilon(1e-14));
}

static double quintic(double x) { return ((x - 0.3) * x + 0.1) * x * x * x - 2.0 * x + 1.5; }

TEST_CASE("sixth-order transfer reproduces quintics away from the walls") {
    MacGrid g = make_grid(16);
    Field fp(g.M, g.M);
    for (int j = 0; j < g.M; ++j)
        for (int i = 0; i < g.M; ++i) fp(i, j) = quintic(g.xp(i)) * (1.0 + 0.2 * j);
    Field fd = transfer6(fp, Axis::X, TransferDir::PrimalToDual, Parity::Symmetric, g.M);
    REQUIRE(fd.nx == g.M - 1);
    for (int j = 0; j < g.M; ++j)
        for (int t = 3; t <= g.M - 5; ++t)  // stencil fits without ghosts
            CHECK(fd(t, j) == doctest::Approx(quintic(g.xf(t)) * (1.0 + 0.2 * j)).epsilon(1e-12));

    Field ff(g.M - 1, g.M);
    for (int j = 0; j < g.M; ++j)
        for (int t = 0; t < g.M - 1; ++t) ff(t, j) = quintic(g.xf(t)) * (1.0 - 0.1 * j);
    Field fb = transfer6(ff, Axis::X, TransferDir::DualToPrimal, Parity::Antisymmetric, g.M);
    REQUIRE(fb.nx == g.M);
    for (int j = 0; j < g.M; ++j)
        for (int t = 4; t <= g.M - 5; ++t)
            CHECK(fb(t, j) == doctest::Approx(quintic(g.xp(t)) * (1.0 - 0.1 * j)).epsilon(1e-12));
}

static double transfer_error_sym(int M) {
    MacGrid g = make_grid(M);
    Field fp(M, M, 0.0);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) fp(i, j) = std::cos(M_PI * g.xp(i)) * std::cos(2.0 * M_PI * g.yp(j));
    Field fd = transfer6(fp, Axis::X, TransferDir::PrimalToDual, Parity::Symmetric, M);
    double err = 0.0;
    for (int j = 0; j < M; ++j)
        for (int t = 0; t < M - 1; ++t)
            err = std::max(err, std::abs(fd(t, j) - std::cos(M_PI * g.xf(t)) * std::cos(2.0 * M_PI * g.yp(j))));
    return err;
}

static double transfer_error_anti(int M) {
    MacGrid g = make_grid(M);
    Field ff(M - 1, M, 0.0);
    for (int j = 0; j < M; ++j)
        for (int t = 0; t < M - 1; ++t) ff(t, j) = std::sin(M_PI * g.xf(t)) * std::cos(M_PI * g.yp(j));
    Field fb = transfer6(ff, Axis::X, TransferDir::DualToPrimal, Parity::Antisymmetric, M);
    double err = 0.0;
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i)
            err = std::max(err, std::abs(fb(i, j) - std::sin(M_PI * g.xp(i)) * std::cos(M_PI * g.yp(j))));
    return err;
}

TEST_CASE("transfer converges at sixth order including wall ghosts") {
    double r1 = transfer_error_sym(16) / transfer_error_sym(32);
    double r2 = transfer_error_anti(16) / transfer_error_anti(32);
    CHECK(r1 > 40.0);
    CHECK(r1 < 100.0);
    CHECK(r2 > 40.0);
    CHECK(r2 < 100.0);
}

TEST_CASE("state vector roundtrip") {
    MacGrid g = make_grid(8);
    Fields U = make_fields(g);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> pos(0.5, 2.0), any(-1.0, 1.0);
    for (double& v : U.rho.data) v = pos(rng);
    for (double& v : U.v1.data) v = any(rng);
    for (double& v : U.v2.data) v = any(rng);
    for (double& v : U.c.data) v = any(rng);

    std::vector<double> s = vec_state(g, U);
    REQUIRE((int)s.size() == g.n_state());
    // momentum entries carry the two-point staggered density
    Field rx = to_staggered(U.rho, Axis::X);
    CHECK(s[g.n_primal()] == doctest::Approx(rx.data[0] * U.v1.data[0]).epsilon(1e-15));
    Fields V = unvec_state(g, s);
    for (size_t k = 0; k < U.rho.size(); ++k) CHECK(V.rho.data[k] == doctest::Approx(U.rho.data[k]).epsilon(1e-14));
    for (size_t k = 0; k < U.v1.size(); ++k) CHECK(V.v1.data[k] == doctest::Approx(U.v1.data[k]).epsilon(1e-13));
    for (size_t k = 0; k < U.v2.size(); ++k) CHECK(V.v2.data[k] == doctest::Approx(U.v2.data[k]).epsilon(1e-13));
    for (size_t k = 0; k < U.c.size(); ++k) CHECK(V.c.data[k] == doctest::Approx(U.c.data[k]).epsilon(1e-13));
}

TEST_CASE("admissibility checks") {
    MacGrid g = make_grid(8);
    Fields U = make_fields(g);
    for (double& v : U.rho.data) v = 1.0;
    CHECK_NOTHROW(check_admissible(g, U));
    U.rho(3, 3) = 0.0;
    CHECK_THROWS_AS(check_admissible(g, U), positivity_error);
    U.rho(3, 3) = 1.0;
    U.v1(2, 2) = std::nan("");
    CHECK_THROWS_AS(check_admissible(g, U), numeric_error);
}

TEST_CASE("model parameter validation and pressure law") {
    ModelParams p;
    CHECK_NOTHROW(p.validate());
    CHECK(p.pressure(1.0) == doctest::Approx(1.0));
    CHECK(p.pressure_prime(1.0) == doctest::Approx(5.0 / 3.0));
    // finite difference check of p'(rho)
    double rho = 1.37, d = 1e-6;
    CHECK(p.pressure_prime(rho) ==
          doctest::Approx((p.pressure(rho + d) - p.pressure(rho - d)) / (2 * d)).epsilon(1e-8));
    p.gamma = 1.0;
    CHECK_THROWS_AS(p.validate(), config_error);
}
