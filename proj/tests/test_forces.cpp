#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chns/forces.hpp"

using namespace chns;

TEST_CASE("gravity block is the y-face density average times g") {
    const int M = 8;
    MacGrid grid = make_grid(M);
    Field rho(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) rho(i, j) = 1.0 + 0.5 * grid.xp(i) + 0.25 * grid.yp(j);
    Field f = gravity_apply(rho, -10.0);
    REQUIRE(f.nx == M);
    REQUIRE(f.ny == M - 1);
    for (int g = 0; g < M - 1; ++g)
        for (int i = 0; i < M; ++i)
            CHECK(f(i, g) ==
                  doctest::Approx(-10.0 * (1.0 + 0.5 * grid.xp(i) + 0.25 * grid.yg(g))).epsilon(1e-13));
}

TEST_CASE("capillary stencil path equals the matrix form") {
    const int M = 11;
    MacGrid grid = make_grid(M);
    FdMatrices fd = build_fd_matrices(M, grid.h);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Field c(M, M);
    for (double& v : c.data) v = u(rng);

    CapillaryBlocks s = capillary_apply(c, 1e-3, grid.h);
    CapillaryBlocks m = capillary_apply_matrix(c, 1e-3, fd);
    REQUIRE(s.L2_2.same_shape(m.L2_2));
    REQUIRE(s.L2_3.same_shape(m.L2_3));
    double scale = std::max(1.0, std::max(field_max_abs(m.L2_2), field_max_abs(m.L2_3)));
    for (size_t k = 0; k < s.L2_2.size(); ++k)
        CHECK(std::abs(s.L2_2.data[k] - m.L2_2.data[k]) < 1e-12 * scale);
    for (size_t k = 0; k < s.L2_3.size(); ++k)
        CHECK(std::abs(s.L2_3.data[k] - m.L2_3.data[k]) < 1e-12 * scale);
}

TEST_CASE("capillary force vanishes for constant c and is linear in eps") {
    const int M = 8;
    MacGrid grid = make_grid(M);
    Field c(M, M, 0.7);
    CapillaryBlocks z = capillary_apply(c, 1e-2, grid.h);
    CHECK(field_max_abs(z.L2_2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(field_max_abs(z.L2_3) == doctest::Approx(0.0).epsilon(1e-14));

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (double& v : c.data) v = u(rng);
    CapillaryBlocks a = capillary_apply(c, 1.0, grid.h);
    CapillaryBlocks b = capillary_apply(c, 2.5, grid.h);
    for (size_t k = 0; k < a.L2_2.size(); ++k)
        CHECK(b.L2_2.data[k] == doctest::Approx(2.5 * a.L2_2.data[k]).epsilon(1e-12));
}

// continuous Korteweg force for c = cos(pi x) cos(2 pi y), interior accuracy
static double capillary_error(int M) {
    MacGrid grid = make_grid(M);
    const double eps = 1.0;
    Field c(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) c(i, j) = std::cos(M_PI * grid.xp(i)) * std::cos(2.0 * M_PI * grid.yp(j));
    CapillaryBlocks F = capillary_apply(c, eps, grid.h);

    auto cx = [](double x, double y) { return -M_PI * std::sin(M_PI * x) * std::cos(2.0 * M_PI * y); };
    auto cy = [](double x, double y) { return -2.0 * M_PI * std::cos(M_PI * x) * std::sin(2.0 * M_PI * y); };
    auto cxx = [](double x, double y) { return -M_PI * M_PI * std::cos(M_PI * x) * std::cos(2.0 * M_PI * y); };
    auto cyy = [](double x, double y) { return -4.0 * M_PI * M_PI * std::cos(M_PI * x) * std::cos(2.0 * M_PI * y); };
    auto cxy = [](double x, double y) { return 2.0 * M_PI * M_PI * std::sin(M_PI * x) * std::sin(2.0 * M_PI * y); };

    double err = 0.0;
    for (int j = 2; j < M - 2; ++j) {
        for (int f = 2; f < M - 3; ++f) {
            double x = grid.xf(f), y = grid.yp(j);
            // eps*( (cy^2)_x/2 - (cx^2)_x/2 - (cx cy)_y )
            double exact = eps * (cy(x, y) * cxy(x, y) - cx(x, y) * cxx(x, y) -
                                  (cxy(x, y) * cy(x, y) + cx(x, y) * cyy(x, y)));
            err = std::max(err, std::abs(F.L2_2(f, j) - exact));
        }
    }
    for (int g = 2; g < M - 3; ++g) {
        for (int i = 2; i < M - 2; ++i) {
            double x = grid.xp(i), y = grid.yg(g);
            double exact = eps * (cx(x, y) * cxy(x, y) - cy(x, y) * cyy(x, y) -
                                  (cxx(x, y) * cy(x, y) + cx(x, y) * cxy(x, y)));
            err = std::max(err, std::abs(F.L2_3(i, g) - exact));
        }
    }
    return err;
}

TEST_CASE("capillary force is second-order accurate in the interior") {
    double r = capillary_error(32) / capillary_error(64);
    CHECK(r > 3.3);
    CHECK(r < 4.8);
}
