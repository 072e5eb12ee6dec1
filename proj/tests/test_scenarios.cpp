#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "chns/errors.hpp"
#include "chns/fdops.hpp"
#include "chns/mms.hpp"
#include "chns/output.hpp"
#include "chns/scenarios.hpp"

using namespace chns;
namespace fs = std::filesystem;

namespace {

fs::path tmpdir() {
    fs::path p = fs::temp_directory_path() / "chns_test_scenarios";
    fs::create_directories(p);
    return p;
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
    std::ifstream is(p);
    REQUIRE(bool(is));
    std::string line;
    std::getline(is, line);  // header
    std::vector<std::vector<double>> rows;
    while (std::getline(is, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(cell.empty() ? 0.0 : std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST_CASE("scenario registry parameters") {
    CHECK_THROWS_AS(make_scenario("nope", 0), config_error);

    Scenario t3 = make_scenario("test3", 7);
    CHECK(t3.par.nu == doctest::Approx(1e-3));
    CHECK(t3.par.lambda == doctest::Approx(1e-4));
    CHECK_FALSE(t3.has_forcing);

    Scenario t4 = make_scenario("test4", 0);
    CHECK(t4.par.Cp == doctest::Approx(1e4));
    CHECK(t4.par.nu == doctest::Approx(0.1));
    CHECK(t4.par.lambda == doctest::Approx(0.1));
    CHECK(t4.par.eps == doctest::Approx(0.01));

    Scenario ord = make_scenario("order", 0);
    CHECK(ord.has_forcing);
    CHECK(scenario_forcing(ord).active());
    CHECK_FALSE(scenario_forcing(t3).active());
}

TEST_CASE("initial order parameter sits in the advertised regions") {
    MacGrid g = make_grid(64);

    Fields u1 = initial_fields(make_scenario("test1", 0), g);
    for (double c : u1.c.data) CHECK(std::abs(c) <= 0.1 + 1e-15);  // unstable well

    Fields u2 = initial_fields(make_scenario("test2", 0), g);
    for (double c : u2.c.data) {
        CHECK(c >= 0.65 - 1e-15);
        CHECK(c <= 0.85 + 1e-15);
    }

    Scenario s4 = make_scenario("test4", 0);
    Fields u4 = initial_fields(s4, g);
    for (double c : u4.c.data) {
        CHECK(c > -1.0);
        CHECK(c < 1.0);
    }
    CHECK(u4.c(0, 0) > 0.99);  // far corner: outside both bubbles
    // center of the left bubble: deep inside one interface
    CHECK(u4.c(static_cast<int>(0.4 * 64), 32) < -0.99);
    for (double v : u4.rho.data) CHECK(v == 1.0);
    for (double v : u4.v1.data) CHECK(v == 0.0);
    for (double v : u4.v2.data) CHECK(v == 0.0);
}

TEST_CASE("noise initialization is seeded and has the right scale") {
    MacGrid g = make_grid(64);
    Scenario sc = make_scenario("test3", 42);
    Fields a = initial_fields(sc, g);
    Fields b = initial_fields(sc, g);
    for (size_t k = 0; k < a.c.size(); ++k) CHECK(a.c.data[k] == b.c.data[k]);  // bitwise

    Scenario other = make_scenario("test3", 43);
    Fields d = initial_fields(other, g);
    int differing = 0;
    for (size_t k = 0; k < a.c.size(); ++k) differing += (a.c.data[k] != d.c.data[k]);
    CHECK(differing > 4000);

    double mean = 0.0, var = 0.0;
    for (double v : a.c.data) mean += v;
    mean /= a.c.size();
    for (double v : a.c.data) var += (v - mean) * (v - mean);
    var /= a.c.size();
    CHECK(std::abs(mean) < 5e-7);  // sigma/sqrt(N) ~ 1.6e-7
    CHECK(var == doctest::Approx(1e-10).epsilon(0.1));
}

TEST_CASE("order scenario starts on the manufactured solution") {
    MacGrid g = make_grid(16);
    Fields U = initial_fields(make_scenario("order", 0), g);
    for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 16; ++i) {
            CHECK(U.rho(i, j) == doctest::Approx(mms_rho(g.xp(i), g.yp(j), 0.0)).epsilon(1e-14));
            CHECK(U.c(i, j) == doctest::Approx(mms_c(g.xp(i), g.yp(j), 0.0)).epsilon(1e-14));
        }
    for (int j = 0; j < 16; ++j)
        for (int f = 0; f < 15; ++f)
            CHECK(U.v1(f, j) == doctest::Approx(mms_v1(g.xf(f), g.yp(j), 0.0)).epsilon(1e-14));
    CHECK(order_test_error(g, U, 0.0) == 0.0);
}

TEST_CASE("error norm and EOC definitions") {
    CHECK(eoc(4e-3, 1e-3) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(eoc(4e-3 * 7.5, 1e-3 * 7.5) == doctest::Approx(2.0).epsilon(1e-12));  // scale invariant

    MacGrid g = make_grid(8);
    Fields U = initial_fields(make_scenario("order", 0), g);
    double e0 = order_test_error(g, U, 0.0);
    CHECK(e0 == 0.0);
    // a unit bump in rho at one primal cell changes e_M by ~(1+|c|)/M^2
    double c00 = U.c(0, 0);
    U.rho(0, 0) += 1.0;
    // rho contributes 1, q contributes |(rho+1)c - rho c| = |c|, and the two
    // adjacent face momenta pick up |0.5 * v1| each
    double expected = (1.0 + std::abs(c00) + 0.5 * std::abs(U.v1(0, 0)) +
                       0.5 * std::abs(U.v2(0, 0))) /
                      64.0;
    CHECK(order_test_error(g, U, 0.0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("config file parsing") {
    fs::path p = tmpdir() / "good.cfg";
    {
        std::ofstream os(p);
        os << "# comment line\n\n  nu = 0.25  \ncfl=0.3 # trailing comment\nkey2=abc\n";
    }
    auto kv = parse_config_file(p.string());
    CHECK(kv.size() == 3);
    CHECK(kv.at("nu") == "0.25");
    CHECK(kv.at("cfl") == "0.3");
    CHECK(kv.at("key2") == "abc");

    fs::path bad = tmpdir() / "bad.cfg";
    {
        std::ofstream os(bad);
        os << "novalue\n";
    }
    CHECK_THROWS_AS(parse_config_file(bad.string()), config_error);
    CHECK_THROWS_AS(parse_config_file((tmpdir() / "missing.cfg").string()), io_error);
}

TEST_CASE("snapshot files round-trip and agree with the state") {
    MacGrid g = make_grid(8);
    Scenario sc = make_scenario("test1", 0);
    Fields U = initial_fields(sc, g);
    fs::path p = tmpdir() / "snap.csv";
    write_snapshot_csv(p.string(), g, sc.par, U);
    auto rows = read_csv(p);
    REQUIRE(rows.size() == 64);
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 8; ++i) {
            const auto& r = rows[j * 8 + i];
            REQUIRE(r.size() == 7);
            CHECK(r[0] == g.xp(i));
            CHECK(r[1] == g.yp(j));
            CHECK(r[2] == U.rho(i, j));  // exact round-trip
            CHECK(r[5] == U.c(i, j));
            CHECK(r[6] == sc.par.pressure(U.rho(i, j)));
        }
    // interior centered velocity is the two-face average
    CHECK(rows[3 * 8 + 3][3] == 0.5 * (U.v1(2, 3) + U.v1(3, 3)));
    // wall cell: one adjacent face is the wall, velocity zero there
    CHECK(rows[0][3] == 0.5 * U.v1(0, 0));

    fs::path pv = tmpdir() / "snap.vtk";
    write_snapshot_vtk(pv.string(), g, sc.par, U);
    std::ifstream is(pv);
    std::string head;
    std::getline(is, head);
    CHECK(head == "# vtk DataFile Version 3.0");
    std::string all((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    CHECK(all.find("DATASET STRUCTURED_POINTS") != std::string::npos);
    CHECK(all.find("DIMENSIONS 8 8 1") != std::string::npos);
    CHECK(all.find("SCALARS rho double 1") != std::string::npos);
    CHECK(all.find("VECTORS velocity double") != std::string::npos);
}

TEST_CASE("diagnostics rows start at zero drift") {
    MacGrid g = make_grid(8);
    Scenario sc = make_scenario("test2", 0);
    Fields U = initial_fields(sc, g);
    double mass0 = field_sum(U.rho);
    double q0 = field_sum(hadamard(U.rho, U.c));
    StepStats st;
    DiagnosticsRow r = make_diagnostics_row(g, U, mass0, q0, st);
    CHECK(r.err_rho == 0.0);
    CHECK(r.err_q == 0.0);
    std::ostringstream os;
    write_diagnostics_header(os);
    write_diagnostics_row(os, r);
    CHECK(os.str().find("t,dt,cs,err_rho,err_q,cmin,cmax,rhomin,it_ch,it_vel") == 0);
}

TEST_CASE("zero level set of a linear field is recovered") {
    MacGrid g = make_grid(16);
    Field c(16, 16);
    for (int j = 0; j < 16; ++j)
        for (int i = 0; i < 16; ++i) c(i, j) = g.xp(i) - 0.53;
    fs::path p = tmpdir() / "level.csv";
    write_levelset_segments(p.string(), g, c);
    auto rows = read_csv(p);
    CHECK(rows.size() == 15);  // one vertical segment per node-lattice row
    for (const auto& r : rows) {
        CHECK(r[0] == doctest::Approx(0.53).epsilon(1e-12));
        CHECK(r[2] == doctest::Approx(0.53).epsilon(1e-12));
    }
}
