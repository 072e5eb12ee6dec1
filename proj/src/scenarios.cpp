#include "chns/scenarios.hpp"

#include <cmath>
#include <random>

#include "chns/errors.hpp"
#include "chns/mms.hpp"

namespace chns {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Box-Muller on top of mt19937_64 so noise fields are reproducible across
// standard libraries (std::normal_distribution is implementation-defined).
class NormalSampler {
public:
    explicit NormalSampler(std::uint64_t seed) : eng_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform_open();
        double u2 = uniform_open();
        double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2.0 * kPi * u2);
        have_spare_ = true;
        return r * std::cos(2.0 * kPi * u2);
    }

private:
    double uniform_open() {
        // (0,1): 53-bit mantissa, shifted off zero
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53;
    }

    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

double bubble(double x, double y, double cx, double cy, double eps) {
    double r = std::sqrt((x - cx) * (x - cx) + (y - cy) * (y - cy));
    return std::tanh((r - 0.1) / (2.0 * eps * std::sqrt(2.0)));
}

}  // namespace

Scenario make_scenario(const std::string& name, std::uint64_t seed) {
    Scenario sc;
    sc.name = name;
    sc.seed = seed;
    sc.par = ModelParams{};  // gamma=5/3, Cp=1, eps=1e-4, nu=1, lambda=0.1, g=-10
    if (name == "order") {
        sc.T = 0.01;
        sc.has_forcing = true;
    } else if (name == "test1") {
        sc.T = 0.5;
    } else if (name == "test2") {
        sc.T = 0.7;
    } else if (name == "test3") {
        sc.T = 1.0;
        sc.par.nu = 1e-3;
        sc.par.lambda = 1e-4;
    } else if (name == "test4") {
        sc.T = 5e-3;
        sc.par.Cp = 1e4;
        sc.par.nu = 0.1;
        sc.par.lambda = 0.1;
        sc.par.eps = 0.01;
    } else {
        throw config_error("unknown scenario: " + name);
    }
    sc.par.validate();
    return sc;
}

Fields initial_fields(const Scenario& sc, const MacGrid& g) {
    Fields U = make_fields(g);
    const int M = g.M;

    if (sc.name == "order" || sc.name == "test1" || sc.name == "test2") {
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) {
                double x = g.xp(i), y = g.yp(j);
                U.rho(i, j) = 1.25 + 0.1 * std::cos(2.0 * kPi * x) * std::cos(kPi * y);
                double c = 0.1 * std::cos(kPi * x) * std::cos(kPi * y);
                if (sc.name != "test1") c += 0.75;
                U.c(i, j) = c;
            }
        for (int j = 0; j < M; ++j)
            for (int f = 0; f < M - 1; ++f)
                U.v1(f, j) = std::sin(kPi * g.xf(f)) * std::sin(kPi * g.yp(j));
        for (int gg = 0; gg < M - 1; ++gg)
            for (int i = 0; i < M; ++i)
                U.v2(i, gg) = std::sin(kPi * g.xp(i)) * std::sin(2.0 * kPi * g.yg(gg));
        return U;
    }

    // tests 3 and 4: fluid at rest, unit density
    for (double& v : U.rho.data) v = 1.0;
    if (sc.name == "test3") {
        NormalSampler normal(sc.seed);
        const double sigma = std::sqrt(1e-10);
        for (double& v : U.c.data) v = sigma * normal();
    } else {  // test4
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) {
                double x = g.xp(i), y = g.yp(j);
                U.c(i, j) = bubble(x, y, 0.4, 0.5, sc.par.eps) *
                            bubble(x, y, 0.6, 0.5, sc.par.eps);
            }
    }
    return U;
}

Forcing scenario_forcing(const Scenario& sc) {
    Forcing f;
    if (!sc.has_forcing) return f;
    ModelParams par = sc.par;
    f.s_rho = [](double x, double y, double t) { return mms_s_rho(x, y, t); };
    f.s_m1 = [par](double x, double y, double t) { return mms_s_m1(x, y, t, par); };
    f.s_m2 = [par](double x, double y, double t) { return mms_s_m2(x, y, t, par); };
    f.s_q = [par](double x, double y, double t) { return mms_s_q(x, y, t, par); };
    return f;
}

double order_test_error(const MacGrid& g, const Fields& U, double t) {
    const int M = g.M;
    // exact solution sampled on the native grids, then converted to the same
    // conserved variables the scheme evolves
    Fields E = make_fields(g);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) {
            E.rho(i, j) = mms_rho(g.xp(i), g.yp(j), t);
            E.c(i, j) = mms_c(g.xp(i), g.yp(j), t);
        }
    for (int j = 0; j < M; ++j)
        for (int f = 0; f < M - 1; ++f) E.v1(f, j) = mms_v1(g.xf(f), g.yp(j), t);
    for (int gg = 0; gg < M - 1; ++gg)
        for (int i = 0; i < M; ++i) E.v2(i, gg) = mms_v2(g.xp(i), g.yg(gg), t);

    Field rxu = to_staggered(U.rho, Axis::X), ryu = to_staggered(U.rho, Axis::Y);
    Field rxe = to_staggered(E.rho, Axis::X), rye = to_staggered(E.rho, Axis::Y);
    double s = 0.0;
    for (size_t k = 0; k < U.rho.size(); ++k) {
        s += std::abs(U.rho.data[k] - E.rho.data[k]);
        s += std::abs(U.rho.data[k] * U.c.data[k] - E.rho.data[k] * E.c.data[k]);
    }
    for (size_t k = 0; k < U.v1.size(); ++k)
        s += std::abs(rxu.data[k] * U.v1.data[k] - rxe.data[k] * E.v1.data[k]);
    for (size_t k = 0; k < U.v2.size(); ++k)
        s += std::abs(ryu.data[k] * U.v2.data[k] - rye.data[k] * E.v2.data[k]);
    return s / (static_cast<double>(M) * M);
}

}  // namespace chns
