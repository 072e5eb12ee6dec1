// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the binary exits nonzero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "chns/cahn_hilliard.hpp"
#include "chns/convection.hpp"
#include "chns/errors.hpp"
#include "chns/fdops.hpp"
#include "chns/forces.hpp"
#include "chns/grid.hpp"
#include "chns/imex.hpp"
#include "chns/linsolve.hpp"
#include "chns/scenarios.hpp"
#include "chns/viscosity.hpp"

using namespace chns;

namespace {

int g_failures = 0;

void report(int num, const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("[%s] %2d: %s%s%s\n", ok ? "PASS" : "FAIL", num, what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

// ---- small dense helpers (self-contained oracles) ----

struct Dense {
    int n = 0;
    std::vector<double> a;  // row-major
    double& at(int i, int j) { return a[i * n + j]; }
    double at(int i, int j) const { return a[i * n + j]; }
};

Dense dense_from(const LinearOperator& A) {
    Dense d;
    d.n = A.dim();
    d.a.assign(static_cast<size_t>(d.n) * d.n, 0.0);
    std::vector<double> e(d.n, 0.0), col(d.n);
    for (int j = 0; j < d.n; ++j) {
        e[j] = 1.0;
        A.apply(e, col);
        e[j] = 0.0;
        for (int i = 0; i < d.n; ++i) d.at(i, j) = col[i];
    }
    return d;
}

double asymmetry(const Dense& d) {
    double m = 0.0;
    for (int i = 0; i < d.n; ++i)
        for (int j = 0; j < i; ++j) m = std::max(m, std::abs(d.at(i, j) - d.at(j, i)));
    return m;
}

// in-place Cholesky; returns false if a nonpositive pivot appears
bool cholesky(Dense& d) {
    for (int j = 0; j < d.n; ++j) {
        double s = d.at(j, j);
        for (int k = 0; k < j; ++k) s -= d.at(j, k) * d.at(j, k);
        if (!(s > 0.0)) return false;
        double l = std::sqrt(s);
        d.at(j, j) = l;
        for (int i = j + 1; i < d.n; ++i) {
            double v = d.at(i, j);
            for (int k = 0; k < j; ++k) v -= d.at(i, k) * d.at(j, k);
            d.at(i, j) = v / l;
        }
    }
    return true;
}

std::vector<double> cholesky_solve(const Dense& chol, const std::vector<double>& b) {
    const int n = chol.n;
    std::vector<double> y(n), x(n);
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= chol.at(i, k) * y[k];
        y[i] = s / chol.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < n; ++k) s -= chol.at(k, i) * x[k];
        x[i] = s / chol.at(i, i);
    }
    return x;
}

Field random_field(int nx, int ny, std::mt19937_64& eng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    Field f(nx, ny);
    for (double& v : f.data) v = d(eng);
    return f;
}

// ---- shared integration driver collecting per-step bound info ----

struct RunSummary {
    double e_order = 0.0;  // manufactured-solution error at T (order scenario)
    double max_rel_mass_drift = 0.0, max_rel_q_drift = 0.0;
    double c_min = 1e300, c_max = -1e300, rho_min = 1e300;
    double first_half_exceed = -1.0;  // first t with max|c| > 0.5
    int floor_accepts = 0;
    double final_half_fraction = 0.0;  // grid fraction with |c| > 0.5 at T
};

RunSummary integrate_scenario(const Scenario& sc, int M, double T, const std::string& scheme,
                              double cfl) {
    MacGrid g = make_grid(M);
    Fields U = initial_fields(sc, g);
    StepControls ctl;
    ctl.cfl = cfl;
    ImexStepper st(g, sc.par, tableau(scheme), ctl, scenario_forcing(sc));

    RunSummary s;
    const double mass0 = field_sum(U.rho);
    const double q0 = field_sum(hadamard(U.rho, U.c));
    const double q_scale = std::max(std::abs(q0), std::abs(mass0));
    double t = 0.0;
    while (t < T - 1e-12 * T) {
        double dt = st.select_dt(U, t, T);
        StepStats r = st.step(U, t, dt);
        t += dt;
        s.max_rel_mass_drift = std::max(
            s.max_rel_mass_drift, std::abs(field_sum(U.rho) - mass0) / std::abs(mass0));
        s.max_rel_q_drift = std::max(
            s.max_rel_q_drift, std::abs(field_sum(hadamard(U.rho, U.c)) - q0) / q_scale);
        s.c_min = std::min(s.c_min, r.c_min);
        s.c_max = std::max(s.c_max, r.c_max);
        s.rho_min = std::min(s.rho_min, r.rho_min);
        s.floor_accepts += r.floor_accepts;
        if (s.first_half_exceed < 0.0 && std::max(std::abs(r.c_min), std::abs(r.c_max)) > 0.5)
            s.first_half_exceed = t;
    }
    int over = 0;
    for (double v : U.c.data) over += (std::abs(v) > 0.5);
    s.final_half_fraction = static_cast<double>(over) / U.c.size();
    if (sc.has_forcing) s.e_order = order_test_error(g, U, T);
    return s;
}

int g_total_floor_accepts = 0;

std::map<int, double> sweep(const std::string& scheme, const std::vector<int>& levels) {
    Scenario sc = make_scenario("order", 0);
    std::map<int, double> e;
    for (int M : levels) {
        RunSummary s = integrate_scenario(sc, M, 0.01, scheme, 0.4);
        e[M] = s.e_order;
        g_total_floor_accepts += s.floor_accepts;
    }
    return e;
}

// conserved tendency of the semidiscrete system, all terms explicit
struct Conserved {
    Field rho, m1, m2, q;
};

Conserved semidiscrete_rhs(const MacGrid& g, const ModelParams& par, const Conserved& u) {
    Fields U{u.rho, Field(g.M - 1, g.M), Field(g.M, g.M - 1), Field(g.M, g.M)};
    Field rx = to_staggered(u.rho, Axis::X), ry = to_staggered(u.rho, Axis::Y);
    for (size_t k = 0; k < U.v1.size(); ++k) U.v1.data[k] = u.m1.data[k] / rx.data[k];
    for (size_t k = 0; k < U.v2.size(); ++k) U.v2.data[k] = u.m2.data[k] / ry.data[k];
    for (size_t k = 0; k < U.c.size(); ++k) U.c.data[k] = u.q.data[k] / u.rho.data[k];

    ConvBlocks C = conv_apply(g, par, U);
    CapillaryBlocks L2 = capillary_apply(U.c, par.eps, g.h);
    Field L1 = gravity_apply(u.rho, par.g);
    auto [visc1, visc2] = visc_apply(U.v1, U.v2, par.nu, par.lambda, g.h);

    Conserved k{std::move(C.rho), std::move(C.m1), std::move(C.m2), std::move(C.q)};
    axpy(1.0, L2.L2_2, k.m1);
    axpy(1.0, visc1, k.m1);
    axpy(1.0, L1, k.m2);
    axpy(1.0, L2.L2_3, k.m2);
    axpy(1.0, visc2, k.m2);
    Field ch = ch_rhs(u.rho, U.c, U.c, par.eps, g.h);
    axpy(1.0, ch, k.q);
    return k;
}

// ---- criteria ----

void criterion_1_and_2() {
    std::vector<int> levels = {8, 16, 32, 64, 128};
    std::map<int, double> ed = sweep("dirksa", levels);
    bool ok = true;
    std::string detail;
    for (int M : {16, 32, 64}) {
        double r = eoc(ed[M], ed[2 * M]);
        detail += "EOC_" + std::to_string(M) + "=" + fmt(r) + " ";
        ok = ok && r >= 1.85 && r <= 2.15;
    }
    double f8 = ed[8] / 1.5423e-02, f64 = ed[64] / 2.3639e-04;
    ok = ok && f8 > 1.0 / 3.0 && f8 < 3.0 && f64 > 1.0 / 3.0 && f64 < 3.0;
    detail += "e8=" + fmt(ed[8]) + " e64=" + fmt(ed[64]);
    report(1, "second-order convergence on the manufactured solution", ok, detail);

    std::vector<int> levels2 = {8, 16, 32, 64, 128, 256};
    std::map<int, double> ee = sweep("ee_ie", levels2);
    double last = eoc(ee[128], ee[256]);
    bool ok2 = ee[64] > ed[64] && ee[128] > ed[128] && last < 1.8;
    report(2, "first-order scheme is less accurate and its order degrades", ok2,
           "e64=" + fmt(ee[64]) + " vs " + fmt(ed[64]) + ", finest EOC=" + fmt(last));
}

void criterion_3() {
    std::mt19937_64 eng(12345);
    bool ok = true;
    for (int M : {4, 8, 16}) {
        MacGrid g = make_grid(M);
        Field rho1(M, M);
        for (double& v : rho1.data) v = 1.0;
        Field rho2 = random_field(M, M, eng, 0.5, 2.0);
        for (auto [nu, lam] : {std::pair{1.0, 0.0}, {1.0, 0.1}, {1e-3, 1e-4}}) {
            for (const Field* rho : {&rho1, &rho2}) {
                ViscSystemOperator A(to_staggered(*rho, Axis::X), to_staggered(*rho, Axis::Y),
                                     1e-3, nu, lam, g.h);
                Dense d = dense_from(A);
                ok = ok && asymmetry(d) <= 1e-12 && cholesky(d);
            }
        }
        for (double coeff : {0.0, 1e-3}) {
            for (const Field* rho : {&rho1, &rho2}) {
                ChSystemOperator A(*rho, coeff, 1e-4, g.h);
                Dense d = dense_from(A);
                ok = ok && asymmetry(d) <= 1e-12 && cholesky(d);
            }
        }
    }
    report(3, "stage operators are symmetric positive definite", ok);
}

void criterion_4_5_6() {
    RunSummary t1 = integrate_scenario(make_scenario("test1", 0), 64, 0.1, "dirksa", 0.4);
    g_total_floor_accepts += t1.floor_accepts;
    bool ok4 = t1.max_rel_mass_drift <= 1e-10 && t1.max_rel_q_drift <= 1e-10;
    report(4, "mass and order-parameter totals conserved to 1e-10", ok4,
           "rho drift " + fmt(t1.max_rel_mass_drift) + ", q drift " + fmt(t1.max_rel_q_drift));

    bool ok5 = true;
    std::string d5;
    RunSummary long3;
    for (const char* name : {"test1", "test3"}) {
        RunSummary s = integrate_scenario(make_scenario(name, 1), 64, 1.0, "dirksa", 0.4);
        g_total_floor_accepts += s.floor_accepts;
        ok5 = ok5 && s.c_min >= -1.05 && s.c_max <= 1.05 && s.rho_min > 0.0;
        d5 += std::string(name) + ": c in [" + fmt(s.c_min) + "," + fmt(s.c_max) +
              "], rho_min " + fmt(s.rho_min) + "  ";
        if (std::string(name) == "test3") long3 = s;
    }
    report(5, "order parameter stays near [-1,1] and density stays positive", ok5, d5);

    bool ok6 = long3.first_half_exceed > 0.0 && long3.first_half_exceed <= 0.5 &&
               long3.final_half_fraction > 0.5;
    report(6, "spinodal decomposition initiates and saturates from tiny noise", ok6,
           "|c|>0.5 first at t=" + fmt(long3.first_half_exceed) + ", final fraction " +
               fmt(long3.final_half_fraction));
}

double assembly_cross_check();

void criterion_7() {
    std::mt19937_64 eng(999);
    double worst = 0.0;
    for (int M : {4, 8, 16}) {
        MacGrid g = make_grid(M);
        for (int trial = 0; trial < 100; ++trial) {
            Field c = random_field(M, M, eng, -1.0, 1.0);
            CapillaryBlocks s = capillary_apply(c, 1e-2, g.h);
            CapillaryBlocks m = capillary_apply_matrix(c, 1e-2, build_fd_matrices(M, g.h));
            double scale = std::max({field_max_abs(s.L2_2), field_max_abs(s.L2_3), 1.0});
            for (size_t k = 0; k < s.L2_2.size(); ++k)
                worst = std::max(worst, std::abs(s.L2_2.data[k] - m.L2_2.data[k]) / scale);
            for (size_t k = 0; k < s.L2_3.size(); ++k)
                worst = std::max(worst, std::abs(s.L2_3.data[k] - m.L2_3.data[k]) / scale);

            Field v1 = random_field(M - 1, M, eng, -1.0, 1.0);
            Field v2 = random_field(M, M - 1, eng, -1.0, 1.0);
            auto [a1, a2] = visc_apply(v1, v2, 1.0, 0.1, g.h);
            auto [b1, b2] = visc_apply_matrix(v1, v2, 1.0, 0.1, g.h);
            double vs = std::max({field_max_abs(a1), field_max_abs(a2), 1.0});
            for (size_t k = 0; k < a1.size(); ++k)
                worst = std::max(worst, std::abs(a1.data[k] - b1.data[k]) / vs);
            for (size_t k = 0; k < a2.size(); ++k)
                worst = std::max(worst, std::abs(a2.data[k] - b2.data[k]) / vs);
        }
    }
    double assembly_gap = assembly_cross_check();
    bool ok = worst <= 1e-12 && assembly_gap <= 1e-8;
    report(7, "stencil/matrix force forms and step assembly cross-validate", ok,
           "max relative gap " + fmt(worst) + ", step assembly gap " + fmt(assembly_gap));
}

// one first-order IMEX step reproduced with independent dense stage solves
double assembly_cross_check() {
    const int M = 8;
    MacGrid g = make_grid(M);
    ModelParams par;
    Fields U = initial_fields(make_scenario("test1", 0), g);
    const double dt = 1e-3;

    Fields U1 = U;
    ImexStepper st(g, par, tableau("ee_ie"), StepControls{});
    st.step(U1, 0.0, dt);

    // independent reconstruction
    Field rx = to_staggered(U.rho, Axis::X), ry = to_staggered(U.rho, Axis::Y);
    Field m1 = hadamard(rx, U.v1), m2 = hadamard(ry, U.v2), q = hadamard(U.rho, U.c);
    ConvBlocks C = conv_apply(g, par, U);
    Field rho1 = U.rho;
    axpy(dt, C.rho, rho1);

    ChSystemOperator Ach(rho1, dt, par.eps, g.h);
    Dense dch = dense_from(Ach);
    cholesky(dch);
    Field rhs_q = q;
    axpy(dt, C.q, rhs_q);
    Field m2c = m2_apply(U.c, g.h);
    axpy(dt, m2c, rhs_q);
    std::vector<double> c1v = cholesky_solve(dch, rhs_q.data);
    Field c1(M, M);
    c1.data = c1v;

    CapillaryBlocks L2 = capillary_apply(c1, par.eps, g.h);
    Field L1 = gravity_apply(rho1, par.g);
    ViscSystemOperator Av(to_staggered(rho1, Axis::X), to_staggered(rho1, Axis::Y), dt,
                          par.nu, par.lambda, g.h);
    Dense dv = dense_from(Av);
    cholesky(dv);
    std::vector<double> bv(Av.dim());
    Field rhs1 = m1, rhs2 = m2;
    axpy(dt, C.m1, rhs1);
    axpy(dt, L2.L2_2, rhs1);
    axpy(dt, C.m2, rhs2);
    axpy(dt, L1, rhs2);
    axpy(dt, L2.L2_3, rhs2);
    std::copy(rhs1.data.begin(), rhs1.data.end(), bv.begin());
    std::copy(rhs2.data.begin(), rhs2.data.end(), bv.begin() + rhs1.size());
    std::vector<double> vv = cholesky_solve(dv, bv);
    Field v1s(M - 1, M), v2s(M, M - 1);
    std::copy(vv.begin(), vv.begin() + v1s.size(), v1s.data.begin());
    std::copy(vv.begin() + v1s.size(), vv.end(), v2s.data.begin());

    // tendency = convection + independently evaluated stiff submodules
    auto [visc1, visc2] = visc_apply(v1s, v2s, par.nu, par.lambda, g.h);
    Field ch = ch_rhs(rho1, c1, U.c, par.eps, g.h);
    Field n_m1 = rhs1, n_m2 = rhs2, n_q = q;
    axpy(dt, visc1, n_m1);
    axpy(dt, visc2, n_m2);
    axpy(dt, C.q, n_q);
    axpy(dt, ch, n_q);

    double worst = 0.0;
    for (size_t k = 0; k < rho1.size(); ++k)
        worst = std::max(worst, std::abs(U1.rho.data[k] - rho1.data[k]));
    Field rx1 = to_staggered(rho1, Axis::X), ry1 = to_staggered(rho1, Axis::Y);
    for (size_t k = 0; k < n_m1.size(); ++k)
        worst = std::max(worst, std::abs(rx1.data[k] * U1.v1.data[k] - n_m1.data[k]));
    for (size_t k = 0; k < n_m2.size(); ++k)
        worst = std::max(worst, std::abs(ry1.data[k] * U1.v2.data[k] - n_m2.data[k]));
    for (size_t k = 0; k < n_q.size(); ++k)
        worst = std::max(worst, std::abs(U1.rho.data[k] * U1.c.data[k] - n_q.data[k]));
    return worst;
}

void criterion_8() {
    const int M = 8;
    MacGrid g = make_grid(M);
    ModelParams par;
    Fields U0 = initial_fields(make_scenario("test1", 0), g);
    Conserved u{U0.rho, hadamard(to_staggered(U0.rho, Axis::X), U0.v1),
                hadamard(to_staggered(U0.rho, Axis::Y), U0.v2), hadamard(U0.rho, U0.c)};

    auto saxpy = [](double a, const Conserved& x, Conserved& y) {
        axpy(a, x.rho, y.rho);
        axpy(a, x.m1, y.m1);
        axpy(a, x.m2, y.m2);
        axpy(a, x.q, y.q);
    };

    const double T = 1e-4, dt = 1e-7;
    const int steps = static_cast<int>(T / dt + 0.5);
    for (int n = 0; n < steps; ++n) {  // classical RK4 reference
        Conserved k1 = semidiscrete_rhs(g, par, u);
        Conserved u2 = u;
        saxpy(0.5 * dt, k1, u2);
        Conserved k2 = semidiscrete_rhs(g, par, u2);
        Conserved u3 = u;
        saxpy(0.5 * dt, k2, u3);
        Conserved k3 = semidiscrete_rhs(g, par, u3);
        Conserved u4 = u;
        saxpy(dt, k3, u4);
        Conserved k4 = semidiscrete_rhs(g, par, u4);
        saxpy(dt / 6.0, k1, u);
        saxpy(dt / 3.0, k2, u);
        saxpy(dt / 3.0, k3, u);
        saxpy(dt / 6.0, k4, u);
    }

    Fields U = U0;
    ImexStepper st(g, par, tableau("dirksa"), StepControls{});
    for (int n = 0; n < 10; ++n) st.step(U, n * 1e-5, 1e-5);

    double worst = 0.0;
    for (size_t k = 0; k < u.rho.size(); ++k)
        worst = std::max(worst, std::abs(U.rho.data[k] - u.rho.data[k]));
    Field rx = to_staggered(U.rho, Axis::X), ry = to_staggered(U.rho, Axis::Y);
    for (size_t k = 0; k < u.m1.size(); ++k)
        worst = std::max(worst, std::abs(rx.data[k] * U.v1.data[k] - u.m1.data[k]));
    for (size_t k = 0; k < u.m2.size(); ++k)
        worst = std::max(worst, std::abs(ry.data[k] * U.v2.data[k] - u.m2.data[k]));
    for (size_t k = 0; k < u.q.size(); ++k)
        worst = std::max(worst, std::abs(U.rho.data[k] * U.c.data[k] - u.q.data[k]));
    report(8, "scheme tracks an explicit high-order reference of the semidiscrete system",
           worst <= 1e-6, "max component gap " + fmt(worst));
}

void criterion_9() {
    // smooth profile: windows of point samples of sin; the kernel reconstructs
    // the function whose cell averages are the samples, i.e. sin scaled by
    // (h/2)/sin(h/2), at the half-offset target
    auto max_err = [](double h) {
        double worst = 0.0;
        for (double x0 = 0.1; x0 < 6.0; x0 += 0.37) {
            double f[5];
            for (int s = 0; s < 5; ++s) f[s] = std::sin(x0 + (s - 2) * h);
            double target = std::sin(x0 + 0.5 * h) * (0.5 * h) / std::sin(0.5 * h);
            worst = std::max(worst, std::abs(weno5(f) - target));
        }
        return worst;
    };
    double e1 = max_err(0.02), e2 = max_err(0.01), e3 = max_err(0.005);
    double r1 = e1 / e2, r2 = e2 / e3;
    bool ok = r1 >= 28.0 && r1 <= 36.0 && r2 >= 28.0 && r2 <= 36.0;
    report(9, "fifth-order reconstruction on smooth profiles", ok,
           "ratios " + fmt(r1) + ", " + fmt(r2));
}

void criterion_10() {
    std::mt19937_64 eng(31337);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0.0;
    for (int n : {50, 120, 200}) {
        Dense spd;
        spd.n = n;
        spd.a.assign(static_cast<size_t>(n) * n, 0.0);
        std::vector<double> r(static_cast<size_t>(n) * n);
        for (double& v : r) v = dist(eng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = (i == j) ? n : 0.0;
                for (int k = 0; k < n; ++k) s += r[k * n + i] * r[k * n + j];
                spd.at(i, j) = s;
            }

        struct DenseOp : LinearOperator {
            const Dense* d;
            int dim() const override { return d->n; }
            void apply(std::span<const double> x, std::span<double> y) const override {
                for (int i = 0; i < d->n; ++i) {
                    double s = 0.0;
                    for (int j = 0; j < d->n; ++j) s += d->at(i, j) * x[j];
                    y[i] = s;
                }
            }
        } op;
        op.d = &spd;

        std::vector<double> b(n);
        for (double& v : b) v = dist(eng);
        std::vector<double> x(n, 0.0);
        SolveReport rep = cg(op, b, x, 1e-12, 10 * n);
        Dense chol = spd;
        cholesky(chol);
        std::vector<double> xd = cholesky_solve(chol, b);
        double xmax = 0.0, gap = 0.0;
        for (int i = 0; i < n; ++i) {
            xmax = std::max(xmax, std::abs(xd[i]));
            gap = std::max(gap, std::abs(x[i] - xd[i]));
        }
        worst = std::max(worst, gap / xmax);
        if (!rep.converged) worst = 1.0;
    }
    // A handful of solves in the near-vacuum test-3 regime stagnate at the
    // double-precision residual floor; the stepper certifies each of those
    // against eps*sqrt(n)*||A||*||x|| before accepting, so only rarity is
    // checked here.
    bool ok = worst <= 1e-9 && g_total_floor_accepts <= 16;
    report(10, "conjugate gradient matches direct solves; stage solves met tolerance", ok,
           "max gap " + fmt(worst) + ", roundoff-floor accepts " +
               std::to_string(g_total_floor_accepts));
}

}  // namespace

int main() {
    criterion_1_and_2();
    criterion_3();
    criterion_4_5_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s (%d failure%s)\n", g_failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
                g_failures, g_failures == 1 ? "" : "s");
    return g_failures == 0 ? 0 : 1;
}
