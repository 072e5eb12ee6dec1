#include "chns/imex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "chns/cahn_hilliard.hpp"
#include "chns/errors.hpp"
#include "chns/forces.hpp"
#include "chns/mg.hpp"
#include "chns/viscosity.hpp"

namespace chns {

ButcherPair tableau(const std::string& name) {
    ButcherPair t;
    t.name = name;
    if (name == "ee_ie") {
        t.s = 1;
        t.at = {{0.0}};
        t.gt = {0.0};
        t.a = {{1.0}};
        t.g = {1.0};
        t.b = {1.0};
        return t;
    }
    if (name == "dirksa") {
        const double r = 1.0 / std::sqrt(2.0);
        t.s = 2;
        t.at = {{0.0, 0.0}, {1.0 + r, 0.0}};
        t.gt = {0.0, 1.0 + r};
        t.a = {{1.0 - r, 0.0}, {r, 1.0 - r}};
        t.g = {1.0 - r, 1.0};
        t.b = {r, 1.0 - r};
        return t;
    }
    throw config_error("unknown scheme: " + name);
}

ImexStepper::ImexStepper(MacGrid grid, ModelParams par, ButcherPair tab, StepControls ctl,
                         Forcing forcing)
    : grid_(grid), par_(par), tab_(std::move(tab)), ctl_(ctl), forcing_(std::move(forcing)) {
    par_.validate();
    if (tab_.s < 1) throw config_error("ImexStepper: empty tableau");
    if (!(ctl_.cfl > 0.0)) throw config_error("ImexStepper: cfl must be positive");
}

double ImexStepper::select_dt(const Fields& U, double t, double T) const {
    const double cs = max_char_speed(grid_, par_, U);
    double dt = (cs > 0.0) ? ctl_.cfl * grid_.h / cs : T - t;
    if (t + dt > T) dt = T - t;
    return dt;
}

ImexStepper::Blocks ImexStepper::eval_conv_forced(const Fields& U, double ts) const {
    ConvBlocks C = conv_apply(grid_, par_, U);
    Blocks B{std::move(C.rho), std::move(C.m1), std::move(C.m2), std::move(C.q)};
    if (forcing_.active()) {
        const int M = grid_.M;
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) {
                B.rho(i, j) += forcing_.s_rho(grid_.xp(i), grid_.yp(j), ts);
                B.q(i, j) += forcing_.s_q(grid_.xp(i), grid_.yp(j), ts);
            }
        for (int j = 0; j < M; ++j)
            for (int f = 0; f < M - 1; ++f) B.m1(f, j) += forcing_.s_m1(grid_.xf(f), grid_.yp(j), ts);
        for (int g = 0; g < M - 1; ++g)
            for (int i = 0; i < M; ++i) B.m2(i, g) += forcing_.s_m2(grid_.xp(i), grid_.yg(g), ts);
    }
    return B;
}

namespace {

void require_positive(const Field& rho, const char* what) {
    for (double v : rho.data)
        if (!(v > 0.0)) throw positivity_error(std::string(what) + ": density lost positivity");
}

// In finite precision CG cannot push the true residual much below
// eps * sqrt(n) * ||A|| * ||x||; on fine grids the biharmonic part makes that
// floor exceed tol*||b||. Accept a stagnated solve sitting at the floor.
bool at_roundoff_floor(const LinearOperator& A, std::span<const double> x, double residual) {
    const std::vector<double> d = A.diagonal();
    double amax = 0.0;
    for (double v : d) amax = std::max(amax, std::abs(v));
    double xnorm = 0.0;
    for (double v : x) xnorm += v * v;
    xnorm = std::sqrt(xnorm);
    const double floor = 32.0 * std::numeric_limits<double>::epsilon() *
                         std::sqrt(static_cast<double>(A.dim())) * amax * xnorm;
    return residual <= floor;
}

Field divide_staggered(const Field& m, const Field& rho, Axis axis) {
    Field r = to_staggered(rho, axis);
    Field v(m.nx, m.ny);
    for (size_t k = 0; k < v.size(); ++k) v.data[k] = m.data[k] / r.data[k];
    return v;
}

}  // namespace

StepStats ImexStepper::step(Fields& U, double t, double dt) {
    if (!(dt > 0.0)) throw contract_error("step: dt must be positive");
    check_admissible(grid_, U);
    const int M = grid_.M;
    const int s = tab_.s;

    // conserved registers at t^n
    Field rho_n = U.rho;
    Field rx_n = to_staggered(U.rho, Axis::X), ry_n = to_staggered(U.rho, Axis::Y);
    Field m1_n = hadamard(rx_n, U.v1), m2_n = hadamard(ry_n, U.v2);
    Field q_n = hadamard(U.rho, U.c);

    std::vector<Blocks> K;
    K.reserve(s);
    StepStats st;
    st.t = t;
    st.dt = dt;

    for (int i = 0; i < s; ++i) {
        // explicit predictor in conserved variables
        Field rt = rho_n, m1t = m1_n, m2t = m2_n, qt = q_n;
        for (int j = 0; j < i; ++j) {
            const double w = dt * tab_.at[i][j];
            if (w == 0.0) continue;
            axpy(w, K[j].rho, rt);
            axpy(w, K[j].m1, m1t);
            axpy(w, K[j].m2, m2t);
            axpy(w, K[j].q, qt);
        }
        require_positive(rt, "predictor");
        Fields Ut{rt, divide_staggered(m1t, rt, Axis::X), divide_staggered(m2t, rt, Axis::Y),
                  Field(M, M)};
        for (size_t k = 0; k < qt.size(); ++k) Ut.c.data[k] = qt.data[k] / rt.data[k];

        Blocks C = eval_conv_forced(Ut, t + tab_.gt[i] * dt);
        const double aii = tab_.a[i][i];
        const double coeff = dt * aii;

        // stage density, including the diagonal convective increment
        Field rho_i = rho_n;
        for (int j = 0; j < i; ++j) axpy(dt * tab_.a[i][j], K[j].rho, rho_i);
        axpy(coeff, C.rho, rho_i);
        require_positive(rho_i, "stage density");

        // order parameter stage system
        Field rhs_q = q_n;
        for (int j = 0; j < i; ++j) axpy(dt * tab_.a[i][j], K[j].q, rhs_q);
        Field m2c = m2_apply(Ut.c, grid_.h);
        Field c_i(M, M);
        if (coeff > 0.0) {
            axpy(coeff, C.q, rhs_q);
            axpy(coeff, m2c, rhs_q);
            ChSystemOperator Ach(rho_i, coeff, par_.eps, grid_.h);
            MgHierarchy Hch;
            Preconditioner pc;
            const Preconditioner* pcp = nullptr;
            if (ctl_.use_mg && mg_coarsenable(M)) {
                Hch = build_ch_hierarchy(rho_i, coeff, par_.eps, grid_.h);
                pc = Hch.pc->as_preconditioner();
                pcp = &pc;
            }
            c_i = Ut.c;  // warm start from the predictor
            SolveReport rep = cg(Ach, rhs_q.data, c_i.data, ctl_.ch_tol,
                                 ctl_.max_iter_factor * Ach.dim(), pcp);
            if (!rep.converged) {
                if (!at_roundoff_floor(Ach, c_i.data, rep.final_residual))
                    throw solver_error("order-parameter stage solve did not converge (residual " +
                                       std::to_string(rep.final_residual) + ")");
                ++st.floor_accepts;
            }
            st.ch_iterations += rep.iterations;
        } else {
            for (size_t k = 0; k < c_i.size(); ++k) c_i.data[k] = rhs_q.data[k] / rho_i.data[k];
        }

        // stiff forces at the stage state
        CapillaryBlocks L2 = capillary_apply(c_i, par_.eps, grid_.h);
        Field L1 = gravity_apply(rho_i, par_.g);

        // velocity stage system
        Field rhs_m1 = m1_n, rhs_m2 = m2_n;
        for (int j = 0; j < i; ++j) {
            axpy(dt * tab_.a[i][j], K[j].m1, rhs_m1);
            axpy(dt * tab_.a[i][j], K[j].m2, rhs_m2);
        }
        Field v1_i(M - 1, M), v2_i(M, M - 1);
        if (coeff > 0.0) {
            axpy(coeff, C.m1, rhs_m1);
            axpy(coeff, L2.L2_2, rhs_m1);
            axpy(coeff, C.m2, rhs_m2);
            axpy(coeff, L1, rhs_m2);
            axpy(coeff, L2.L2_3, rhs_m2);

            ViscSystemOperator Av(to_staggered(rho_i, Axis::X), to_staggered(rho_i, Axis::Y),
                                  coeff, par_.nu, par_.lambda, grid_.h);
            MgHierarchy Hv;
            Preconditioner pc;
            const Preconditioner* pcp = nullptr;
            if (ctl_.use_mg && mg_coarsenable(M)) {
                Hv = build_visc_hierarchy(rho_i, coeff, par_.nu, par_.lambda, grid_.h);
                pc = Hv.pc->as_preconditioner();
                pcp = &pc;
            }
            std::vector<double> xv(Av.dim()), bv(Av.dim());
            const int n1 = (M - 1) * M;
            std::copy(Ut.v1.data.begin(), Ut.v1.data.end(), xv.begin());       // warm start
            std::copy(Ut.v2.data.begin(), Ut.v2.data.end(), xv.begin() + n1);
            std::copy(rhs_m1.data.begin(), rhs_m1.data.end(), bv.begin());
            std::copy(rhs_m2.data.begin(), rhs_m2.data.end(), bv.begin() + n1);
            SolveReport rep =
                cg(Av, bv, xv, ctl_.vel_tol, ctl_.max_iter_factor * Av.dim(), pcp);
            if (!rep.converged) {
                if (!at_roundoff_floor(Av, xv, rep.final_residual))
                    throw solver_error("velocity stage solve did not converge (residual " +
                                       std::to_string(rep.final_residual) + ")");
                ++st.floor_accepts;
            }
            st.vel_iterations += rep.iterations;
            std::copy(xv.begin(), xv.begin() + n1, v1_i.data.begin());
            std::copy(xv.begin() + n1, xv.end(), v2_i.data.begin());
        } else {
            v1_i = divide_staggered(rhs_m1, rho_i, Axis::X);
            v2_i = divide_staggered(rhs_m2, rho_i, Axis::Y);
        }

        // assemble the stage register by direct evaluation; this keeps the
        // conservative blocks exactly conservative
        Blocks Ki{std::move(C.rho), std::move(C.m1), std::move(C.m2), std::move(C.q)};
        auto [visc1, visc2] = visc_apply(v1_i, v2_i, par_.nu, par_.lambda, grid_.h);
        axpy(1.0, L2.L2_2, Ki.m1);
        axpy(1.0, visc1, Ki.m1);
        axpy(1.0, L1, Ki.m2);
        axpy(1.0, L2.L2_3, Ki.m2);
        axpy(1.0, visc2, Ki.m2);
        Field diff_q = ch_rhs(rho_i, c_i, Ut.c, par_.eps, grid_.h);
        axpy(1.0, diff_q, Ki.q);
        K.push_back(std::move(Ki));
    }

    // conserved update with the shared weights
    Field rho_new = rho_n, m1_new = m1_n, m2_new = m2_n, q_new = q_n;
    for (int j = 0; j < s; ++j) {
        const double w = dt * tab_.b[j];
        axpy(w, K[j].rho, rho_new);
        axpy(w, K[j].m1, m1_new);
        axpy(w, K[j].m2, m2_new);
        axpy(w, K[j].q, q_new);
    }
    require_positive(rho_new, "step");

    U.rho = rho_new;
    U.v1 = divide_staggered(m1_new, rho_new, Axis::X);
    U.v2 = divide_staggered(m2_new, rho_new, Axis::Y);
    for (size_t k = 0; k < q_new.size(); ++k) U.c.data[k] = q_new.data[k] / rho_new.data[k];
    check_admissible(grid_, U);

    st.cs = max_char_speed(grid_, par_, U);
    st.rho_min = *std::min_element(U.rho.data.begin(), U.rho.data.end());
    st.rho_max = *std::max_element(U.rho.data.begin(), U.rho.data.end());
    st.c_min = *std::min_element(U.c.data.begin(), U.c.data.end());
    st.c_max = *std::max_element(U.c.data.begin(), U.c.data.end());
    return st;
}

}  // namespace chns
