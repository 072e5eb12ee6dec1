#include "chns/cahn_hilliard.hpp"

#include <cmath>

#include "chns/errors.hpp"

namespace chns {

Field m2_apply(const Field& c_tilde, double h) {
    const int M = c_tilde.nx;
    require_shape(c_tilde, M, M, "m2_apply: c_tilde");
    Field kappa(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) kappa(i, j) = psi2_second(c_tilde(i, j));

    Field out(M, M);
    const double ih2 = 1.0 / (h * h);
    for (int j = 0; j < M; ++j) {
        for (int i = 0; i < M; ++i) {
            double s = 0.0;
            // interior faces only; coefficient fluxes vanish at the walls
            if (i > 0)
                s += 0.5 * (kappa(i - 1, j) + kappa(i, j)) * (c_tilde(i - 1, j) - c_tilde(i, j));
            if (i < M - 1)
                s += 0.5 * (kappa(i + 1, j) + kappa(i, j)) * (c_tilde(i + 1, j) - c_tilde(i, j));
            if (j > 0)
                s += 0.5 * (kappa(i, j - 1) + kappa(i, j)) * (c_tilde(i, j - 1) - c_tilde(i, j));
            if (j < M - 1)
                s += 0.5 * (kappa(i, j + 1) + kappa(i, j)) * (c_tilde(i, j + 1) - c_tilde(i, j));
            out(i, j) = s * ih2;
        }
    }
    return out;
}

Field ch_rhs(const Field& rho, const Field& c, const Field& c_tilde, double eps, double h) {
    const int M = rho.nx;
    require_shape(rho, M, M, "ch_rhs: rho");
    require_shape(c, M, M, "ch_rhs: c");
    require_shape(c_tilde, M, M, "ch_rhs: c_tilde");

    Field lapc = laplacian2d(c, h);
    Field w(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) w(i, j) = lapc(i, j) / rho(i, j);
    Field lapw = laplacian2d(w, h);
    Field m2 = m2_apply(c_tilde, h);

    Field out(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) out(i, j) = 2.0 * lapc(i, j) + m2(i, j) - eps * lapw(i, j);
    return out;
}

Field chemical_potential(const Field& rho, const Field& c, double eps, double h) {
    const int M = rho.nx;
    Field lapc = laplacian2d(c, h);
    Field mu(M, M);
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i)
            mu(i, j) = rho(i, j) * (psi1_prime(c(i, j)) + psi2_prime(c(i, j))) - eps * lapc(i, j);
    return mu;
}

ChSystemOperator::ChSystemOperator(Field rho, double coeff, double eps, double h)
    : rho_(std::move(rho)), inv_rho_(rho_.nx, rho_.ny), coeff_(coeff), eps_(eps), h_(h),
      M_(rho_.nx) {
    if (rho_.nx != rho_.ny) throw contract_error("ChSystemOperator: rho must be square");
    if (coeff_ < 0.0) throw contract_error("ChSystemOperator: negative coefficient");
    for (int k = 0; k < rho_.nx * rho_.ny; ++k) {
        if (!(rho_.data[k] > 0.0)) throw positivity_error("ChSystemOperator: nonpositive density");
        inv_rho_.data[k] = 1.0 / rho_.data[k];
    }
}

void ChSystemOperator::apply(std::span<const double> x, std::span<double> y) const {
    const int n = dim();
    if ((int)x.size() != n || (int)y.size() != n)
        throw contract_error("ChSystemOperator::apply: size mismatch");
    Field xf(M_, M_);
    std::copy(x.begin(), x.end(), xf.data.begin());
    Field lapx = laplacian2d(xf, h_);
    Field w(M_, M_);
    for (int k = 0; k < n; ++k) w.data[k] = lapx.data[k] * inv_rho_.data[k];
    Field lapw = laplacian2d(w, h_);
    for (int k = 0; k < n; ++k)
        y[k] = rho_.data[k] * x[k] - 2.0 * coeff_ * lapx.data[k] + coeff_ * eps_ * lapw.data[k];
}

std::vector<double> ChSystemOperator::diagonal() const {
    const double ih2 = 1.0 / (h_ * h_);
    std::vector<double> d(dim());
    for (int j = 0; j < M_; ++j) {
        for (int i = 0; i < M_; ++i) {
            int nb = (i > 0) + (i < M_ - 1) + (j > 0) + (j < M_ - 1);
            double lii = -nb * ih2;
            // sum_m L_{im}^2 / rho_m over the Laplacian stencil of row (i,j)
            double s = lii * lii * inv_rho_(i, j);
            if (i > 0) s += ih2 * ih2 * inv_rho_(i - 1, j);
            if (i < M_ - 1) s += ih2 * ih2 * inv_rho_(i + 1, j);
            if (j > 0) s += ih2 * ih2 * inv_rho_(i, j - 1);
            if (j < M_ - 1) s += ih2 * ih2 * inv_rho_(i, j + 1);
            d[i + M_ * j] = rho_(i, j) - 2.0 * coeff_ * lii + coeff_ * eps_ * s;
        }
    }
    return d;
}

double ChSystemOperator::row_value(const double* x, int i, int j) const {
    // (A x)(i,j) evaluated pointwise; x is the current (partially updated) iterate.
    auto xv = [&](int a, int b) { return x[a + M_ * b]; };
    auto lap = [&](int a, int b) {
        double s = 0.0;
        if (a > 0) s += xv(a - 1, b) - xv(a, b);
        if (a < M_ - 1) s += xv(a + 1, b) - xv(a, b);
        if (b > 0) s += xv(a, b - 1) - xv(a, b);
        if (b < M_ - 1) s += xv(a, b + 1) - xv(a, b);
        return s / (h_ * h_);
    };
    auto w = [&](int a, int b) { return lap(a, b) * inv_rho_(a, b); };
    double lapw = 0.0;
    const double wc = w(i, j);
    if (i > 0) lapw += w(i - 1, j) - wc;
    if (i < M_ - 1) lapw += w(i + 1, j) - wc;
    if (j > 0) lapw += w(i, j - 1) - wc;
    if (j < M_ - 1) lapw += w(i, j + 1) - wc;
    lapw /= h_ * h_;
    return rho_(i, j) * xv(i, j) - 2.0 * coeff_ * lap(i, j) + coeff_ * eps_ * lapw;
}

void ChSystemOperator::gs_sweep(std::span<double> x, std::span<const double> b,
                                bool forward) const {
    const int n = dim();
    if ((int)x.size() != n || (int)b.size() != n)
        throw contract_error("ChSystemOperator::gs_sweep: size mismatch");
    std::vector<double> diag = diagonal();
    auto relax = [&](int i, int j) {
        const int k = i + M_ * j;
        double r = b[k] - row_value(x.data(), i, j);
        x[k] += r / diag[k];
    };
    if (forward) {
        for (int j = 0; j < M_; ++j)
            for (int i = 0; i < M_; ++i) relax(i, j);
    } else {
        for (int j = M_ - 1; j >= 0; --j)
            for (int i = M_ - 1; i >= 0; --i) relax(i, j);
    }
}

}  // namespace chns
