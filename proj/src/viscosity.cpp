#include "chns/viscosity.hpp"

#include <algorithm>

#include "chns/errors.hpp"

namespace chns {

namespace {

// pointwise accessors with Dirichlet (normal) zero padding; callers pass the
// raw column-major data of the two components
struct VPair {
    const double* v1;  // (M-1) x M
    const double* v2;  // M x (M-1)
    int M;

    double u(int f, int j) const {  // zero outside interior x-faces
        if (f < 0 || f > M - 2) return 0.0;
        return v1[f + (M - 1) * j];
    }
    double w(int i, int g) const {  // zero outside interior y-faces
        if (g < 0 || g > M - 2) return 0.0;
        return v2[i + M * g];
    }
};

// block-x row: (2nu+lambda) u_xx + nu u_yy + (nu+lambda) w_xy at x-face (f,j)
double l42_row(const VPair& v, int f, int j, double nu, double lambda, double h) {
    const int M = v.M;
    const double ih2 = 1.0 / (h * h);
    double xx = (v.u(f - 1, j) - 2.0 * v.u(f, j) + v.u(f + 1, j)) * ih2;
    int dval = 2 + (j == 0) + (j == M - 1);
    double yy = ((j > 0 ? v.u(f, j - 1) : 0.0) + (j < M - 1 ? v.u(f, j + 1) : 0.0) -
                 dval * v.u(f, j)) *
                ih2;
    // T(f,j) = (w(f,j) - w(f+1,j))/h, then zero-wall divergence in y
    auto T = [&](int jj) { return (v.w(f, jj) - v.w(f + 1, jj)) / h; };
    double tdy;
    if (j == 0)
        tdy = T(0) / h;
    else if (j == M - 1)
        tdy = -T(M - 2) / h;
    else
        tdy = (T(j) - T(j - 1)) / h;
    return (2.0 * nu + lambda) * xx + nu * yy - (nu + lambda) * tdy;
}

// block-y row: (nu+lambda) u_xy + nu w_xx + (2nu+lambda) w_yy at y-face (i,g)
double l43_row(const VPair& v, int i, int g, double nu, double lambda, double h) {
    const int M = v.M;
    const double ih2 = 1.0 / (h * h);
    int dval = 2 + (i == 0) + (i == M - 1);
    double xx = ((i > 0 ? v.w(i - 1, g) : 0.0) + (i < M - 1 ? v.w(i + 1, g) : 0.0) -
                 dval * v.w(i, g)) *
                ih2;
    double yy = (v.w(i, g - 1) - 2.0 * v.w(i, g) + v.w(i, g + 1)) * ih2;
    // W(i,j) = zero-wall divergence in x of u, then (W(i,g) - W(i,g+1))/h
    auto W = [&](int jj) {
        if (i == 0) return v.u(0, jj) / h;
        if (i == M - 1) return -v.u(M - 2, jj) / h;
        return (v.u(i, jj) - v.u(i - 1, jj)) / h;
    };
    double wdx = (W(g) - W(g + 1)) / h;
    return nu * xx + (2.0 * nu + lambda) * yy - (nu + lambda) * wdx;
}

DenseMat b_tangential(int M, double h) {
    // second difference across cells with no-slip ghosts (-v): 3 on wall rows
    DenseMat B(M, M);
    const double ih2 = 1.0 / (h * h);
    for (int i = 0; i < M; ++i) {
        B(i, i) = (2 + (i == 0) + (i == M - 1)) * ih2;
        if (i > 0) B(i, i - 1) = -ih2;
        if (i < M - 1) B(i, i + 1) = -ih2;
    }
    return B;
}

}  // namespace

std::pair<Field, Field> visc_apply(const Field& v1, const Field& v2, double nu, double lambda,
                                   double h) {
    const int M = v1.ny;
    require_shape(v1, M - 1, M, "visc_apply: v1");
    require_shape(v2, M, M - 1, "visc_apply: v2");
    VPair v{v1.data.data(), v2.data.data(), M};
    Field out1(M - 1, M), out2(M, M - 1);
    for (int j = 0; j < M; ++j)
        for (int f = 0; f < M - 1; ++f) out1(f, j) = l42_row(v, f, j, nu, lambda, h);
    for (int g = 0; g < M - 1; ++g)
        for (int i = 0; i < M; ++i) out2(i, g) = l43_row(v, i, g, nu, lambda, h);
    return {std::move(out1), std::move(out2)};
}

std::pair<Field, Field> visc_apply_matrix(const Field& v1, const Field& v2, double nu,
                                          double lambda, double h) {
    const int M = v1.ny;
    require_shape(v1, M - 1, M, "visc_apply_matrix: v1");
    require_shape(v2, M, M - 1, "visc_apply_matrix: v2");
    FdMatrices fd = build_fd_matrices(M, h);
    DenseMat Dt = transpose(fd.D);
    DenseMat DtD = matmul(Dt, fd.D);
    DenseMat B = b_tangential(M, h);

    // L4_2 = -((2nu+lambda) D^T D v1 + nu v1 B + (nu+lambda) D^T v2 D^T)
    Field a = matmul(DtD, v1);
    Field b = matmul(v1, B);
    Field c = matmul(matmul(Dt, v2), Dt);
    Field out1(M - 1, M);
    for (int k = 0; k < (M - 1) * M; ++k)
        out1.data[k] =
            -((2.0 * nu + lambda) * a.data[k] + nu * b.data[k] + (nu + lambda) * c.data[k]);

    // L4_3 = -(nu B v2 + (2nu+lambda) v2 D^T D + (nu+lambda) D v1 D)
    Field d = matmul(B, v2);
    Field e = matmul(v2, DtD);
    Field f = matmul(matmul(fd.D, v1), fd.D);
    Field out2(M, M - 1);
    for (int k = 0; k < M * (M - 1); ++k)
        out2.data[k] =
            -(nu * d.data[k] + (2.0 * nu + lambda) * e.data[k] + (nu + lambda) * f.data[k]);
    return {std::move(out1), std::move(out2)};
}

ViscSystemOperator::ViscSystemOperator(Field rho_x, Field rho_y, double coeff, double nu,
                                       double lambda, double h)
    : rhox_(std::move(rho_x)), rhoy_(std::move(rho_y)), coeff_(coeff), nu_(nu), lambda_(lambda),
      h_(h), M_(rhox_.ny) {
    require_shape(rhox_, M_ - 1, M_, "ViscSystemOperator: rho_x");
    require_shape(rhoy_, M_, M_ - 1, "ViscSystemOperator: rho_y");
    if (coeff_ < 0.0) throw contract_error("ViscSystemOperator: negative coefficient");
    for (double r : rhox_.data)
        if (!(r > 0.0)) throw positivity_error("ViscSystemOperator: nonpositive rho_x");
    for (double r : rhoy_.data)
        if (!(r > 0.0)) throw positivity_error("ViscSystemOperator: nonpositive rho_y");
    n1_ = (M_ - 1) * M_;
    n2_ = M_ * (M_ - 1);
}

void ViscSystemOperator::apply(std::span<const double> x, std::span<double> y) const {
    if ((int)x.size() != dim() || (int)y.size() != dim())
        throw contract_error("ViscSystemOperator::apply: size mismatch");
    VPair v{x.data(), x.data() + n1_, M_};
    for (int j = 0; j < M_; ++j)
        for (int f = 0; f < M_ - 1; ++f) {
            int k = f + (M_ - 1) * j;
            y[k] = rhox_.data[k] * x[k] - coeff_ * l42_row(v, f, j, nu_, lambda_, h_);
        }
    for (int g = 0; g < M_ - 1; ++g)
        for (int i = 0; i < M_; ++i) {
            int k = i + M_ * g;
            y[n1_ + k] = rhoy_.data[k] * x[n1_ + k] - coeff_ * l43_row(v, i, g, nu_, lambda_, h_);
        }
}

std::vector<double> ViscSystemOperator::diagonal() const {
    const double ih2 = 1.0 / (h_ * h_);
    std::vector<double> d(dim());
    for (int j = 0; j < M_; ++j)
        for (int f = 0; f < M_ - 1; ++f) {
            int dval = 2 + (j == 0) + (j == M_ - 1);
            d[f + (M_ - 1) * j] =
                rhox_.data[f + (M_ - 1) * j] +
                coeff_ * ((2.0 * nu_ + lambda_) * 2.0 + nu_ * dval) * ih2;
        }
    for (int g = 0; g < M_ - 1; ++g)
        for (int i = 0; i < M_; ++i) {
            int dval = 2 + (i == 0) + (i == M_ - 1);
            d[n1_ + i + M_ * g] =
                rhoy_.data[i + M_ * g] +
                coeff_ * (nu_ * dval + (2.0 * nu_ + lambda_) * 2.0) * ih2;
        }
    return d;
}

void ViscSystemOperator::gs_sweep(std::span<double> x, std::span<const double> b,
                                  bool forward) const {
    if ((int)x.size() != dim() || (int)b.size() != dim())
        throw contract_error("ViscSystemOperator::gs_sweep: size mismatch");
    std::vector<double> diag = diagonal();
    VPair v{x.data(), x.data() + n1_, M_};
    auto relax1 = [&](int f, int j) {
        int k = f + (M_ - 1) * j;
        double row = rhox_.data[k] * x[k] - coeff_ * l42_row(v, f, j, nu_, lambda_, h_);
        x[k] += (b[k] - row) / diag[k];
    };
    auto relax2 = [&](int i, int g) {
        int k = i + M_ * g;
        double row = rhoy_.data[k] * x[n1_ + k] - coeff_ * l43_row(v, i, g, nu_, lambda_, h_);
        x[n1_ + k] += (b[n1_ + k] - row) / diag[n1_ + k];
    };
    if (forward) {
        for (int j = 0; j < M_; ++j)
            for (int f = 0; f < M_ - 1; ++f) relax1(f, j);
        for (int g = 0; g < M_ - 1; ++g)
            for (int i = 0; i < M_; ++i) relax2(i, g);
    } else {
        for (int g = M_ - 2; g >= 0; --g)
            for (int i = M_ - 1; i >= 0; --i) relax2(i, g);
        for (int j = M_ - 1; j >= 0; --j)
            for (int f = M_ - 2; f >= 0; --f) relax1(f, j);
    }
}

}  // namespace chns
