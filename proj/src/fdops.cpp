#include "chns/fdops.hpp"

namespace chns {

DenseMat transpose(const DenseMat& m) {
    DenseMat t(m.cols, m.rows);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i) t(j, i) = m(i, j);
    return t;
}

DenseMat matmul(const DenseMat& a, const DenseMat& b) {
    if (a.cols != b.rows) throw contract_error("matmul: inner dimension mismatch");
    DenseMat c(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j)
        for (int k = 0; k < a.cols; ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            for (int i = 0; i < a.rows; ++i) c(i, j) += a(i, k) * bkj;
        }
    return c;
}

Field matmul(const DenseMat& a, const Field& b) {
    if (a.cols != b.nx) throw contract_error("matmul: inner dimension mismatch");
    Field c(a.rows, b.ny);
    for (int j = 0; j < b.ny; ++j)
        for (int k = 0; k < a.cols; ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            for (int i = 0; i < a.rows; ++i) c(i, j) += a(i, k) * bkj;
        }
    return c;
}

Field matmul(const Field& a, const DenseMat& b) {
    if (a.ny != b.rows) throw contract_error("matmul: inner dimension mismatch");
    Field c(a.nx, b.cols);
    for (int j = 0; j < b.cols; ++j)
        for (int k = 0; k < b.rows; ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            for (int i = 0; i < a.nx; ++i) c(i, j) += a(i, k) * bkj;
        }
    return c;
}

Field hadamard(const Field& a, const Field& b) {
    require_same_shape(a, b, "hadamard");
    Field c(a.nx, a.ny);
    for (size_t k = 0; k < c.size(); ++k) c.data[k] = a.data[k] * b.data[k];
    return c;
}

FdMatrices build_fd_matrices(int M, double h) {
    if (M < 4) throw config_error("build_fd_matrices: M must be >= 4");
    FdMatrices fd;
    fd.M = M;
    fd.h = h;

    fd.Dc = DenseMat(M, M);
    const double c2 = 1.0 / (2.0 * h);
    fd.Dc(0, 0) = -c2;
    fd.Dc(0, 1) = c2;
    for (int i = 1; i < M - 1; ++i) {
        fd.Dc(i, i - 1) = -c2;
        fd.Dc(i, i + 1) = c2;
    }
    fd.Dc(M - 1, M - 2) = -c2;
    fd.Dc(M - 1, M - 1) = c2;

    fd.D = DenseMat(M, M - 1);
    fd.Dstar = DenseMat(M, M - 1);
    const double c1 = 1.0 / h;
    for (int j = 0; j < M - 1; ++j) {
        fd.D(j, j) = c1;
        fd.D(j + 1, j) = -c1;
        fd.Dstar(j, j) = c1;
        fd.Dstar(j + 1, j) = -c1;
    }
    fd.Dstar(0, 0) = 2.0 * c1;
    fd.Dstar(M - 1, M - 2) = -2.0 * c1;

    fd.L = DenseMat(M, M);
    const double ch2 = 1.0 / (h * h);
    fd.L(0, 0) = -ch2;
    fd.L(0, 1) = ch2;
    for (int i = 1; i < M - 1; ++i) {
        fd.L(i, i - 1) = ch2;
        fd.L(i, i) = -2.0 * ch2;
        fd.L(i, i + 1) = ch2;
    }
    fd.L(M - 1, M - 2) = ch2;
    fd.L(M - 1, M - 1) = -ch2;

    fd.A = DenseMat(M - 1, M);
    for (int i = 0; i < M - 1; ++i) {
        fd.A(i, i) = 0.5;
        fd.A(i, i + 1) = 0.5;
    }
    return fd;
}

Field laplacian2d(const Field& f, double h) {
    const int M = f.nx;
    require_shape(f, M, M, "laplacian2d");
    Field out(M, M);
    const double ch2 = 1.0 / (h * h);
    for (int j = 0; j < M; ++j) {
        for (int i = 0; i < M; ++i) {
            double acc = 0.0;
            // x part (Neumann rows collapse to a single off-diagonal entry)
            if (i == 0) acc += f(1, j) - f(0, j);
            else if (i == M - 1) acc += f(M - 2, j) - f(M - 1, j);
            else acc += f(i - 1, j) - 2.0 * f(i, j) + f(i + 1, j);
            // y part
            if (j == 0) acc += f(i, 1) - f(i, 0);
            else if (j == M - 1) acc += f(i, M - 2) - f(i, M - 1);
            else acc += f(i, j - 1) - 2.0 * f(i, j) + f(i, j + 1);
            out(i, j) = acc * ch2;
        }
    }
    return out;
}

Field diag_apply(const Field& v, const Field& w) { return hadamard(v, w); }

}  // namespace chns
