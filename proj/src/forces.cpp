#include "chns/forces.hpp"

namespace chns {

Field gravity_apply(const Field& rho, double g) {
    Field out = to_staggered(rho, Axis::Y);
    for (double& v : out.data) v *= g;
    return out;
}

namespace {

// Central derivative along x at a primal node (one-sided halves at walls,
// matching the rows of Dc).
inline double dcx(const Field& c, int i, int j, double h) {
    const int M = c.nx;
    const int il = (i == 0) ? 0 : i - 1;
    const int ir = (i == M - 1) ? M - 1 : i + 1;
    return (c(ir, j) - c(il, j)) / (2.0 * h);
}

inline double dcy(const Field& c, int i, int j, double h) {
    const int M = c.ny;
    const int jl = (j == 0) ? 0 : j - 1;
    const int jr = (j == M - 1) ? M - 1 : j + 1;
    return (c(i, jr) - c(i, jl)) / (2.0 * h);
}

// c_x * c_y at the corner (fc*h, gc*h), fc,gc in 1..M-1, from the four
// flanking primal values.
inline double corner_cxcy(const Field& c, int fc, int gc, double h) {
    const double c00 = c(fc - 1, gc - 1), c10 = c(fc, gc - 1);
    const double c01 = c(fc - 1, gc), c11 = c(fc, gc);
    const double cx = (c10 + c11 - c00 - c01) / (2.0 * h);
    const double cy = (c01 + c11 - c00 - c10) / (2.0 * h);
    return cx * cy;
}

}  // namespace

CapillaryBlocks capillary_apply(const Field& c, double eps, double h) {
    const int M = c.nx;
    require_shape(c, M, M, "capillary_apply");
    CapillaryBlocks out;
    out.L2_2 = Field(M - 1, M);
    out.L2_3 = Field(M, M - 1);

    // x-momentum block on x-faces (f = stored index, face coordinate f+1)
    for (int j = 0; j < M; ++j) {
        for (int f = 0; f < M - 1; ++f) {
            const int iL = f, iR = f + 1;
            const double cx2 = dcx(c, iR, j, h) * dcx(c, iR, j, h) - dcx(c, iL, j, h) * dcx(c, iL, j, h);
            const double cy2 = dcy(c, iR, j, h) * dcy(c, iR, j, h) - dcy(c, iL, j, h) * dcy(c, iL, j, h);
            const double yup = (j + 1 <= M - 1) ? corner_cxcy(c, f + 1, j + 1, h) : 0.0;
            const double ydn = (j >= 1) ? corner_cxcy(c, f + 1, j, h) : 0.0;
            out.L2_2(f, j) = eps * (0.5 * cy2 / h - 0.5 * cx2 / h - (yup - ydn) / h);
        }
    }

    // y-momentum block on y-faces
    for (int g = 0; g < M - 1; ++g) {
        for (int i = 0; i < M; ++i) {
            const int jL = g, jR = g + 1;
            const double cx2 = dcx(c, i, jR, h) * dcx(c, i, jR, h) - dcx(c, i, jL, h) * dcx(c, i, jL, h);
            const double cy2 = dcy(c, i, jR, h) * dcy(c, i, jR, h) - dcy(c, i, jL, h) * dcy(c, i, jL, h);
            const double xup = (i + 1 <= M - 1) ? corner_cxcy(c, i + 1, g + 1, h) : 0.0;
            const double xdn = (i >= 1) ? corner_cxcy(c, i, g + 1, h) : 0.0;
            out.L2_3(i, g) = eps * (0.5 * cx2 / h - 0.5 * cy2 / h - (xup - xdn) / h);
        }
    }
    return out;
}

CapillaryBlocks capillary_apply_matrix(const Field& c, double eps, const FdMatrices& fd) {
    const int M = fd.M;
    require_shape(c, M, M, "capillary_apply_matrix");
    const DenseMat Dt = transpose(fd.D);
    const DenseMat Dct = transpose(fd.Dc);
    const DenseMat At = transpose(fd.A);

    const Field cx = matmul(fd.Dc, c);   // c_x on primal
    const Field cy = matmul(c, Dct);     // c_y on primal
    const Field cx2 = hadamard(cx, cx);
    const Field cy2 = hadamard(cy, cy);

    // corner c_x*c_y: (D^T c A^T) and (A c D) are (-c_x) and (-c_y) at corners
    const Field Y = hadamard(matmul(matmul(Dt, c), At), matmul(matmul(fd.A, c), fd.D));

    CapillaryBlocks out;
    // D^T left-multiplication is minus the primal->face forward difference;
    // Y*D^T / D*Y are the zero-wall divergences of the corner field.
    out.L2_2 = Field(M - 1, M);
    {
        const Field t1 = matmul(Dt, cy2);
        const Field t2 = matmul(Dt, cx2);
        const Field t3 = matmul(Y, Dt);
        for (size_t k = 0; k < out.L2_2.size(); ++k)
            out.L2_2.data[k] = eps * (-0.5 * t1.data[k] + 0.5 * t2.data[k] - t3.data[k]);
    }
    out.L2_3 = Field(M, M - 1);
    {
        const Field t1 = matmul(cx2, fd.D);
        const Field t2 = matmul(cy2, fd.D);
        const Field t3 = matmul(fd.D, Y);
        for (size_t k = 0; k < out.L2_3.size(); ++k)
            out.L2_3.data[k] = eps * (-0.5 * t1.data[k] + 0.5 * t2.data[k] - t3.data[k]);
    }
    return out;
}

}  // namespace chns
