#pragma once

#include "chns/field.hpp"

namespace chns {

// Minimal dense matrix (column-major) for the small 1D difference matrices
// and the matrix-form evaluation paths. Runtime hot paths are stencil-based;
// these exist for construction, cross-validation and tests.
struct DenseMat {
    int rows = 0, cols = 0;
    std::vector<double> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

    double& operator()(int i, int j) { return a[static_cast<size_t>(i) + static_cast<size_t>(rows) * j]; }
    double operator()(int i, int j) const { return a[static_cast<size_t>(i) + static_cast<size_t>(rows) * j]; }
};

DenseMat transpose(const DenseMat& m);
DenseMat matmul(const DenseMat& a, const DenseMat& b);
Field matmul(const DenseMat& a, const Field& b);       // a * b
Field matmul(const Field& a, const DenseMat& b);       // a * b
Field hadamard(const Field& a, const Field& b);        // elementwise

// The five finite-difference matrices of the scheme:
//   Dc    M x M       central difference on the primal grid, 1/(2h)
//   D     M x (M-1)   dual->primal derivative (zero wall values), 1/h
//   Dstar M x (M-1)   like D but with doubled end rows, 1/h
//   L     M x M       Neumann Laplacian, 1/h^2
//   A     (M-1) x M   two-point average primal->face, 1/2
struct FdMatrices {
    int M = 0;
    double h = 0.0;
    DenseMat Dc, D, Dstar, L, A;
};

FdMatrices build_fd_matrices(int M, double h);

// 2D Neumann Laplacian on a primal field: L f + f L^T, evaluated by stencil.
Field laplacian2d(const Field& f, double h);

// Elementwise product (the diagonal-operator convention D(v) w).
Field diag_apply(const Field& v, const Field& w);

}  // namespace chns
