#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "chns/errors.hpp"

namespace chns {

// Dense 2D array, column-major: entry (i,j) sits at data[i + nx*j], so the
// flat data already follows the vec() convention (first index fastest).
struct Field {
    int nx = 0, ny = 0;
    std::vector<double> data;

    Field() = default;
    Field(int nx_, int ny_, double fill = 0.0) : nx(nx_), ny(ny_), data(static_cast<size_t>(nx_) * ny_, fill) {}

    double& operator()(int i, int j) { return data[static_cast<size_t>(i) + static_cast<size_t>(nx) * j]; }
    double operator()(int i, int j) const { return data[static_cast<size_t>(i) + static_cast<size_t>(nx) * j]; }

    size_t size() const { return data.size(); }
    bool same_shape(const Field& o) const { return nx == o.nx && ny == o.ny; }
};

inline void require_shape(const Field& f, int nx, int ny, const char* what) {
    if (f.nx != nx || f.ny != ny)
        throw contract_error(std::string(what) + ": expected " + std::to_string(nx) + "x" + std::to_string(ny) +
                             ", got " + std::to_string(f.nx) + "x" + std::to_string(f.ny));
}

inline void require_same_shape(const Field& a, const Field& b, const char* what) {
    if (!a.same_shape(b)) throw contract_error(std::string(what) + ": shape mismatch");
}

// y += a*x
inline void axpy(double a, const Field& x, Field& y) {
    require_same_shape(x, y, "axpy");
    for (size_t k = 0; k < y.size(); ++k) y.data[k] += a * x.data[k];
}

inline double field_sum(const Field& f) {
    double s = 0.0;
    for (double v : f.data) s += v;
    return s;
}

inline double field_max_abs(const Field& f) {
    double s = 0.0;
    for (double v : f.data) s = std::max(s, std::abs(v));
    return s;
}

inline bool field_all_finite(const Field& f) {
    for (double v : f.data)
        if (!std::isfinite(v)) return false;
    return true;
}

// 2D array with ghost margins; valid indices are [ilo, ilo+nx) x [jlo, jlo+ny).
struct ExtField {
    int ilo = 0, jlo = 0;
    int nx = 0, ny = 0;
    std::vector<double> data;

    ExtField() = default;
    ExtField(int ilo_, int jlo_, int nx_, int ny_)
        : ilo(ilo_), jlo(jlo_), nx(nx_), ny(ny_), data(static_cast<size_t>(nx_) * ny_, 0.0) {}

    double& operator()(int i, int j) { return data[static_cast<size_t>(i - ilo) + static_cast<size_t>(nx) * (j - jlo)]; }
    double operator()(int i, int j) const {
        return data[static_cast<size_t>(i - ilo) + static_cast<size_t>(nx) * (j - jlo)];
    }
};

enum class Parity { Symmetric, Antisymmetric };

// Wall-reflection index maps. Cell-type grids have no node on the wall
// (primal nodes, or face fields along their tangential axis); face-type grids
// have a node sitting exactly on the wall (face fields along their normal
// axis), whose value is pinned to 0 for antisymmetric variables.
//
// Returns the in-range source index and multiplies *sign by -1 per reflection
// when the parity is antisymmetric. Folding repeats so deep ghosts work on
// small grids.
inline int reflect_cell_index(int i, int n, Parity parity, double* sign) {
    while (i < 0 || i >= n) {
        if (i < 0) i = -1 - i;
        else i = 2 * n - 1 - i;
        if (parity == Parity::Antisymmetric) *sign = -*sign;
    }
    return i;
}

// Face coordinates live on 0..n with walls at 0 and n. Returns -1 when the
// folded index lands on a wall node (value 0 for antisymmetric fields; for
// symmetric fields wall nodes are ordinary and must be stored by the caller).
inline int reflect_face_index(int f, int n, Parity parity, double* sign) {
    while (f < 0 || f > n) {
        if (f < 0) f = -f;
        else f = 2 * n - f;
        if (parity == Parity::Antisymmetric) *sign = -*sign;
    }
    return f;
}

}  // namespace chns
