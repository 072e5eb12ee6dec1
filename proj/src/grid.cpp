#include "chns/grid.hpp"

#include <cmath>

namespace chns {

MacGrid make_grid(int M) {
    if (M < 4) throw config_error("make_grid: M must be >= 4, got " + std::to_string(M));
    MacGrid g;
    g.M = M;
    g.h = 1.0 / M;
    return g;
}

double ModelParams::pressure(double rho) const { return Cp * std::pow(rho, gamma); }
double ModelParams::pressure_prime(double rho) const { return Cp * gamma * std::pow(rho, gamma - 1.0); }

void ModelParams::validate() const {
    if (!(gamma > 1.0)) throw config_error("ModelParams: gamma must be > 1");
    if (!(Cp > 0.0)) throw config_error("ModelParams: Cp must be > 0");
    if (!(eps > 0.0)) throw config_error("ModelParams: eps must be > 0");
    if (!(nu > 0.0)) throw config_error("ModelParams: nu must be > 0");
    if (!(lambda >= 0.0)) throw config_error("ModelParams: lambda must be >= 0");
}

Fields make_fields(const MacGrid& grid) {
    Fields U;
    U.rho = Field(grid.M, grid.M);
    U.v1 = Field(grid.M - 1, grid.M);
    U.v2 = Field(grid.M, grid.M - 1);
    U.c = Field(grid.M, grid.M);
    return U;
}

void check_admissible(const MacGrid& grid, const Fields& U) {
    require_shape(U.rho, grid.M, grid.M, "Fields.rho");
    require_shape(U.v1, grid.M - 1, grid.M, "Fields.v1");
    require_shape(U.v2, grid.M, grid.M - 1, "Fields.v2");
    require_shape(U.c, grid.M, grid.M, "Fields.c");
    for (double r : U.rho.data)
        if (!(r > 0.0)) throw positivity_error("density is not positive everywhere");
    if (!field_all_finite(U.rho) || !field_all_finite(U.v1) || !field_all_finite(U.v2) || !field_all_finite(U.c))
        throw numeric_error("non-finite value in state");
}

Field to_staggered(const Field& rho, Axis axis) {
    const int M = rho.nx;
    require_shape(rho, M, M, "to_staggered");
    if (axis == Axis::X) {
        Field out(M - 1, M);
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M - 1; ++i) out(i, j) = 0.5 * (rho(i, j) + rho(i + 1, j));
        return out;
    }
    Field out(M, M - 1);
    for (int j = 0; j < M - 1; ++j)
        for (int i = 0; i < M; ++i) out(i, j) = 0.5 * (rho(i, j) + rho(i, j + 1));
    return out;
}

namespace {

constexpr double kMu[6] = {3.0 / 256.0, -25.0 / 256.0, 150.0 / 256.0, 150.0 / 256.0, -25.0 / 256.0, 3.0 / 256.0};

// Primal-line value with reflection ghosts (cell-type walls).
inline double cell_value(const std::vector<double>& line, int i, int n, Parity parity) {
    double sign = 1.0;
    i = reflect_cell_index(i, n, parity, &sign);
    return sign * line[i];
}

// Face-line value with reflection ghosts (face-type walls). `line` stores the
// interior faces 1..n-1 at offsets 0..n-2; wall faces are 0 for antisymmetric
// fields. Symmetric face fields never cross a wall in this code path.
inline double face_value(const std::vector<double>& line, int f, int n, Parity parity) {
    double sign = 1.0;
    f = reflect_face_index(f, n, parity, &sign);
    if (f == 0 || f == n) {
        if (parity == Parity::Antisymmetric) return 0.0;
        throw contract_error("transfer6: symmetric face field crosses a wall node");
    }
    return sign * line[f - 1];
}

}  // namespace

Field transfer6(const Field& f, Axis axis, TransferDir dir, Parity parity, int M) {
    if (M < 4) throw config_error("transfer6: M must be >= 4");
    const bool p2d = (dir == TransferDir::PrimalToDual);
    if (p2d) require_shape(f, M, M, "transfer6 primal source");
    else if (axis == Axis::X) require_shape(f, M - 1, M, "transfer6 x-face source");
    else require_shape(f, M, M - 1, "transfer6 y-face source");

    const int out_nx = p2d ? (axis == Axis::X ? M - 1 : M) : M;
    const int out_ny = p2d ? (axis == Axis::X ? M : M - 1) : M;
    Field out(out_nx, out_ny);

    const int n_lines = (axis == Axis::X) ? (p2d ? f.ny : f.ny) : (p2d ? f.nx : f.nx);
    const int line_len = (axis == Axis::X) ? f.nx : f.ny;
    std::vector<double> line(line_len);

    for (int l = 0; l < n_lines; ++l) {
        for (int k = 0; k < line_len; ++k) line[k] = (axis == Axis::X) ? f(k, l) : f(l, k);
        const int n_out = (axis == Axis::X) ? out_nx : out_ny;
        for (int t = 0; t < n_out; ++t) {
            double acc = 0.0;
            if (p2d) {
                // target face t+1 (walls excluded); sources primal t-2 .. t+3
                for (int s = 0; s < 6; ++s) acc += kMu[s] * cell_value(line, t - 2 + s, M, parity);
            } else {
                // target primal t; sources faces t-2 .. t+3
                for (int s = 0; s < 6; ++s) acc += kMu[s] * face_value(line, t - 2 + s, M, parity);
            }
            if (axis == Axis::X) out(t, l) = acc;
            else out(l, t) = acc;
        }
    }
    return out;
}

std::vector<double> vec(const Field& f) { return f.data; }

Field unvec(const std::vector<double>& v, int nx, int ny) {
    if (static_cast<int>(v.size()) != nx * ny) throw contract_error("unvec: length mismatch");
    Field f(nx, ny);
    f.data = v;
    return f;
}

std::vector<double> vec_state(const MacGrid& grid, const Fields& U) {
    const Field rx = to_staggered(U.rho, Axis::X);
    const Field ry = to_staggered(U.rho, Axis::Y);
    std::vector<double> out;
    out.reserve(grid.n_state());
    for (double v : U.rho.data) out.push_back(v);
    for (size_t k = 0; k < U.v1.size(); ++k) out.push_back(rx.data[k] * U.v1.data[k]);
    for (size_t k = 0; k < U.v2.size(); ++k) out.push_back(ry.data[k] * U.v2.data[k]);
    for (size_t k = 0; k < U.c.size(); ++k) out.push_back(U.rho.data[k] * U.c.data[k]);
    return out;
}

Fields unvec_state(const MacGrid& grid, const std::vector<double>& v) {
    if (static_cast<int>(v.size()) != grid.n_state()) throw contract_error("unvec_state: length mismatch");
    Fields U = make_fields(grid);
    size_t p = 0;
    for (size_t k = 0; k < U.rho.size(); ++k) U.rho.data[k] = v[p++];
    const Field rx = to_staggered(U.rho, Axis::X);
    const Field ry = to_staggered(U.rho, Axis::Y);
    for (size_t k = 0; k < U.v1.size(); ++k, ++p) U.v1.data[k] = v[p] / rx.data[k];
    for (size_t k = 0; k < U.v2.size(); ++k, ++p) U.v2.data[k] = v[p] / ry.data[k];
    for (size_t k = 0; k < U.c.size(); ++k, ++p) U.c.data[k] = v[p] / U.rho.data[k];
    return U;
}

}  // namespace chns
