#pragma once

#include <array>
#include <vector>

#include "chns/field.hpp"

namespace chns {

// MAC staggered grid on (0,1)^2 with M cells per direction.
//   primal nodes  ((i+1/2)h, (j+1/2)h)      i,j = 0..M-1       (rho, c)
//   x-face nodes  ((i+1)h,  (j+1/2)h)       i = 0..M-2, j = 0..M-1  (v1)
//   y-face nodes  ((i+1/2)h, (j+1)h)        i = 0..M-1, j = 0..M-2  (v2)
// Only interior faces are stored; wall faces carry v = 0.
struct MacGrid {
    int M = 0;
    double h = 0.0;

    double xp(int i) const { return (i + 0.5) * h; }  // primal x
    double yp(int j) const { return (j + 0.5) * h; }  // primal y
    double xf(int i) const { return (i + 1.0) * h; }  // x-face x (stored index)
    double yg(int j) const { return (j + 1.0) * h; }  // y-face y (stored index)

    int n_primal() const { return M * M; }
    int n_face() const { return M * (M - 1); }
    // length of the full vec'd state [rho; m1; m2; q]
    int n_state() const { return 2 * M * M + 2 * M * (M - 1); }
};

MacGrid make_grid(int M);

struct ModelParams {
    double gamma = 5.0 / 3.0;  // adiabatic exponent, > 1
    double Cp = 1.0;           // pressure coefficient, > 0
    double eps = 1e-4;         // capillary/interface parameter, > 0
    double nu = 1.0;           // shear viscosity, > 0
    double lambda = 0.1;       // bulk viscosity, >= 0
    double g = -10.0;          // gravity, acts in y

    double pressure(double rho) const;         // Cp rho^gamma
    double pressure_prime(double rho) const;   // Cp gamma rho^(gamma-1)
    void validate() const;
};

// Discrete state. Density and order parameter on the primal grid, velocity
// components on their face grids. Momenta are derived on demand.
struct Fields {
    Field rho;  // M x M
    Field v1;   // (M-1) x M
    Field v2;   // M x (M-1)
    Field c;    // M x M
};

Fields make_fields(const MacGrid& grid);
void check_admissible(const MacGrid& grid, const Fields& U);

enum class Axis { X, Y };
enum class TransferDir { PrimalToDual, DualToPrimal };

// Two-point average of a primal field onto the face grid of the given axis.
Field to_staggered(const Field& rho, Axis axis);

// Sixth-order transfer between primal and face grids along `axis`, with
// ghost values from wall reflection of the given parity. The weight stencil
// is (3, -25, 150, 150, -25, 3)/256 centered on the target.
Field transfer6(const Field& f, Axis axis, TransferDir dir, Parity parity, int M);

// Column-major flattening (first index fastest) and its inverse.
std::vector<double> vec(const Field& f);
Field unvec(const std::vector<double>& v, int nx, int ny);

// Full state vector [rho; rho_x*v1; rho_y*v2; rho*c], length n_state().
std::vector<double> vec_state(const MacGrid& grid, const Fields& U);
Fields unvec_state(const MacGrid& grid, const std::vector<double>& v);

}  // namespace chns
