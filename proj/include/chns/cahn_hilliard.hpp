#pragma once

#include "chns/fdops.hpp"
#include "chns/grid.hpp"
#include "chns/linsolve.hpp"

namespace chns {

// Eyre convex splitting of psi(c) = (c^2-1)^2/4:
//   psi' = psi1' + psi2',  psi1'(c) = 2c (implicit), psi2'(c) = c^3-3c (explicit).
inline double psi1_prime(double c) { return 2.0 * c; }
inline double psi2_prime(double c) { return c * c * c - 3.0 * c; }
inline double psi2_second(double c) { return 3.0 * c * c - 3.0; }

// Discretization of (psi2''(c) c_x)_x + (psi2''(c) c_y)_y with arithmetic-mean
// coefficients and Neumann walls: the M2(c~)c~ term.
Field m2_apply(const Field& c_tilde, double h);

// L3 block 4: 2*Lap_h(c) + M2(c~)c~ - eps*Lap_h( Lap_h(c)/rho ).
Field ch_rhs(const Field& rho, const Field& c, const Field& c_tilde, double eps, double h);

// Chemical potential on the primal grid, diagnostics only.
Field chemical_potential(const Field& rho, const Field& c, double eps, double h);

// Stage operator for the order parameter:
//   C -> D(rho) C - 2*coeff*Lap_h C + coeff*eps*Lap_h( Lap_h C / rho ),
// coeff = dt * alpha_ii >= 0. SPD on vec'd fields for rho > 0.
class ChSystemOperator final : public LinearOperator {
public:
    ChSystemOperator(Field rho, double coeff, double eps, double h);

    int dim() const override { return rho_.nx * rho_.ny; }
    void apply(std::span<const double> x, std::span<double> y) const override;
    std::vector<double> diagonal() const override;
    bool supports_gs() const override { return true; }
    void gs_sweep(std::span<double> x, std::span<const double> b, bool forward) const override;

    const Field& rho() const { return rho_; }
    double coeff() const { return coeff_; }
    double eps() const { return eps_; }
    double h() const { return h_; }

private:
    double row_value(const double* x, int i, int j) const;

    Field rho_, inv_rho_;
    double coeff_, eps_, h_;
    int M_;
};

}  // namespace chns
