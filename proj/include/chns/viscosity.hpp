#pragma once

#include <utility>

#include "chns/fdops.hpp"
#include "chns/grid.hpp"
#include "chns/linsolve.hpp"

namespace chns {

// Discrete viscous force on the staggered velocity pair:
//   block x: (2nu+lambda) v1_xx + nu v1_yy + (nu+lambda) (v2)_xy
//   block y: (nu+lambda) (v1)_xy + nu v2_xx + (2nu+lambda) v2_yy
// Normal components vanish on the walls (faces excluded from the unknowns),
// tangential components satisfy no-slip through ghost reflection (-v), which
// produces the 3-coefficient rows next to the walls.
// v1 is (M-1) x M on interior x-faces, v2 is M x (M-1) on interior y-faces.
std::pair<Field, Field> visc_apply(const Field& v1, const Field& v2, double nu, double lambda,
                                   double h);

// Same operator assembled from the 1-D difference matrices; test cross-check.
std::pair<Field, Field> visc_apply_matrix(const Field& v1, const Field& v2, double nu,
                                          double lambda, double h);

// Stage operator for the velocity pair, acting on x = [vec(v1); vec(v2)]:
//   (v1, v2) -> (rho_x * v1, rho_y * v2) - coeff * L4(v1, v2),
// coeff = dt * alpha_ii >= 0. SPD for rho > 0.
class ViscSystemOperator final : public LinearOperator {
public:
    ViscSystemOperator(Field rho_x, Field rho_y, double coeff, double nu, double lambda, double h);

    int dim() const override { return n1_ + n2_; }
    void apply(std::span<const double> x, std::span<double> y) const override;
    std::vector<double> diagonal() const override;
    bool supports_gs() const override { return true; }
    void gs_sweep(std::span<double> x, std::span<const double> b, bool forward) const override;

    const Field& rho_x() const { return rhox_; }
    const Field& rho_y() const { return rhoy_; }
    double coeff() const { return coeff_; }

private:
    Field rhox_, rhoy_;
    double coeff_, nu_, lambda_, h_;
    int M_, n1_, n2_;
};

}  // namespace chns
