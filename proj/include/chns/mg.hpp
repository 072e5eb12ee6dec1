#pragma once

#include <memory>
#include <vector>

#include "chns/cahn_hilliard.hpp"
#include "chns/linsolve.hpp"
#include "chns/viscosity.hpp"

namespace chns {

// Geometric hierarchy for one stage solve; owns the rediscretized operators
// and transfers that the V-cycle references. `pc` is null when the grid is
// not coarsenable (M must halve down to 4), in which case the caller should
// run unpreconditioned CG.
struct MgHierarchy {
    std::vector<std::unique_ptr<LinearOperator>> ops;
    std::vector<std::unique_ptr<LevelTransfer>> transfers;
    std::unique_ptr<MgPreconditioner> pc;
};

bool mg_coarsenable(int M);

// order-parameter stage system on density rho (primal field, M x M)
MgHierarchy build_ch_hierarchy(const Field& rho, double coeff, double eps, double h);

// velocity stage system; rho is the primal density, staggered averages are
// formed per level
MgHierarchy build_visc_hierarchy(const Field& rho, double coeff, double nu, double lambda,
                                 double h);

// cell-centered 4-point average to the next coarser level
Field restrict_cell(const Field& fine);

}  // namespace chns
