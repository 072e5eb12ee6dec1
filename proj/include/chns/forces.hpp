#pragma once

#include "chns/fdops.hpp"
#include "chns/grid.hpp"

namespace chns {

struct CapillaryBlocks {
    Field L2_2;  // x-face field, capillary tendency in the x-momentum
    Field L2_3;  // y-face field
};

// rho averaged onto y-faces times g (the only nonzero block of L1).
Field gravity_apply(const Field& rho, double g);

// Korteweg terms from the order parameter, boundary-aware stencils:
//   L2_2 = eps*( (c_y^2)_x/2 - (c_x^2)_x/2 - (c_x c_y)_y )
//   L2_3 = eps*( (c_x^2)_y/2 - (c_y^2)_y/2 - (c_x c_y)_x )
// Runtime default path.
CapillaryBlocks capillary_apply(const Field& c, double eps, double h);

// Same operator assembled from the 1D difference matrices; cross-validation.
CapillaryBlocks capillary_apply_matrix(const Field& c, double eps, const FdMatrices& fd);

}  // namespace chns
