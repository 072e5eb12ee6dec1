#pragma once

#include "chns/grid.hpp"

namespace chns {

// Fifth-order WENO reconstruction at the interface right of the window
// center: samples sit at offsets (-2.5, -1.5, -0.5, +0.5, +1.5)*h relative to
// the target point. Reverse the window for the right-biased value.
double weno5(const double f[5]);

enum class NodeType { Cell, Face };

// Reflection-extended copy of a field with G ghost layers per side. Cell axes
// extend over [-G, M+G); face axes carry wall nodes and extend over [-G, M+G]
// with the interior coordinates 1..M-1 taken from the stored field and wall
// values 0 (antisymmetric only).
ExtField reflect_extend(const Field& f, int M, int G, NodeType tx, NodeType ty, Parity px,
                        Parity py);

// Convective tendency C(U) of the conserved state, one block per equation.
// rho and q blocks are exactly conservative (wall fluxes vanish identically).
struct ConvBlocks {
    Field rho;  // M x M
    Field m1;   // (M-1) x M
    Field m2;   // M x (M-1)
    Field q;    // M x M
};

ConvBlocks conv_apply(const MacGrid& grid, const ModelParams& par, const Fields& U);

// max over the grid of |v| + sqrt(p'(rho)) (staggered densities on faces,
// sound speed alone on primal nodes); time step control.
double max_char_speed(const MacGrid& grid, const ModelParams& par, const Fields& U);

}  // namespace chns
