#include "chns/convection.hpp"

#include <algorithm>
#include <cmath>

#include "chns/errors.hpp"

namespace chns {

double weno5(const double f[5]) {
    const double f0 = f[0], f1 = f[1], f2 = f[2], f3 = f[3], f4 = f[4];
    const double b0 = (13.0 / 12.0) * (f0 - 2.0 * f1 + f2) * (f0 - 2.0 * f1 + f2) +
                      0.25 * (f0 - 4.0 * f1 + 3.0 * f2) * (f0 - 4.0 * f1 + 3.0 * f2);
    const double b1 = (13.0 / 12.0) * (f1 - 2.0 * f2 + f3) * (f1 - 2.0 * f2 + f3) +
                      0.25 * (f1 - f3) * (f1 - f3);
    const double b2 = (13.0 / 12.0) * (f2 - 2.0 * f3 + f4) * (f2 - 2.0 * f3 + f4) +
                      0.25 * (3.0 * f2 - 4.0 * f3 + f4) * (3.0 * f2 - 4.0 * f3 + f4);
    const double ew = 1e-6;
    const double a0 = 0.1 / ((ew + b0) * (ew + b0));
    const double a1 = 0.6 / ((ew + b1) * (ew + b1));
    const double a2 = 0.3 / ((ew + b2) * (ew + b2));
    const double q0 = (2.0 * f0 - 7.0 * f1 + 11.0 * f2) / 6.0;
    const double q1 = (-f1 + 5.0 * f2 + 2.0 * f3) / 6.0;
    const double q2 = (2.0 * f2 + 5.0 * f3 - f4) / 6.0;
    return (a0 * q0 + a1 * q1 + a2 * q2) / (a0 + a1 + a2);
}

ExtField reflect_extend(const Field& f, int M, int G, NodeType tx, NodeType ty, Parity px,
                        Parity py) {
    const int ilo = -G, jlo = -G;
    const int nx = (tx == NodeType::Cell) ? M + 2 * G : M + 2 * G + 1;
    const int ny = (ty == NodeType::Cell) ? M + 2 * G : M + 2 * G + 1;
    ExtField e(ilo, jlo, nx, ny);

    auto src = [&](int i, int j) -> double {
        double s = 1.0;
        if (tx == NodeType::Cell) {
            i = reflect_cell_index(i, M, px, &s);
        } else {
            i = reflect_face_index(i, M, px, &s);
            if (i == 0 || i == M) {
                if (px != Parity::Antisymmetric)
                    throw contract_error("reflect_extend: symmetric face field at a wall node");
                return 0.0;
            }
            i -= 1;
        }
        if (ty == NodeType::Cell) {
            j = reflect_cell_index(j, M, py, &s);
        } else {
            j = reflect_face_index(j, M, py, &s);
            if (j == 0 || j == M) {
                if (py != Parity::Antisymmetric)
                    throw contract_error("reflect_extend: symmetric face field at a wall node");
                return 0.0;
            }
            j -= 1;
        }
        return s * f(i, j);
    };

    for (int j = jlo; j < jlo + ny; ++j)
        for (int i = ilo; i < ilo + nx; ++i) e(i, j) = src(i, j);
    return e;
}

namespace {

constexpr double kMu[6] = {3.0 / 256.0,   -25.0 / 256.0, 150.0 / 256.0,
                           150.0 / 256.0, -25.0 / 256.0, 3.0 / 256.0};

inline double sound(const ModelParams& par, double rho) {
    return std::sqrt(par.pressure_prime(rho));
}

inline void require_pos(double rho, const char* where) {
    if (!(rho > 0.0)) throw positivity_error(std::string(where) + ": nonpositive density");
}

}  // namespace

ConvBlocks conv_apply(const MacGrid& grid, const ModelParams& par, const Fields& U) {
    const int M = grid.M;
    const double h = grid.h;
    const int G = 8;
    check_admissible(grid, U);

    // conserved blocks on their native grids
    Field q(M, M);
    for (size_t k = 0; k < q.size(); ++k) q.data[k] = U.rho.data[k] * U.c.data[k];
    Field rx = to_staggered(U.rho, Axis::X);
    Field ry = to_staggered(U.rho, Axis::Y);
    Field m1(M - 1, M), m2(M, M - 1);
    for (size_t k = 0; k < m1.size(); ++k) m1.data[k] = rx.data[k] * U.v1.data[k];
    for (size_t k = 0; k < m2.size(); ++k) m2.data[k] = ry.data[k] * U.v2.data[k];

    // reflection-extended source data
    ExtField rhoE = reflect_extend(U.rho, M, G, NodeType::Cell, NodeType::Cell, Parity::Symmetric,
                                   Parity::Symmetric);
    ExtField qE = reflect_extend(q, M, G, NodeType::Cell, NodeType::Cell, Parity::Symmetric,
                                 Parity::Symmetric);
    ExtField m1E = reflect_extend(m1, M, G, NodeType::Face, NodeType::Cell, Parity::Antisymmetric,
                                  Parity::Antisymmetric);
    ExtField m2E = reflect_extend(m2, M, G, NodeType::Cell, NodeType::Face, Parity::Antisymmetric,
                                  Parity::Antisymmetric);

    // sixth-order transfers of the extended data (extended index ranges cover
    // every window touched by the flux loops below)
    const int lo = -(G - 3), hi_f = M + (G - 3);        // face coords lo..hi_f
    ExtField rx6(lo, lo, M + 2 * (G - 3) + 1, M + 2 * (G - 3));  // (f, j)
    for (int j = lo; j < M + G - 3; ++j)
        for (int f = lo; f <= hi_f; ++f) {
            double acc = 0.0;
            for (int s = 0; s < 6; ++s) acc += kMu[s] * rhoE(f - 3 + s, j);
            rx6(f, j) = acc;
        }
    ExtField ry6(lo, lo, M + 2 * (G - 3), M + 2 * (G - 3) + 1);  // (i, g)
    for (int g = lo; g <= hi_f; ++g)
        for (int i = lo; i < M + G - 3; ++i) {
            double acc = 0.0;
            for (int s = 0; s < 6; ++s) acc += kMu[s] * rhoE(i, g - 3 + s);
            ry6(i, g) = acc;
        }

    const int plo = -(G - 3);  // primal transfer range
    ExtField m1pE(plo, -G, M + 2 * (G - 3), M + 2 * G);  // (i, j), primal x
    for (int j = -G; j < M + G; ++j)
        for (int i = plo; i < M + G - 3; ++i) {
            double acc = 0.0;
            for (int s = 0; s < 6; ++s) acc += kMu[s] * m1E(i - 2 + s, j);
            m1pE(i, j) = acc;
        }
    ExtField m2pE(-G, plo, M + 2 * G, M + 2 * (G - 3));  // (i, j), primal y
    for (int j = plo; j < M + G - 3; ++j)
        for (int i = -G; i < M + G; ++i) {
            double acc = 0.0;
            for (int s = 0; s < 6; ++s) acc += kMu[s] * m2E(i, j - 2 + s);
            m2pE(i, j) = acc;
        }

    // m1 at y-face nodes: two-point vertical average to the corners, then a
    // sixth-order face->primal transfer in x
    ExtField m1v(-G, -G + 1, 2 * G + M + 1, M + 2 * G - 1);  // (f, g) corners
    for (int g = -G + 1; g <= M + G - 1; ++g)
        for (int f = -G; f <= M + G; ++f) m1v(f, g) = 0.5 * (m1E(f, g - 1) + m1E(f, g));
    ExtField m1cE(plo, -G + 1, M + 2 * (G - 3), M + 2 * G - 1);  // (i, g)
    for (int g = -G + 1; g <= M + G - 1; ++g)
        for (int i = plo; i < M + G - 3; ++i) {
            double acc = 0.0;
            for (int s = 0; s < 6; ++s) acc += kMu[s] * m1v(i - 2 + s, g);
            m1cE(i, g) = acc;
        }

    // m2 at x-face nodes, mirrored construction
    ExtField m2co(-G + 1, -G, M + 2 * G - 1, 2 * G + M + 1);  // (f, g) corners
    for (int g = -G; g <= M + G; ++g)
        for (int f = -G + 1; f <= M + G - 1; ++f) m2co(f, g) = 0.5 * (m2E(f - 1, g) + m2E(f, g));
    ExtField m2cE(-G + 1, plo, M + 2 * G - 1, M + 2 * (G - 3));  // (f, j)
    for (int j = plo; j < M + G - 3; ++j)
        for (int f = -G + 1; f <= M + G - 1; ++f) {
            double acc = 0.0;
            for (int s = 0; s < 6; ++s) acc += kMu[s] * m2co(f, j - 2 + s);
            m2cE(f, j) = acc;
        }

    // ---- numerical fluxes: two-point central part plus Rusanov dissipation
    // on WENO-reconstructed states, with the local wave speed taken as the
    // max of |v| + sqrt(p'(rho)) over the union of both windows

    // mass and order-parameter fluxes through x-faces (f = 0..M incl. walls)
    Field Frho(M + 1, M), Fq(M + 1, M);
    for (int j = 0; j < M; ++j) {
        for (int f = 0; f <= M; ++f) {
            double lam = 0.0;
            for (int k = f - 3; k <= f + 2; ++k) {
                require_pos(rhoE(k, j), "conv_apply");
                lam = std::max(lam, std::abs(m1pE(k, j) / rhoE(k, j)) + sound(par, rhoE(k, j)));
            }
            double rm[5], rp[5], qm[5], qp[5];
            for (int s = 0; s < 5; ++s) {
                rm[s] = rhoE(f - 3 + s, j);
                rp[s] = rhoE(f + 2 - s, j);
                qm[s] = qE(f - 3 + s, j);
                qp[s] = qE(f + 2 - s, j);
            }
            const double rhom = weno5(rm), rhop = weno5(rp);
            const double mc = 0.5 * (m1pE(f - 1, j) + m1pE(f, j));
            if (rhom > 0.0) lam = std::max(lam, std::abs(mc / rhom) + sound(par, rhom));
            if (rhop > 0.0) lam = std::max(lam, std::abs(mc / rhop) + sound(par, rhop));
            Frho(f, j) = mc - 0.5 * lam * (rhop - rhom);
            const double phl = m1pE(f - 1, j) * qE(f - 1, j) / rhoE(f - 1, j);
            const double phr = m1pE(f, j) * qE(f, j) / rhoE(f, j);
            Fq(f, j) = 0.5 * (phl + phr) - 0.5 * lam * (weno5(qp) - weno5(qm));
        }
    }

    // mass and order-parameter fluxes through y-faces (g = 0..M)
    Field Grho(M, M + 1), Gq(M, M + 1);
    for (int g = 0; g <= M; ++g) {
        for (int i = 0; i < M; ++i) {
            double lam = 0.0;
            for (int k = g - 3; k <= g + 2; ++k) {
                require_pos(rhoE(i, k), "conv_apply");
                lam = std::max(lam, std::abs(m2pE(i, k) / rhoE(i, k)) + sound(par, rhoE(i, k)));
            }
            double rm[5], rp[5], qm[5], qp[5];
            for (int s = 0; s < 5; ++s) {
                rm[s] = rhoE(i, g - 3 + s);
                rp[s] = rhoE(i, g + 2 - s);
                qm[s] = qE(i, g - 3 + s);
                qp[s] = qE(i, g + 2 - s);
            }
            const double rhom = weno5(rm), rhop = weno5(rp);
            const double mc = 0.5 * (m2pE(i, g - 1) + m2pE(i, g));
            if (rhom > 0.0) lam = std::max(lam, std::abs(mc / rhom) + sound(par, rhom));
            if (rhop > 0.0) lam = std::max(lam, std::abs(mc / rhop) + sound(par, rhop));
            Grho(i, g) = mc - 0.5 * lam * (rhop - rhom);
            const double phl = m2pE(i, g - 1) * qE(i, g - 1) / rhoE(i, g - 1);
            const double phr = m2pE(i, g) * qE(i, g) / rhoE(i, g);
            Gq(i, g) = 0.5 * (phl + phr) - 0.5 * lam * (weno5(qp) - weno5(qm));
        }
    }

    // x-momentum: normal flux m1 v1 + p at primal nodes (i = 0..M-1)
    Field Fm1(M, M);
    for (int j = 0; j < M; ++j) {
        for (int i = 0; i < M; ++i) {
            auto phi = [&](int k) {
                require_pos(rx6(k, j), "conv_apply (face density)");
                return m1E(k, j) * m1E(k, j) / rx6(k, j) + par.pressure(rx6(k, j));
            };
            double lam = 0.0;
            for (int k = i - 2; k <= i + 3; ++k) {
                require_pos(rx6(k, j), "conv_apply (face density)");
                lam = std::max(lam, std::abs(m1E(k, j) / rx6(k, j)) + sound(par, rx6(k, j)));
            }
            double wm[5], wp[5];
            for (int s = 0; s < 5; ++s) {
                wm[s] = m1E(i - 2 + s, j);
                wp[s] = m1E(i + 3 - s, j);
            }
            Fm1(i, j) = 0.5 * (phi(i) + phi(i + 1)) - 0.5 * lam * (weno5(wp) - weno5(wm));
        }
    }

    // x-momentum: tangential flux m1 v2 at the corners (f = 1..M-1, g = 0..M)
    Field Gm1(M - 1, M + 1);
    for (int g = 0; g <= M; ++g) {
        for (int f = 1; f <= M - 1; ++f) {
            auto phi = [&](int k) {
                require_pos(rx6(f, k), "conv_apply (face density)");
                return m2cE(f, k) * m1E(f, k) / rx6(f, k);
            };
            double lam = 0.0;
            for (int k = g - 3; k <= g + 2; ++k) {
                require_pos(rx6(f, k), "conv_apply (face density)");
                lam = std::max(lam, std::abs(m2cE(f, k) / rx6(f, k)) + sound(par, rx6(f, k)));
            }
            double wm[5], wp[5];
            for (int s = 0; s < 5; ++s) {
                wm[s] = m1E(f, g - 3 + s);
                wp[s] = m1E(f, g + 2 - s);
            }
            Gm1(f - 1, g) = 0.5 * (phi(g - 1) + phi(g)) - 0.5 * lam * (weno5(wp) - weno5(wm));
        }
    }

    // y-momentum: tangential flux m2 v1 at the corners (f = 0..M, g = 1..M-1)
    Field Fm2(M + 1, M - 1);
    for (int g = 1; g <= M - 1; ++g) {
        for (int f = 0; f <= M; ++f) {
            auto phi = [&](int k) {
                require_pos(ry6(k, g), "conv_apply (face density)");
                return m1cE(k, g) * m2E(k, g) / ry6(k, g);
            };
            double lam = 0.0;
            for (int k = f - 3; k <= f + 2; ++k) {
                require_pos(ry6(k, g), "conv_apply (face density)");
                lam = std::max(lam, std::abs(m1cE(k, g) / ry6(k, g)) + sound(par, ry6(k, g)));
            }
            double wm[5], wp[5];
            for (int s = 0; s < 5; ++s) {
                wm[s] = m2E(f - 3 + s, g);
                wp[s] = m2E(f + 2 - s, g);
            }
            Fm2(f, g - 1) = 0.5 * (phi(f - 1) + phi(f)) - 0.5 * lam * (weno5(wp) - weno5(wm));
        }
    }

    // y-momentum: normal flux m2 v2 + p at primal nodes (j = 0..M-1)
    Field Gm2(M, M);
    for (int j = 0; j < M; ++j) {
        for (int i = 0; i < M; ++i) {
            auto phi = [&](int k) {
                require_pos(ry6(i, k), "conv_apply (face density)");
                return m2E(i, k) * m2E(i, k) / ry6(i, k) + par.pressure(ry6(i, k));
            };
            double lam = 0.0;
            for (int k = j - 2; k <= j + 3; ++k) {
                require_pos(ry6(i, k), "conv_apply (face density)");
                lam = std::max(lam, std::abs(m2E(i, k) / ry6(i, k)) + sound(par, ry6(i, k)));
            }
            double wm[5], wp[5];
            for (int s = 0; s < 5; ++s) {
                wm[s] = m2E(i, j - 2 + s);
                wp[s] = m2E(i, j + 3 - s);
            }
            Gm2(i, j) = 0.5 * (phi(j) + phi(j + 1)) - 0.5 * lam * (weno5(wp) - weno5(wm));
        }
    }

    // flux divergences
    ConvBlocks C{Field(M, M), Field(M - 1, M), Field(M, M - 1), Field(M, M)};
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) {
            C.rho(i, j) = -(Frho(i + 1, j) - Frho(i, j)) / h - (Grho(i, j + 1) - Grho(i, j)) / h;
            C.q(i, j) = -(Fq(i + 1, j) - Fq(i, j)) / h - (Gq(i, j + 1) - Gq(i, j)) / h;
        }
    for (int j = 0; j < M; ++j)
        for (int fs = 0; fs < M - 1; ++fs) {
            const int f = fs + 1;
            C.m1(fs, j) =
                -(Fm1(f, j) - Fm1(f - 1, j)) / h - (Gm1(fs, j + 1) - Gm1(fs, j)) / h;
        }
    for (int gs = 0; gs < M - 1; ++gs)
        for (int i = 0; i < M; ++i)
            C.m2(i, gs) =
                -(Fm2(i + 1, gs) - Fm2(i, gs)) / h - (Gm2(i, gs + 1) - Gm2(i, gs)) / h;
    return C;
}

double max_char_speed(const MacGrid& grid, const ModelParams& par, const Fields& U) {
    check_admissible(grid, U);
    const int M = grid.M;
    Field rx = to_staggered(U.rho, Axis::X);
    Field ry = to_staggered(U.rho, Axis::Y);
    double cs = 0.0;
    for (int j = 0; j < M; ++j)
        for (int f = 0; f < M - 1; ++f)
            cs = std::max(cs, std::abs(U.v1(f, j)) + sound(par, rx(f, j)));
    for (int g = 0; g < M - 1; ++g)
        for (int i = 0; i < M; ++i)
            cs = std::max(cs, std::abs(U.v2(i, g)) + sound(par, ry(i, g)));
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) cs = std::max(cs, sound(par, U.rho(i, j)));
    return cs;
}

}  // namespace chns
