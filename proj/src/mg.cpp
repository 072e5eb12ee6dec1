#include "chns/mg.hpp"

#include <algorithm>

#include "chns/grid.hpp"

namespace chns {

bool mg_coarsenable(int M) { return M >= 8 && M % 2 == 0; }

Field restrict_cell(const Field& fine) {
    const int Mc = fine.nx / 2;
    Field c(Mc, Mc);
    for (int j = 0; j < Mc; ++j)
        for (int i = 0; i < Mc; ++i)
            c(i, j) = 0.25 * (fine(2 * i, 2 * j) + fine(2 * i + 1, 2 * j) +
                              fine(2 * i, 2 * j + 1) + fine(2 * i + 1, 2 * j + 1));
    return c;
}

namespace {

// cell-centered bilinear prolongation (clamped at the walls), restriction is
// its transpose over 4
class CellTransfer final : public LevelTransfer {
public:
    explicit CellTransfer(int Mf) : Mf_(Mf), Mc_(Mf / 2) {}
    int fine_dim() const override { return Mf_ * Mf_; }
    int coarse_dim() const override { return Mc_ * Mc_; }

    void prolong_add(std::span<const double> c, std::span<double> f) const override {
        for (int j = 0; j < Mf_; ++j)
            for (int i = 0; i < Mf_; ++i) {
                int ic, icn, jc, jcn;
                double wx, wy;
                axis_weights(i, ic, icn, wx);
                axis_weights(j, jc, jcn, wy);
                double v = wx * wy * c[ic + Mc_ * jc] + (1 - wx) * wy * c[icn + Mc_ * jc] +
                           wx * (1 - wy) * c[ic + Mc_ * jcn] +
                           (1 - wx) * (1 - wy) * c[icn + Mc_ * jcn];
                f[i + Mf_ * j] += v;
            }
    }

    void restrict_vec(std::span<const double> f, std::span<double> c) const override {
        std::fill(c.begin(), c.end(), 0.0);
        for (int j = 0; j < Mf_; ++j)
            for (int i = 0; i < Mf_; ++i) {
                int ic, icn, jc, jcn;
                double wx, wy;
                axis_weights(i, ic, icn, wx);
                axis_weights(j, jc, jcn, wy);
                const double v = 0.25 * f[i + Mf_ * j];
                c[ic + Mc_ * jc] += wx * wy * v;
                c[icn + Mc_ * jc] += (1 - wx) * wy * v;
                c[ic + Mc_ * jcn] += wx * (1 - wy) * v;
                c[icn + Mc_ * jcn] += (1 - wx) * (1 - wy) * v;
            }
    }

private:
    // fine index -> (parent, neighbor, parent weight); constant beyond walls
    void axis_weights(int i, int& ic, int& icn, double& w) const {
        ic = i / 2;
        icn = (i % 2 == 0) ? ic - 1 : ic + 1;
        w = 0.75;
        if (icn < 0 || icn >= Mc_) {
            icn = ic;
            w = 1.0;
        }
    }

    int Mf_, Mc_;
};

// stacked (v1, v2) transfer: linear interpolation across the face normal,
// constant along the face; restriction is the transpose over 4
class FaceTransfer final : public LevelTransfer {
public:
    explicit FaceTransfer(int Mf) : Mf_(Mf), Mc_(Mf / 2) {}
    int fine_dim() const override { return 2 * (Mf_ - 1) * Mf_; }
    int coarse_dim() const override { return 2 * (Mc_ - 1) * Mc_; }

    void prolong_add(std::span<const double> c, std::span<double> f) const override {
        const int n1f = (Mf_ - 1) * Mf_, n1c = (Mc_ - 1) * Mc_;
        // x-faces: fine face coord fc+1 stored at index fc
        auto cx = [&](int fcoord, int jc) -> double {
            if (fcoord <= 0 || fcoord >= Mc_) return 0.0;
            return c[(fcoord - 1) + (Mc_ - 1) * jc];
        };
        for (int j = 0; j < Mf_; ++j)
            for (int fs = 0; fs < Mf_ - 1; ++fs) {
                const int fcoord = fs + 1, jc = j / 2;
                double v = (fcoord % 2 == 0)
                               ? cx(fcoord / 2, jc)
                               : 0.5 * (cx(fcoord / 2, jc) + cx(fcoord / 2 + 1, jc));
                f[fs + (Mf_ - 1) * j] += v;
            }
        auto cy = [&](int ic, int gcoord) -> double {
            if (gcoord <= 0 || gcoord >= Mc_) return 0.0;
            return c[n1c + ic + Mc_ * (gcoord - 1)];
        };
        for (int gs = 0; gs < Mf_ - 1; ++gs)
            for (int i = 0; i < Mf_; ++i) {
                const int gcoord = gs + 1, ic = i / 2;
                double v = (gcoord % 2 == 0)
                               ? cy(ic, gcoord / 2)
                               : 0.5 * (cy(ic, gcoord / 2) + cy(ic, gcoord / 2 + 1));
                f[n1f + i + Mf_ * gs] += v;
            }
    }

    void restrict_vec(std::span<const double> f, std::span<double> c) const override {
        std::fill(c.begin(), c.end(), 0.0);
        const int n1f = (Mf_ - 1) * Mf_, n1c = (Mc_ - 1) * Mc_;
        auto addx = [&](int fcoord, int jc, double v) {
            if (fcoord <= 0 || fcoord >= Mc_) return;
            c[(fcoord - 1) + (Mc_ - 1) * jc] += v;
        };
        for (int j = 0; j < Mf_; ++j)
            for (int fs = 0; fs < Mf_ - 1; ++fs) {
                const int fcoord = fs + 1, jc = j / 2;
                const double v = 0.25 * f[fs + (Mf_ - 1) * j];
                if (fcoord % 2 == 0) {
                    addx(fcoord / 2, jc, v);
                } else {
                    addx(fcoord / 2, jc, 0.5 * v);
                    addx(fcoord / 2 + 1, jc, 0.5 * v);
                }
            }
        auto addy = [&](int ic, int gcoord, double v) {
            if (gcoord <= 0 || gcoord >= Mc_) return;
            c[n1c + ic + Mc_ * (gcoord - 1)] += v;
        };
        for (int gs = 0; gs < Mf_ - 1; ++gs)
            for (int i = 0; i < Mf_; ++i) {
                const int gcoord = gs + 1, ic = i / 2;
                const double v = 0.25 * f[n1f + i + Mf_ * gs];
                if (gcoord % 2 == 0) {
                    addy(ic, gcoord / 2, v);
                } else {
                    addy(ic, gcoord / 2, 0.5 * v);
                    addy(ic, gcoord / 2 + 1, 0.5 * v);
                }
            }
    }

private:
    int Mf_, Mc_;
};

std::vector<Field> density_levels(const Field& rho) {
    std::vector<Field> levels;
    levels.push_back(rho);
    int M = rho.nx;
    while (mg_coarsenable(M)) {
        levels.push_back(restrict_cell(levels.back()));
        M /= 2;
    }
    return levels;
}

}  // namespace

MgHierarchy build_ch_hierarchy(const Field& rho, double coeff, double eps, double h) {
    MgHierarchy H;
    if (!mg_coarsenable(rho.nx)) return H;
    std::vector<Field> rl = density_levels(rho);
    double hl = h;
    for (size_t l = 0; l < rl.size(); ++l) {
        H.ops.push_back(std::make_unique<ChSystemOperator>(rl[l], coeff, eps, hl));
        if (l + 1 < rl.size()) H.transfers.push_back(std::make_unique<CellTransfer>(rl[l].nx));
        hl *= 2.0;
    }
    std::vector<const LinearOperator*> ops;
    std::vector<const LevelTransfer*> tr;
    for (auto& o : H.ops) ops.push_back(o.get());
    for (auto& t : H.transfers) tr.push_back(t.get());
    H.pc = std::make_unique<MgPreconditioner>(std::move(ops), std::move(tr));
    return H;
}

MgHierarchy build_visc_hierarchy(const Field& rho, double coeff, double nu, double lambda,
                                 double h) {
    MgHierarchy H;
    if (!mg_coarsenable(rho.nx)) return H;
    std::vector<Field> rl = density_levels(rho);
    double hl = h;
    for (size_t l = 0; l < rl.size(); ++l) {
        H.ops.push_back(std::make_unique<ViscSystemOperator>(
            to_staggered(rl[l], Axis::X), to_staggered(rl[l], Axis::Y), coeff, nu, lambda, hl));
        if (l + 1 < rl.size()) H.transfers.push_back(std::make_unique<FaceTransfer>(rl[l].nx));
        hl *= 2.0;
    }
    std::vector<const LinearOperator*> ops;
    std::vector<const LevelTransfer*> tr;
    for (auto& o : H.ops) ops.push_back(o.get());
    for (auto& t : H.transfers) tr.push_back(t.get());
    H.pc = std::make_unique<MgPreconditioner>(std::move(ops), std::move(tr));
    return H;
}

}  // namespace chns
