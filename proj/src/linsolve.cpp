#include "chns/linsolve.hpp"

#include <cmath>

namespace chns {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

SolveReport cg(const LinearOperator& A, std::span<const double> b, std::span<double> x, double tol, int max_iter,
               const Preconditioner* precond) {
    const int n = A.dim();
    if (static_cast<int>(b.size()) != n || static_cast<int>(x.size()) != n)
        throw contract_error("cg: vector length mismatch");
    if (!(tol > 0.0)) throw contract_error("cg: tol must be positive");

    std::vector<double> r(n), p(n), Ap(n), z(n);
    A.apply(x, Ap);
    for (int k = 0; k < n; ++k) r[k] = b[k] - Ap[k];
    const double bnorm = norm2(b);
    const double stop = tol * (bnorm > 0.0 ? bnorm : 1.0);

    SolveReport rep;
    rep.final_residual = norm2(r);
    if (rep.final_residual <= stop) {
        rep.converged = true;
        return rep;
    }

    if (precond) (*precond)(r, z);
    else std::copy(r.begin(), r.end(), z.begin());
    std::copy(z.begin(), z.end(), p.begin());
    double rz = dot(r, z);

    for (int it = 1; it <= max_iter; ++it) {
        A.apply(p, Ap);
        const double pAp = dot(p, Ap);
        if (!(pAp > 0.0)) throw solver_error("cg: p^T A p <= 0, operator is not SPD");
        const double alpha = rz / pAp;
        for (int k = 0; k < n; ++k) {
            x[k] += alpha * p[k];
            r[k] -= alpha * Ap[k];
        }
        rep.iterations = it;
        rep.final_residual = norm2(r);
        if (rep.final_residual <= stop) {
            rep.converged = true;
            break;
        }
        if (precond) (*precond)(r, z);
        else std::copy(r.begin(), r.end(), z.begin());
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (int k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
    }

    // true residual, recomputed
    A.apply(x, Ap);
    for (int k = 0; k < n; ++k) r[k] = b[k] - Ap[k];
    rep.final_residual = norm2(r);
    rep.converged = rep.final_residual <= stop;
    return rep;
}

void gs_smooth(const LinearOperator& A, std::span<double> x, std::span<const double> b, int sweeps) {
    if (A.supports_gs()) {
        for (int s = 0; s < sweeps; ++s) A.gs_sweep(x, b, true);
        return;
    }
    // Fallback via dense rows, intended for small test operators only.
    const auto d = A.diagonal();
    if (d.empty()) throw contract_error("gs_smooth: operator exposes no diagonal");
    const int n = A.dim();
    std::vector<double> Ax(n);
    for (int s = 0; s < sweeps; ++s) {
        for (int k = 0; k < n; ++k) {
            if (d[k] == 0.0) throw solver_error("gs_smooth: zero diagonal entry");
            A.apply(x, Ax);
            x[k] += (b[k] - Ax[k]) / d[k];
        }
    }
}

MgPreconditioner::MgPreconditioner(std::vector<const LinearOperator*> ops, std::vector<const LevelTransfer*> transfers)
    : ops_(std::move(ops)), transfers_(std::move(transfers)) {
    if (ops_.empty()) throw contract_error("MgPreconditioner: empty hierarchy");
    if (transfers_.size() + 1 != ops_.size()) throw contract_error("MgPreconditioner: transfer/level count mismatch");
    rbuf_.resize(ops_.size());
    ebuf_.resize(ops_.size());
    for (size_t l = 0; l < ops_.size(); ++l) {
        rbuf_[l].resize(ops_[l]->dim());
        ebuf_[l].resize(ops_[l]->dim());
    }
}

void MgPreconditioner::vcycle(int level, std::span<const double> b, std::span<double> z) const {
    const LinearOperator& A = *ops_[level];
    const int n = A.dim();
    std::fill(z.begin(), z.end(), 0.0);

    if (level + 1 == static_cast<int>(ops_.size())) {
        // coarsest: near-exact solve so the cycle stays linear and symmetric
        cg(A, b, z, 1e-13, 4 * n + 50);
        return;
    }

    A.gs_sweep(z, b, true);  // pre-smooth

    std::vector<double>& r = rbuf_[level];
    A.apply(z, r);
    for (int k = 0; k < n; ++k) r[k] = b[k] - r[k];

    const LevelTransfer& T = *transfers_[level];
    std::vector<double> bc(T.coarse_dim());
    T.restrict_vec(r, bc);
    std::vector<double>& ec = ebuf_[level + 1];
    vcycle(level + 1, bc, ec);
    T.prolong_add(ec, z);

    A.gs_sweep(z, b, false);  // post-smooth
}

void MgPreconditioner::apply(std::span<const double> b, std::span<double> z) const { vcycle(0, b, z); }

Preconditioner MgPreconditioner::as_preconditioner() const {
    return [this](std::span<const double> r, std::span<double> z) { this->apply(r, z); };
}

}  // namespace chns
