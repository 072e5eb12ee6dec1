#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "chns/errors.hpp"

namespace chns {

// Matrix-free apply contract used by the stage solvers.
struct LinearOperator {
    virtual ~LinearOperator() = default;
    virtual int dim() const = 0;
    virtual void apply(std::span<const double> x, std::span<double> y) const = 0;
    // Diagonal, when cheaply available (smoothing). Empty vector if not.
    virtual std::vector<double> diagonal() const { return {}; }
    // One lexicographic Gauss-Seidel sweep, when the operator supports it.
    virtual bool supports_gs() const { return false; }
    virtual void gs_sweep(std::span<double> /*x*/, std::span<const double> /*b*/, bool /*forward*/) const {
        throw contract_error("gs_sweep: operator has no Gauss-Seidel support");
    }
};

struct SolveReport {
    int iterations = 0;
    double final_residual = 0.0;
    bool converged = false;
};

using Preconditioner = std::function<void(std::span<const double> r, std::span<double> z)>;

// Preconditioned conjugate gradient; stops at ||b - A x||_2 <= tol*||b||_2.
// Throws solver_error on p^T A p <= 0 (operator not SPD).
SolveReport cg(const LinearOperator& A, std::span<const double> b, std::span<double> x, double tol, int max_iter,
               const Preconditioner* precond = nullptr);

// `sweeps` lexicographic Gauss-Seidel sweeps (forward order).
void gs_smooth(const LinearOperator& A, std::span<double> x, std::span<const double> b, int sweeps);

// Grid-transfer contract for one multigrid level pair (fine -> coarse).
struct LevelTransfer {
    virtual ~LevelTransfer() = default;
    virtual int fine_dim() const = 0;
    virtual int coarse_dim() const = 0;
    virtual void restrict_vec(std::span<const double> fine, std::span<double> coarse) const = 0;
    virtual void prolong_add(std::span<const double> coarse, std::span<double> fine) const = 0;
};

// Geometric V(1,1)-cycle preconditioner. Level 0 is the finest; operators and
// transfers are owned by the caller. Symmetric: forward GS pre-smoothing,
// backward GS post-smoothing, coarsest level solved by tight CG.
class MgPreconditioner {
public:
    MgPreconditioner(std::vector<const LinearOperator*> ops, std::vector<const LevelTransfer*> transfers);

    void apply(std::span<const double> b, std::span<double> z) const;
    Preconditioner as_preconditioner() const;
    int levels() const { return static_cast<int>(ops_.size()); }

private:
    void vcycle(int level, std::span<const double> b, std::span<double> z) const;

    std::vector<const LinearOperator*> ops_;
    std::vector<const LevelTransfer*> transfers_;
    mutable std::vector<std::vector<double>> rbuf_, ebuf_;
};

}  // namespace chns
