#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chns/convection.hpp"
#include "chns/grid.hpp"

namespace chns {

// Pair of Butcher tableaus: explicit one (tilde) drives convection and
// forcing, the diagonally implicit one drives the stiff forces. Both share
// the weights b, and the implicit scheme is stiffly accurate.
struct ButcherPair {
    std::string name;
    int s = 0;
    std::vector<std::vector<double>> at;  // explicit coefficients, strictly lower
    std::vector<double> gt;               // explicit abscissae
    std::vector<std::vector<double>> a;   // implicit coefficients, lower triangular
    std::vector<double> g;                // implicit abscissae
    std::vector<double> b;                // shared weights
};

// "ee_ie": first order, explicit/implicit Euler. "dirksa": second order,
// two-stage, L-stable implicit part.
ButcherPair tableau(const std::string& name);

// optional body forcing sampled pointwise on the staggered grids
struct Forcing {
    std::function<double(double, double, double)> s_rho, s_m1, s_m2, s_q;
    bool active() const { return static_cast<bool>(s_rho); }
};

struct StepControls {
    double cfl = 0.4;
    double ch_tol = 1e-10;
    double vel_tol = 1e-10;
    int max_iter_factor = 10;  // cap = factor * n
    bool use_mg = false;
};

struct StepStats {
    double t = 0.0, dt = 0.0, cs = 0.0;
    int ch_iterations = 0, vel_iterations = 0;  // summed over stages
    int floor_accepts = 0;  // stage solves accepted at the roundoff floor
    double rho_min = 0.0, rho_max = 0.0, c_min = 0.0, c_max = 0.0;
};

class ImexStepper {
public:
    ImexStepper(MacGrid grid, ModelParams par, ButcherPair tab, StepControls ctl,
                Forcing forcing = {});

    // cfl * h / cs, clipped to hit T exactly
    double select_dt(const Fields& U, double t, double T) const;

    // advance U in place from t by dt
    StepStats step(Fields& U, double t, double dt);

    const MacGrid& grid() const { return grid_; }
    const ModelParams& params() const { return par_; }

private:
    struct Blocks {  // one K register, conserved layout
        Field rho, m1, m2, q;
    };
    Blocks eval_conv_forced(const Fields& U, double t) const;

    MacGrid grid_;
    ModelParams par_;
    ButcherPair tab_;
    StepControls ctl_;
    Forcing forcing_;
};

}  // namespace chns
