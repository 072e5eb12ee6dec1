#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "chns/grid.hpp"
#include "chns/imex.hpp"

namespace chns {

// One of the canned problem setups: "order" is the manufactured-solution
// convergence study, "test1".."test4" are the physical experiments.
struct Scenario {
    std::string name;
    ModelParams par;
    double T = 0.0;  // default horizon, overridable from the CLI
    std::uint64_t seed = 0;
    bool has_forcing = false;  // only the order test is forced
};

Scenario make_scenario(const std::string& name, std::uint64_t seed);

Fields initial_fields(const Scenario& sc, const MacGrid& g);

// forcing closure for the order test; empty (inactive) otherwise
Forcing scenario_forcing(const Scenario& sc);

// mean absolute error of the conserved variables against the manufactured
// solution at time t: e_M = (1/M^2) sum |u_k - u_k,exact| over rho, m1, m2, q
// on their native grids
double order_test_error(const MacGrid& g, const Fields& U, double t);

inline double eoc(double e_coarse, double e_fine) { return std::log2(e_coarse / e_fine); }

}  // namespace chns
