#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <iomanip>

#include "chns/errors.hpp"
#include "chns/mg.hpp"
#include "chns/output.hpp"
#include "chns/scenarios.hpp"

namespace fs = std::filesystem;
using namespace chns;

namespace {

double to_double(const std::string& key, const std::string& val) {
    try {
        size_t pos = 0;
        double v = std::stod(val, &pos);
        if (pos != val.size()) throw std::invalid_argument(val);
        return v;
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "': not a number: " + val);
    }
}

// config file values fill params/controls; CLI flags override afterwards
void apply_config(const std::map<std::string, std::string>& kv, ModelParams& par,
                  StepControls& ctl) {
    for (const auto& [key, val] : kv) {
        if (key == "gamma")
            par.gamma = to_double(key, val);
        else if (key == "Cp")
            par.Cp = to_double(key, val);
        else if (key == "eps")
            par.eps = to_double(key, val);
        else if (key == "nu")
            par.nu = to_double(key, val);
        else if (key == "lambda")
            par.lambda = to_double(key, val);
        else if (key == "g")
            par.g = to_double(key, val);
        else if (key == "cfl")
            ctl.cfl = to_double(key, val);
        else if (key == "ch_tol")
            ctl.ch_tol = to_double(key, val);
        else if (key == "vel_tol")
            ctl.vel_tol = to_double(key, val);
        else if (key == "max_iter_factor")
            ctl.max_iter_factor = static_cast<int>(to_double(key, val));
        else
            throw config_error("unknown config key: " + key);
    }
}

struct RunOptions {
    std::string scenario = "test1";
    int M = 64;
    double T = -1.0;  // <0: use the scenario default
    double cfl = -1.0;
    std::string scheme = "dirksa";
    std::uint64_t seed = 0;
    std::string out;
    std::vector<double> snapshots;
    std::string precond = "none";
    std::string config;
};

std::ofstream open_text(const fs::path& p) {
    std::ofstream os(p);
    if (!os) throw io_error("cannot open for writing: " + p.string());
    return os;
}

void write_snapshot(const fs::path& dir, int idx, double t, const MacGrid& g,
                    const ModelParams& par, const Fields& U, bool levelset,
                    std::ostream& index) {
    char tag[16];
    std::snprintf(tag, sizeof tag, "%03d", idx);
    write_snapshot_csv((dir / (std::string("snap_") + tag + ".csv")).string(), g, par, U);
    write_snapshot_vtk((dir / (std::string("snap_") + tag + ".vtk")).string(), g, par, U);
    if (levelset)
        write_levelset_segments((dir / (std::string("levelset_") + tag + ".csv")).string(),
                                g, U.c);
    index << idx << ',' << std::setprecision(17) << t << '\n';
}

// one full time integration; returns the final state
Fields run_scenario(const Scenario& sc, int M, double T, const std::string& scheme,
                    const StepControls& ctl, const std::vector<double>& snapshots,
                    const fs::path& out) {
    fs::create_directories(out);
    MacGrid g = make_grid(M);
    Fields U = initial_fields(sc, g);
    ImexStepper stepper(g, sc.par, tableau(scheme), ctl, scenario_forcing(sc));

    std::ofstream diag = open_text(out / "diag.csv");
    write_diagnostics_header(diag);
    const double mass0 = field_sum(U.rho);
    const double q0 = field_sum(hadamard(U.rho, U.c));
    {
        StepStats s0;
        s0.rho_min = *std::min_element(U.rho.data.begin(), U.rho.data.end());
        s0.c_min = *std::min_element(U.c.data.begin(), U.c.data.end());
        s0.c_max = *std::max_element(U.c.data.begin(), U.c.data.end());
        write_diagnostics_row(diag, make_diagnostics_row(g, U, mass0, q0, s0));
    }

    std::vector<double> snaps = snapshots;
    std::sort(snaps.begin(), snaps.end());
    std::ofstream index = open_text(out / "snapshots.csv");
    index << "idx,t\n";
    int snap_idx = 0;
    const bool levelset = (sc.name == "test4");
    write_snapshot(out, snap_idx++, 0.0, g, sc.par, U, levelset, index);
    size_t next_snap = 0;
    while (next_snap < snaps.size() && snaps[next_snap] <= 1e-14) ++next_snap;

    double t = 0.0;
    while (t < T - 1e-12 * T) {
        double dt = stepper.select_dt(U, t, T);
        if (next_snap < snaps.size()) dt = std::min(dt, snaps[next_snap] - t);
        StepStats st = stepper.step(U, t, dt);
        t += dt;
        write_diagnostics_row(diag, make_diagnostics_row(g, U, mass0, q0, st));
        if (next_snap < snaps.size() && t >= snaps[next_snap] - 1e-12) {
            write_snapshot(out, snap_idx++, t, g, sc.par, U, levelset, index);
            ++next_snap;
        }
    }
    write_snapshot(out, snap_idx++, t, g, sc.par, U, levelset, index);
    return U;
}

int run_command(const RunOptions& opt) {
    Scenario sc = make_scenario(opt.scenario, opt.seed);
    StepControls ctl;
    if (!opt.config.empty()) apply_config(parse_config_file(opt.config), sc.par, ctl);
    if (opt.cfl > 0.0) ctl.cfl = opt.cfl;
    ctl.use_mg = (opt.precond == "mg");
    sc.par.validate();
    double T = (opt.T > 0.0) ? opt.T : sc.T;

    Fields U = run_scenario(sc, opt.M, T, opt.scheme, ctl, opt.snapshots, opt.out);
    if (sc.name == "order") {
        MacGrid g = make_grid(opt.M);
        double e = order_test_error(g, U, T);
        std::cout << "e_M = " << std::setprecision(6) << e << "\n";
    }
    std::cout << "done: scenario=" << sc.name << " M=" << opt.M << " T=" << T
              << " out=" << opt.out << "\n";
    return 0;
}

int eoc_command(const RunOptions& opt, const std::vector<int>& levels) {
    Scenario sc = make_scenario(opt.scenario, opt.seed);
    if (!sc.has_forcing)
        throw config_error("eoc requires the order scenario");
    StepControls base_ctl;
    if (!opt.config.empty()) apply_config(parse_config_file(opt.config), sc.par, base_ctl);
    if (opt.cfl > 0.0) base_ctl.cfl = opt.cfl;
    sc.par.validate();
    double T = (opt.T > 0.0) ? opt.T : sc.T;

    fs::create_directories(opt.out);
    std::ofstream table = open_text(fs::path(opt.out) / "eoc.csv");
    table << "M,e_M,EOC\n" << std::setprecision(10);
    std::cout << "M,e_M,EOC\n";
    double prev = 0.0;
    for (size_t k = 0; k < levels.size(); ++k) {
        int M = levels[k];
        StepControls ctl = base_ctl;
        ctl.use_mg = (opt.precond == "mg") && mg_coarsenable(M);
        fs::path sub = fs::path(opt.out) / ("M" + std::to_string(M));
        Fields U = run_scenario(sc, M, T, opt.scheme, ctl, {}, sub);
        double e = order_test_error(make_grid(M), U, T);
        std::string rate = (k == 0) ? "" : std::to_string(eoc(prev, e));
        table << M << ',' << e << ',' << rate << '\n';
        std::cout << M << ',' << std::setprecision(6) << e << ',' << rate << '\n';
        prev = e;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compressible Cahn-Hilliard-Navier-Stokes solver"};
    app.require_subcommand(1);

    RunOptions opt;
    std::vector<int> levels = {8, 16, 32, 64, 128};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scenario", opt.scenario)
            ->check(CLI::IsMember({"order", "test1", "test2", "test3", "test4"}));
        sub->add_option("--T", opt.T);
        sub->add_option("--cfl", opt.cfl);
        sub->add_option("--scheme", opt.scheme)->check(CLI::IsMember({"ee_ie", "dirksa"}));
        sub->add_option("--seed", opt.seed);
        sub->add_option("--out", opt.out)->required();
        sub->add_option("--precond", opt.precond)->check(CLI::IsMember({"none", "mg"}));
        sub->add_option("--config", opt.config);
    };

    CLI::App* run = app.add_subcommand("run", "integrate one scenario");
    add_common(run);
    run->add_option("--M", opt.M)->check(CLI::PositiveNumber);
    run->add_option("--snapshots", opt.snapshots)->delimiter(',');

    CLI::App* sweep = app.add_subcommand("eoc", "grid-refinement convergence table");
    add_common(sweep);
    sweep->add_option("--levels", levels)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        if (run->parsed()) return run_command(opt);
        return eoc_command(opt, levels);
    } catch (const positivity_error& e) {
        std::cerr << "positivity failure: " << e.what() << "\n";
        return 2;
    } catch (const solver_error& e) {
        std::cerr << "linear solver failure: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
