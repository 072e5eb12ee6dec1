#pragma once

#include <map>
#include <ostream>
#include <string>

#include "chns/grid.hpp"
#include "chns/imex.hpp"

namespace chns {

// cumulative totals err_rho = sum(rho - rho0), err_q = sum(rho c - (rho c)0)
struct DiagnosticsRow {
    double t = 0.0, dt = 0.0, cs = 0.0;
    double err_rho = 0.0, err_q = 0.0;
    double c_min = 0.0, c_max = 0.0, rho_min = 0.0;
    int it_ch = 0, it_vel = 0;
};

void write_diagnostics_header(std::ostream& os);
void write_diagnostics_row(std::ostream& os, const DiagnosticsRow& row);

DiagnosticsRow make_diagnostics_row(const MacGrid& g, const Fields& U, double mass0,
                                    double q0, const StepStats& st);

// cell-centered point list: x, y, rho, v1c, v2c, c, p (velocities averaged
// to centers, interior average at wall cells)
void write_snapshot_csv(const std::string& path, const MacGrid& g, const ModelParams& par,
                        const Fields& U);

// legacy ASCII VTK STRUCTURED_POINTS with the same cell-centered fields
void write_snapshot_vtk(const std::string& path, const MacGrid& g, const ModelParams& par,
                        const Fields& U);

// line segments of the zero level set of c (marching-squares on primal
// nodes), one "x1,y1,x2,y2" row per segment
void write_levelset_segments(const std::string& path, const MacGrid& g, const Field& c);

// line-oriented key=value text; '#' starts a comment, blank lines ignored
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace chns
