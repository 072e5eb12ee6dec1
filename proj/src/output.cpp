#include "chns/output.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include "chns/errors.hpp"
#include "chns/fdops.hpp"

namespace chns {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw io_error("cannot open for writing: " + path);
    os << std::setprecision(17);
    return os;
}

// faces adjacent to cell i, wall value zero
double center_v1(const Fields& U, int M, int i, int j) {
    double l = (i > 0) ? U.v1(i - 1, j) : 0.0;
    double r = (i < M - 1) ? U.v1(i, j) : 0.0;
    return 0.5 * (l + r);
}

double center_v2(const Fields& U, int M, int i, int j) {
    double b = (j > 0) ? U.v2(i, j - 1) : 0.0;
    double t = (j < M - 1) ? U.v2(i, j) : 0.0;
    return 0.5 * (b + t);
}

}  // namespace

void write_diagnostics_header(std::ostream& os) {
    os << "t,dt,cs,err_rho,err_q,cmin,cmax,rhomin,it_ch,it_vel\n";
}

void write_diagnostics_row(std::ostream& os, const DiagnosticsRow& r) {
    os << std::setprecision(17) << r.t << ',' << r.dt << ',' << r.cs << ',' << r.err_rho
       << ',' << r.err_q << ',' << r.c_min << ',' << r.c_max << ',' << r.rho_min << ','
       << r.it_ch << ',' << r.it_vel << '\n';
}

DiagnosticsRow make_diagnostics_row(const MacGrid& g, const Fields& U, double mass0,
                                    double q0, const StepStats& st) {
    (void)g;
    DiagnosticsRow r;
    r.t = st.t;
    r.dt = st.dt;
    r.cs = st.cs;
    r.err_rho = field_sum(U.rho) - mass0;
    r.err_q = field_sum(hadamard(U.rho, U.c)) - q0;
    r.c_min = st.c_min;
    r.c_max = st.c_max;
    r.rho_min = st.rho_min;
    r.it_ch = st.ch_iterations;
    r.it_vel = st.vel_iterations;
    return r;
}

void write_snapshot_csv(const std::string& path, const MacGrid& g, const ModelParams& par,
                        const Fields& U) {
    std::ofstream os = open_out(path);
    os << "x,y,rho,v1c,v2c,c,p\n";
    for (int j = 0; j < g.M; ++j)
        for (int i = 0; i < g.M; ++i)
            os << g.xp(i) << ',' << g.yp(j) << ',' << U.rho(i, j) << ','
               << center_v1(U, g.M, i, j) << ',' << center_v2(U, g.M, i, j) << ','
               << U.c(i, j) << ',' << par.pressure(U.rho(i, j)) << '\n';
    if (!os) throw io_error("write failed: " + path);
}

void write_snapshot_vtk(const std::string& path, const MacGrid& g, const ModelParams& par,
                        const Fields& U) {
    std::ofstream os = open_out(path);
    const int M = g.M;
    os << "# vtk DataFile Version 3.0\n"
       << "chns snapshot\n"
       << "ASCII\n"
       << "DATASET STRUCTURED_POINTS\n"
       << "DIMENSIONS " << M << ' ' << M << " 1\n"
       << "ORIGIN " << 0.5 * g.h << ' ' << 0.5 * g.h << " 0\n"
       << "SPACING " << g.h << ' ' << g.h << " 1\n"
       << "POINT_DATA " << M * M << '\n';
    auto scalars = [&](const char* name, auto&& value) {
        os << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) os << value(i, j) << '\n';
    };
    scalars("rho", [&](int i, int j) { return U.rho(i, j); });
    scalars("c", [&](int i, int j) { return U.c(i, j); });
    scalars("p", [&](int i, int j) { return par.pressure(U.rho(i, j)); });
    os << "VECTORS velocity double\n";
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i)
            os << center_v1(U, M, i, j) << ' ' << center_v2(U, M, i, j) << " 0\n";
    if (!os) throw io_error("write failed: " + path);
}

void write_levelset_segments(const std::string& path, const MacGrid& g, const Field& c) {
    std::ofstream os = open_out(path);
    os << "x1,y1,x2,y2\n";
    const int M = g.M;
    // marching squares on the primal-node lattice
    for (int j = 0; j + 1 < M; ++j)
        for (int i = 0; i + 1 < M; ++i) {
            struct Pt {
                double x, y;
            };
            std::vector<Pt> hits;
            auto edge = [&](int i0, int j0, int i1, int j1) {
                double a = c(i0, j0), b = c(i1, j1);
                if ((a < 0.0) == (b < 0.0)) return;
                double s = a / (a - b);
                hits.push_back({g.xp(i0) + s * (g.xp(i1) - g.xp(i0)),
                                g.yp(j0) + s * (g.yp(j1) - g.yp(j0))});
            };
            edge(i, j, i + 1, j);
            edge(i + 1, j, i + 1, j + 1);
            edge(i + 1, j + 1, i, j + 1);
            edge(i, j + 1, i, j);
            for (size_t k = 0; k + 1 < hits.size(); k += 2)
                os << hits[k].x << ',' << hits[k].y << ',' << hits[k + 1].x << ','
                   << hits[k + 1].y << '\n';
        }
    if (!os) throw io_error("write failed: " + path);
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw io_error("cannot open config file: " + path);
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
    };
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string s = trim(line.substr(0, line.find('#')));
        if (s.empty()) continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty())
            throw config_error(path + ":" + std::to_string(lineno) + ": empty key");
        kv[key] = val;
    }
    return kv;
}

}  // namespace chns
