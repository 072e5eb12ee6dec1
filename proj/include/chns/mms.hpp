#pragma once

#include "chns/grid.hpp"

namespace chns {

// Manufactured solution for the convergence study and the forcing terms that
// make it an exact solution of the forced system. Implementations are
// generated by scripts/gen_mms.py.
double mms_rho(double x, double y, double t);
double mms_v1(double x, double y, double t);
double mms_v2(double x, double y, double t);
double mms_c(double x, double y, double t);

double mms_s_rho(double x, double y, double t);
double mms_s_m1(double x, double y, double t, const ModelParams& par);
double mms_s_m2(double x, double y, double t, const ModelParams& par);
double mms_s_q(double x, double y, double t, const ModelParams& par);

}  // namespace chns
