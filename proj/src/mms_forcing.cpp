// Generated by scripts/gen_mms.py; do not edit by hand.

#include "chns/mms.hpp"

#include <cmath>

namespace chns {

double mms_rho(double x, double y, double t) {
    return (1.0/10.0)*(t + 1)*cos(2*M_PI*x)*cos(M_PI*y) + 5.0/4.0;
}

double mms_v1(double x, double y, double t) {
    return (1 - 2*((t)*(t)))*sin(M_PI*x)*sin(M_PI*y);
}

double mms_v2(double x, double y, double t) {
    return (((t)*(t)) + 1)*sin(M_PI*x)*sin(2*M_PI*y);
}

double mms_c(double x, double y, double t) {
    return (1.0/10.0)*(1 - t)*cos(M_PI*x)*cos(M_PI*y) + 3.0/4.0;
}

double mms_s_rho(double x, double y, double t) {
    return -1.0/10.0*M_PI*(t + 1)*(((t)*(t)) + 1)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x) + (1.0/5.0)*M_PI*(t + 1)*(2*((t)*(t)) - 1)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*y) + (1.0/10.0)*M_PI*(((t)*(t)) + 1)*((2*t + 2)*cos(2*M_PI*x)*cos(M_PI*y) + 25)*sin(M_PI*x)*cos(2*M_PI*y) - 1.0/20.0*M_PI*(2*((t)*(t)) - 1)*((2*t + 2)*cos(2*M_PI*x)*cos(M_PI*y) + 25)*sin(M_PI*y)*cos(M_PI*x) + (1.0/10.0)*cos(2*M_PI*x)*cos(M_PI*y);
}

double mms_s_m1(double x, double y, double t, const ModelParams& par) {
    const double gamma = par.gamma, Cp = par.Cp, eps = par.eps, nu = par.nu, lambda_ = par.lambda;
    return (4*pow(20, gamma)*pow(M_PI, 3)*eps*pow(t, 3)*sin(M_PI*x)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 4*pow(20, gamma)*pow(M_PI, 3)*eps*((t)*(t))*sin(M_PI*x)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 50*pow(20, gamma)*pow(M_PI, 3)*eps*((t)*(t))*sin(M_PI*x)*cos(M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 4*pow(20, gamma)*pow(M_PI, 3)*eps*t*sin(M_PI*x)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 100*pow(20, gamma)*pow(M_PI, 3)*eps*t*sin(M_PI*x)*cos(M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 4*pow(20, gamma)*pow(M_PI, 3)*eps*sin(M_PI*x)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 50*pow(20, gamma)*pow(M_PI, 3)*eps*sin(M_PI*x)*cos(M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*pow(t, 3)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 5000*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*sin(M_PI*x)*sin(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 5000*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*y) + 200*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*t*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*t*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 200*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 2500*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*sin(M_PI*x)*sin(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 5000*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*cos(M_PI*x)*cos(2*M_PI*y) - 1200*pow(20, gamma)*((M_PI)*(M_PI))*nu*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*nu*pow(t, 3)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 1200*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 15000*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*sin(M_PI*x)*sin(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 5000*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*y) + 600*pow(20, gamma)*((M_PI)*(M_PI))*nu*t*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*nu*t*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 600*pow(20, gamma)*((M_PI)*(M_PI))*nu*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 7500*pow(20, gamma)*((M_PI)*(M_PI))*nu*sin(M_PI*x)*sin(M_PI*y) - 400*pow(20, gamma)*((M_PI)*(M_PI))*nu*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 5000*pow(20, gamma)*((M_PI)*(M_PI))*nu*cos(M_PI*x)*cos(2*M_PI*y) - 160*pow(20, gamma)*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 40*pow(20, gamma)*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 80*pow(20, gamma)*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) - 40*pow(20, gamma)*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 160*pow(20, gamma)*M_PI*pow(t, 6)*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 320*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 2000*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*y) + 80*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) + 500*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*cos(2*M_PI*x) - 160*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) - 2000*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 80*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 1000*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 320*pow(20, gamma)*M_PI*pow(t, 5)*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 4000*pow(20, gamma)*M_PI*pow(t, 5)*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 2000*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*y) + 60*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) + 500*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*cos(2*M_PI*x) - 120*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) - 2000*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 12500*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*y) - 60*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 1000*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 6250*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(M_PI*y) + 4000*pow(20, gamma)*M_PI*pow(t, 4)*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 25000*pow(20, gamma)*M_PI*pow(t, 4)*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x) + 320*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 2000*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*y) + 40*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) + 250*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*cos(2*M_PI*x) - 80*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) - 1000*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 40*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 500*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 320*pow(20, gamma)*M_PI*pow(t, 3)*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 4000*pow(20, gamma)*M_PI*pow(t, 3)*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 120*pow(20, gamma)*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 120*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 2000*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*y) + 250*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*cos(2*M_PI*x) - 1000*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 6250*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*y) - 500*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 3125*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(M_PI*y) - 120*pow(20, gamma)*M_PI*((t)*(t))*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 4000*pow(20, gamma)*M_PI*((t)*(t))*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 25000*pow(20, gamma)*M_PI*((t)*(t))*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x) - 200*pow(20, gamma)*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 2500*pow(20, gamma)*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 80*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 500*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*y) - 40*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 250*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*cos(2*M_PI*x) + 80*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 1000*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 40*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 500*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 80*pow(20, gamma)*M_PI*t*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 1000*pow(20, gamma)*M_PI*t*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 60*pow(20, gamma)*t*sin(M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 2000*pow(20, gamma)*t*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 12500*pow(20, gamma)*t*sin(M_PI*x)*sin(M_PI*y) - 40*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 500*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*y) - 20*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 250*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*((sin(M_PI*y))*(sin(M_PI*y)))*sin(2*M_PI*y)*cos(2*M_PI*x) + 40*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 1000*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 6250*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*y) + 20*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 500*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 3125*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(M_PI*y) + 40*pow(20, gamma)*M_PI*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 1000*pow(20, gamma)*M_PI*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 6250*pow(20, gamma)*M_PI*sin(M_PI*x)*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x) + 20*pow(20, gamma)*sin(M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 250*pow(20, gamma)*sin(M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 400*M_PI*Cp*gamma*t*pow(2*t*cos(2*M_PI*x)*cos(M_PI*y) + 2*cos(2*M_PI*x)*cos(M_PI*y) + 25, gamma)*sin(2*M_PI*x)*cos(M_PI*y) - 400*M_PI*Cp*gamma*pow(2*t*cos(2*M_PI*x)*cos(M_PI*y) + 2*cos(2*M_PI*x)*cos(M_PI*y) + 25, gamma)*sin(2*M_PI*x)*cos(M_PI*y))/(200*pow(20, gamma)*t*cos(2*M_PI*x)*cos(M_PI*y) + 200*pow(20, gamma)*cos(2*M_PI*x)*cos(M_PI*y) + 2500*pow(20, gamma));
}

double mms_s_m2(double x, double y, double t, const ModelParams& par) {
    const double gamma = par.gamma, Cp = par.Cp, eps = par.eps, nu = par.nu, lambda_ = par.lambda, g_ = par.g;
    return (4*pow(20, gamma)*pow(M_PI, 3)*eps*pow(t, 3)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 4*pow(20, gamma)*pow(M_PI, 3)*eps*((t)*(t))*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 50*pow(20, gamma)*pow(M_PI, 3)*eps*((t)*(t))*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(M_PI*y) - 4*pow(20, gamma)*pow(M_PI, 3)*eps*t*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 100*pow(20, gamma)*pow(M_PI, 3)*eps*t*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(M_PI*y) + 4*pow(20, gamma)*pow(M_PI, 3)*eps*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 50*pow(20, gamma)*pow(M_PI, 3)*eps*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(M_PI*y) - 20*pow(20, gamma)*g_*((t)*(t))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 40*pow(20, gamma)*g_*t*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 500*pow(20, gamma)*g_*t*cos(2*M_PI*x)*cos(M_PI*y) - 20*pow(20, gamma)*g_*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 500*pow(20, gamma)*g_*cos(2*M_PI*x)*cos(M_PI*y) - 3125*pow(20, gamma)*g_ + 800*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*pow(t, 3)*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 800*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 10000*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*y) + 400*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 5000*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*((t)*(t))*cos(M_PI*x)*cos(M_PI*y) + 800*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*t*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 200*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*t*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 800*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 10000*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*sin(M_PI*x)*sin(2*M_PI*y) - 200*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 2500*pow(20, gamma)*((M_PI)*(M_PI))*lambda_*cos(M_PI*x)*cos(M_PI*y) + 1800*pow(20, gamma)*((M_PI)*(M_PI))*nu*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 400*pow(20, gamma)*((M_PI)*(M_PI))*nu*pow(t, 3)*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 1800*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 22500*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*y) + 400*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 5000*pow(20, gamma)*((M_PI)*(M_PI))*nu*((t)*(t))*cos(M_PI*x)*cos(M_PI*y) + 1800*pow(20, gamma)*((M_PI)*(M_PI))*nu*t*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 200*pow(20, gamma)*((M_PI)*(M_PI))*nu*t*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 1800*pow(20, gamma)*((M_PI)*(M_PI))*nu*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 22500*pow(20, gamma)*((M_PI)*(M_PI))*nu*sin(M_PI*x)*sin(2*M_PI*y) - 200*pow(20, gamma)*((M_PI)*(M_PI))*nu*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 2500*pow(20, gamma)*((M_PI)*(M_PI))*nu*cos(M_PI*x)*cos(M_PI*y) + 80*pow(20, gamma)*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 20*pow(20, gamma)*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) + 80*pow(20, gamma)*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) - 80*pow(20, gamma)*M_PI*pow(t, 6)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 160*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 1000*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*y) - 40*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 250*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*cos(2*M_PI*x) + 160*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 2000*pow(20, gamma)*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 160*pow(20, gamma)*M_PI*pow(t, 5)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 2000*pow(20, gamma)*M_PI*pow(t, 5)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 120*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 1000*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*y) - 60*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 250*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*cos(2*M_PI*x) + 240*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 2000*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 12500*pow(20, gamma)*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*y) - 120*pow(20, gamma)*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 2000*pow(20, gamma)*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 12500*pow(20, gamma)*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x) + 80*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 500*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*y) - 80*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 500*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*cos(2*M_PI*x) + 320*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 4000*pow(20, gamma)*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 80*pow(20, gamma)*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 1000*pow(20, gamma)*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 60*pow(20, gamma)*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 500*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*y) - 60*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 500*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*cos(2*M_PI*x) + 240*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 4000*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 25000*pow(20, gamma)*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*y) - 1000*pow(20, gamma)*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 6250*pow(20, gamma)*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x) + 100*pow(20, gamma)*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 1250*pow(20, gamma)*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 80*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 500*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*y) - 40*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 250*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*cos(2*M_PI*x) + 160*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 2000*pow(20, gamma)*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 80*pow(20, gamma)*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 1000*pow(20, gamma)*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 60*pow(20, gamma)*t*sin(M_PI*x)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 1000*pow(20, gamma)*t*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) + 6250*pow(20, gamma)*t*sin(M_PI*x)*sin(2*M_PI*y) - 40*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 500*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*y) - 20*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 250*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((sin(2*M_PI*y))*(sin(2*M_PI*y)))*cos(2*M_PI*x) + 80*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 2000*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 12500*pow(20, gamma)*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(2*M_PI*y)*cos(2*M_PI*y) + 40*pow(20, gamma)*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 1000*pow(20, gamma)*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 6250*pow(20, gamma)*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x) + 20*pow(20, gamma)*sin(M_PI*x)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 250*pow(20, gamma)*sin(M_PI*x)*sin(2*M_PI*y)*cos(2*M_PI*x)*cos(M_PI*y) - 200*M_PI*Cp*gamma*t*pow(2*t*cos(2*M_PI*x)*cos(M_PI*y) + 2*cos(2*M_PI*x)*cos(M_PI*y) + 25, gamma)*sin(M_PI*y)*cos(2*M_PI*x) - 200*M_PI*Cp*gamma*pow(2*t*cos(2*M_PI*x)*cos(M_PI*y) + 2*cos(2*M_PI*x)*cos(M_PI*y) + 25, gamma)*sin(M_PI*y)*cos(2*M_PI*x))/(200*pow(20, gamma)*t*cos(2*M_PI*x)*cos(M_PI*y) + 200*pow(20, gamma)*cos(2*M_PI*x)*cos(M_PI*y) + 2500*pow(20, gamma));
}

double mms_s_q(double x, double y, double t, const ModelParams& par) {
    const double eps = par.eps;
    return (-128000*pow(M_PI, 4)*eps*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 256000*pow(M_PI, 4)*eps*pow(t, 3)*((sin(2*M_PI*x))*(sin(2*M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) + 96000*pow(M_PI, 4)*eps*pow(t, 3)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 128000*pow(M_PI, 4)*eps*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 1600000*pow(M_PI, 4)*eps*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 256000*pow(M_PI, 4)*eps*((t)*(t))*((sin(2*M_PI*x))*(sin(2*M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) - 800000*pow(M_PI, 4)*eps*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x) + 96000*pow(M_PI, 4)*eps*((t)*(t))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 400000*pow(M_PI, 4)*eps*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 128000*pow(M_PI, 4)*eps*t*sin(M_PI*x)*sin(2*M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 256000*pow(M_PI, 4)*eps*t*((sin(2*M_PI*x))*(sin(2*M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) - 96000*pow(M_PI, 4)*eps*t*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 10000000*pow(M_PI, 4)*eps*t*cos(M_PI*x)*cos(M_PI*y) + 128000*pow(M_PI, 4)*eps*sin(M_PI*x)*sin(2*M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 1600000*pow(M_PI, 4)*eps*sin(M_PI*x)*sin(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 256000*pow(M_PI, 4)*eps*((sin(2*M_PI*x))*(sin(2*M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) + 800000*pow(M_PI, 4)*eps*((sin(M_PI*y))*(sin(M_PI*y)))*cos(M_PI*x)*cos(2*M_PI*x) - 96000*pow(M_PI, 4)*eps*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 400000*pow(M_PI, 4)*eps*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 10000000*pow(M_PI, 4)*eps*cos(M_PI*x)*cos(M_PI*y) - 320*M_PI*pow(t, 7)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 640*M_PI*pow(t, 7)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 320*M_PI*pow(t, 7)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 320*M_PI*pow(t, 7)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) + 320*M_PI*pow(t, 7)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 960*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 16000*M_PI*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 96*((M_PI)*(M_PI))*pow(t, 6)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) - 1920*M_PI*pow(t, 6)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 24000*M_PI*pow(t, 6)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) + 4800*M_PI*pow(t, 6)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 960*M_PI*pow(t, 6)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 14000*M_PI*pow(t, 6)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 1200*M_PI*pow(t, 6)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 3) - 960*M_PI*pow(t, 6)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) - 16000*M_PI*pow(t, 6)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 2400*M_PI*pow(t, 6)*sin(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 96*((M_PI)*(M_PI))*pow(t, 6)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 960*M_PI*pow(t, 6)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) + 16000*M_PI*pow(t, 6)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 2400*M_PI*pow(t, 6)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 96*((M_PI)*(M_PI))*pow(t, 6)*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) - 480*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 32000*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 300000*M_PI*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 3600*((M_PI)*(M_PI))*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) - 720*((M_PI)*(M_PI))*pow(t, 5)*((sin(M_PI*x))*(sin(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 960*M_PI*pow(t, 5)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 48000*M_PI*pow(t, 5)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) - 300000*M_PI*pow(t, 5)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 19200*M_PI*pow(t, 5)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 180000*M_PI*pow(t, 5)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 960*M_PI*pow(t, 5)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 28000*M_PI*pow(t, 5)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 225000*M_PI*pow(t, 5)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 4800*M_PI*pow(t, 5)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 3) - 45000*M_PI*pow(t, 5)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 3)*((cos(M_PI*y))*(cos(M_PI*y))) - 960*M_PI*pow(t, 5)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) - 32000*M_PI*pow(t, 5)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) - 300000*M_PI*pow(t, 5)*sin(M_PI*x)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 9600*M_PI*pow(t, 5)*sin(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 120000*M_PI*pow(t, 5)*sin(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 3600*((M_PI)*(M_PI))*pow(t, 5)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 720*((M_PI)*(M_PI))*pow(t, 5)*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 480*M_PI*pow(t, 5)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) + 32000*M_PI*pow(t, 5)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 300000*M_PI*pow(t, 5)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 9600*M_PI*pow(t, 5)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 120000*M_PI*pow(t, 5)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 3600*((M_PI)*(M_PI))*pow(t, 5)*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) + 1440*((M_PI)*(M_PI))*pow(t, 5)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 1120*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) + 8000*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 300000*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 2500000*M_PI*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 288*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) - 3600*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) + 45000*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) - 720*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 27000*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*x))*(sin(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) + 2240*M_PI*pow(t, 4)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 12000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) - 300000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 1250000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 26400*M_PI*pow(t, 4)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 540000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 2250000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 320*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 14000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 225000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 1562500*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 8400*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 3) - 135000*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 3)*((cos(M_PI*y))*(cos(M_PI*y))) - 562500*M_PI*pow(t, 4)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 320*M_PI*pow(t, 4)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) - 16000*M_PI*pow(t, 4)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) - 300000*M_PI*pow(t, 4)*sin(M_PI*x)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) - 2500000*M_PI*pow(t, 4)*sin(M_PI*x)*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 16800*M_PI*pow(t, 4)*sin(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 360000*M_PI*pow(t, 4)*sin(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 2250000*M_PI*pow(t, 4)*sin(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) - 288*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 3600*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 45000*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 720*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 27000*((M_PI)*(M_PI))*pow(t, 4)*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 1120*M_PI*pow(t, 4)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 8000*M_PI*pow(t, 4)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 300000*M_PI*pow(t, 4)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 2500000*M_PI*pow(t, 4)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 13200*M_PI*pow(t, 4)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 360000*M_PI*pow(t, 4)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 2250000*M_PI*pow(t, 4)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 288*((M_PI)*(M_PI))*pow(t, 4)*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) + 3600*((M_PI)*(M_PI))*pow(t, 4)*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) - 45000*((M_PI)*(M_PI))*pow(t, 4)*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) + 1440*((M_PI)*(M_PI))*pow(t, 4)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 54000*((M_PI)*(M_PI))*pow(t, 4)*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) - 320*pow(t, 4)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 2200*((M_PI)*(M_PI))*pow(t, 4)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 1280*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) + 48000*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 450000*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 7812500*M_PI*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(M_PI*y) - 7200*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) - 90000*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) + 187500*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) + 1440*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 337500*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*x))*(sin(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 2560*M_PI*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 72000*M_PI*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) + 450000*M_PI*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 9600*M_PI*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 450000*M_PI*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 4500000*M_PI*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 9375000*M_PI*pow(t, 3)*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*y) - 320*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 3906250*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x) - 9600*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 3) - 180000*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 3)*((cos(M_PI*y))*(cos(M_PI*y))) - 1125000*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 2343750*M_PI*pow(t, 3)*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x) + 320*M_PI*pow(t, 3)*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) - 7812500*M_PI*pow(t, 3)*sin(M_PI*x)*cos(M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 19200*M_PI*pow(t, 3)*sin(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 480000*M_PI*pow(t, 3)*sin(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 4500000*M_PI*pow(t, 3)*sin(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 18750000*M_PI*pow(t, 3)*sin(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) - 7200*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 90000*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 187500*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(M_PI*y) + 1440*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 337500*((M_PI)*(M_PI))*pow(t, 3)*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*cos(M_PI*y) - 1280*M_PI*pow(t, 3)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 48000*M_PI*pow(t, 3)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 450000*M_PI*pow(t, 3)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 7812500*M_PI*pow(t, 3)*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(M_PI*y) - 4800*M_PI*pow(t, 3)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 300000*M_PI*pow(t, 3)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 4500000*M_PI*pow(t, 3)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 18750000*M_PI*pow(t, 3)*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 7200*((M_PI)*(M_PI))*pow(t, 3)*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) + 90000*((M_PI)*(M_PI))*pow(t, 3)*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) - 187500*((M_PI)*(M_PI))*pow(t, 3)*pow(cos(M_PI*x), 3)*pow(cos(M_PI*y), 3) - 2880*((M_PI)*(M_PI))*pow(t, 3)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 675000*((M_PI)*(M_PI))*pow(t, 3)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 960*pow(t, 3)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 4400*((M_PI)*(M_PI))*pow(t, 3)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 14000*pow(t, 3)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 82500*((M_PI)*(M_PI))*pow(t, 3)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 1200*pow(t, 3)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 16000*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 450000*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 3750000*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 7812500*M_PI*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(M_PI*y) + 288*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) + 7200*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) - 562500*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) + 1440*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 54000*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) + 337500*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 1406250*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*x))*(sin(M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 24000*M_PI*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) + 450000*M_PI*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 1875000*M_PI*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 9600*M_PI*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 90000*M_PI*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 1125000*M_PI*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 9375000*M_PI*((t)*(t))*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*y) - 960*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 14000*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 3906250*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x) - 8400*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 3) - 180000*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 3)*((cos(M_PI*y))*(cos(M_PI*y))) - 1125000*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 2343750*M_PI*((t)*(t))*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x) + 960*M_PI*((t)*(t))*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) + 16000*M_PI*((t)*(t))*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 7812500*M_PI*((t)*(t))*sin(M_PI*x)*cos(M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 16800*M_PI*((t)*(t))*sin(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 480000*M_PI*((t)*(t))*sin(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 4500000*M_PI*((t)*(t))*sin(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 18750000*M_PI*((t)*(t))*sin(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 58593750*M_PI*((t)*(t))*sin(M_PI*x)*cos(2*M_PI*y) + 288*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 7200*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 562500*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(M_PI*y) + 1440*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 54000*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 337500*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*cos(M_PI*y) - 1406250*((M_PI)*(M_PI))*((t)*(t))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x))) - 16000*M_PI*((t)*(t))*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 450000*M_PI*((t)*(t))*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 3750000*M_PI*((t)*(t))*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 7812500*M_PI*((t)*(t))*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(M_PI*y) + 4800*M_PI*((t)*(t))*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 60000*M_PI*((t)*(t))*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 1125000*M_PI*((t)*(t))*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 18750000*M_PI*((t)*(t))*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 58593750*M_PI*((t)*(t))*sin(M_PI*y)*cos(M_PI*x) - 288*((M_PI)*(M_PI))*((t)*(t))*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) - 7200*((M_PI)*(M_PI))*((t)*(t))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) + 562500*((M_PI)*(M_PI))*((t)*(t))*pow(cos(M_PI*x), 3)*pow(cos(M_PI*y), 3) - 2880*((M_PI)*(M_PI))*((t)*(t))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 108000*((M_PI)*(M_PI))*((t)*(t))*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) - 675000*((M_PI)*(M_PI))*((t)*(t))*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 2812500*((M_PI)*(M_PI))*((t)*(t))*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 960*((t)*(t))*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 30000*((t)*(t))*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 82500*((M_PI)*(M_PI))*((t)*(t))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 225000*((t)*(t))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 1031250*((M_PI)*(M_PI))*((t)*(t))*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 3600*((t)*(t))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 45000*((t)*(t))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 480*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 16000*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 150000*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 3906250*M_PI*t*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(M_PI*y) + 3600*((M_PI)*(M_PI))*t*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) + 90000*((M_PI)*(M_PI))*t*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) + 562500*((M_PI)*(M_PI))*t*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) - 720*((M_PI)*(M_PI))*t*((sin(M_PI*x))*(sin(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 337500*((M_PI)*(M_PI))*t*((sin(M_PI*x))*(sin(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 2812500*((M_PI)*(M_PI))*t*((sin(M_PI*x))*(sin(M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 960*M_PI*t*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 24000*M_PI*t*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) - 150000*M_PI*t*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 9600*M_PI*t*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 270000*M_PI*t*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 2250000*M_PI*t*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 4687500*M_PI*t*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*y) - 960*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 28000*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 225000*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 3906250*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x) - 4800*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 3) - 135000*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 3)*((cos(M_PI*y))*(cos(M_PI*y))) - 1125000*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 2343750*M_PI*t*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x) + 960*M_PI*t*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) + 32000*M_PI*t*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 300000*M_PI*t*sin(M_PI*x)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) - 7812500*M_PI*t*sin(M_PI*x)*cos(M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 9600*M_PI*t*sin(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 360000*M_PI*t*sin(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 4500000*M_PI*t*sin(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 18750000*M_PI*t*sin(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 3600*((M_PI)*(M_PI))*t*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 90000*((M_PI)*(M_PI))*t*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 562500*((M_PI)*(M_PI))*t*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(M_PI*y) - 720*((M_PI)*(M_PI))*t*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 337500*((M_PI)*(M_PI))*t*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*cos(M_PI*y) + 2812500*((M_PI)*(M_PI))*t*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x))) + 480*M_PI*t*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) + 16000*M_PI*t*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 150000*M_PI*t*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 3906250*M_PI*t*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(M_PI*y) + 4800*M_PI*t*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 180000*M_PI*t*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 2250000*M_PI*t*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 9375000*M_PI*t*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 3600*((M_PI)*(M_PI))*t*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) - 90000*((M_PI)*(M_PI))*t*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) - 562500*((M_PI)*(M_PI))*t*pow(cos(M_PI*x), 3)*pow(cos(M_PI*y), 3) + 1440*((M_PI)*(M_PI))*t*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 675000*((M_PI)*(M_PI))*t*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 5625000*((M_PI)*(M_PI))*t*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 320*t*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 18000*t*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 4400*((M_PI)*(M_PI))*t*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 300000*t*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 82500*((M_PI)*(M_PI))*t*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 1562500*t*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 4296875*((M_PI)*(M_PI))*t*cos(M_PI*x)*cos(M_PI*y) + 3600*t*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 90000*t*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 562500*t*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 160*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) - 8000*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 150000*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 1250000*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 3906250*M_PI*((sin(M_PI*x))*(sin(M_PI*x)))*sin(M_PI*y)*cos(M_PI*y) - 96*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) - 3600*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) - 45000*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) - 187500*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(M_PI*x)*pow(cos(M_PI*y), 3) - 720*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 27000*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) - 337500*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 1406250*((M_PI)*(M_PI))*((sin(M_PI*x))*(sin(M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 320*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) - 12000*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) - 150000*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) - 625000*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 2400*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 90000*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 1125000*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 4687500*M_PI*sin(M_PI*x)*sin(2*M_PI*x)*sin(M_PI*y)*cos(M_PI*y) - 320*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) - 14000*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 225000*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 1562500*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) - 3906250*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(M_PI*x) - 1200*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 3) - 45000*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*pow(cos(2*M_PI*x), 3)*((cos(M_PI*y))*(cos(M_PI*y))) - 562500*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*cos(M_PI*y) - 2343750*M_PI*sin(M_PI*x)*sin(M_PI*y)*sin(2*M_PI*y)*cos(2*M_PI*x) + 320*M_PI*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5)*cos(2*M_PI*y) + 16000*M_PI*sin(M_PI*x)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 300000*M_PI*sin(M_PI*x)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 2500000*M_PI*sin(M_PI*x)*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 7812500*M_PI*sin(M_PI*x)*cos(M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 2400*M_PI*sin(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4)*cos(2*M_PI*y) + 120000*M_PI*sin(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3)*cos(2*M_PI*y) + 2250000*M_PI*sin(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y)))*cos(2*M_PI*y) + 18750000*M_PI*sin(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y)*cos(2*M_PI*y) + 58593750*M_PI*sin(M_PI*x)*cos(2*M_PI*y) - 96*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 3600*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 45000*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 187500*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*pow(cos(M_PI*x), 3)*cos(M_PI*y) - 720*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) - 27000*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 337500*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*cos(M_PI*y) - 1406250*((M_PI)*(M_PI))*((sin(M_PI*y))*(sin(M_PI*y)))*((cos(M_PI*x))*(cos(M_PI*x))) + 160*M_PI*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 5) + 8000*M_PI*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 150000*M_PI*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 1250000*M_PI*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 3906250*M_PI*sin(M_PI*y)*((cos(M_PI*x))*(cos(M_PI*x)))*cos(M_PI*y) + 1200*M_PI*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 60000*M_PI*sin(M_PI*y)*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 1125000*M_PI*sin(M_PI*y)*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 9375000*M_PI*sin(M_PI*y)*cos(M_PI*x)*cos(2*M_PI*x)*cos(M_PI*y) + 29296875*M_PI*sin(M_PI*y)*cos(M_PI*x) + 96*((M_PI)*(M_PI))*pow(cos(M_PI*x), 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 6) + 3600*((M_PI)*(M_PI))*pow(cos(M_PI*x), 3)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 5) + 45000*((M_PI)*(M_PI))*pow(cos(M_PI*x), 3)*cos(2*M_PI*x)*pow(cos(M_PI*y), 4) + 187500*((M_PI)*(M_PI))*pow(cos(M_PI*x), 3)*pow(cos(M_PI*y), 3) + 1440*((M_PI)*(M_PI))*((cos(M_PI*x))*(cos(M_PI*x)))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 5) + 54000*((M_PI)*(M_PI))*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 4) + 675000*((M_PI)*(M_PI))*((cos(M_PI*x))*(cos(M_PI*x)))*cos(2*M_PI*x)*pow(cos(M_PI*y), 3) + 2812500*((M_PI)*(M_PI))*((cos(M_PI*x))*(cos(M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) - 2000*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) + 2200*((M_PI)*(M_PI))*cos(M_PI*x)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 4) - 75000*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) + 82500*((M_PI)*(M_PI))*cos(M_PI*x)*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*pow(cos(M_PI*y), 3) - 937500*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) + 1031250*((M_PI)*(M_PI))*cos(M_PI*x)*cos(2*M_PI*x)*((cos(M_PI*y))*(cos(M_PI*y))) - 3906250*cos(M_PI*x)*cos(M_PI*y) + 4296875*((M_PI)*(M_PI))*cos(M_PI*x)*cos(M_PI*y) + 1200*pow(cos(2*M_PI*x), 4)*pow(cos(M_PI*y), 4) + 45000*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 562500*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 2343750*cos(2*M_PI*x)*cos(M_PI*y))/(16000*pow(t, 3)*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 48000*((t)*(t))*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 600000*((t)*(t))*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 48000*t*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 1200000*t*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 7500000*t*cos(2*M_PI*x)*cos(M_PI*y) + 16000*pow(cos(2*M_PI*x), 3)*pow(cos(M_PI*y), 3) + 600000*((cos(2*M_PI*x))*(cos(2*M_PI*x)))*((cos(M_PI*y))*(cos(M_PI*y))) + 7500000*cos(2*M_PI*x)*cos(M_PI*y) + 31250000);
}

}  // namespace chns
