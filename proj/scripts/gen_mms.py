#!/usr/bin/env python3
"""Generate src/mms_forcing.cpp: manufactured solution and forcing terms.

The forcing is whatever is left over when the manufactured fields are pushed
through the continuous system (isothermal compressible flow with Korteweg
stress, gravity, and the convective Cahn-Hilliard equation with the quartic
potential and density-weighted fourth-order term).
"""

import sympy as sp
from sympy.printing.c import C99CodePrinter

x, y, t = sp.symbols("x y t", real=True)
gamma, Cp, eps, nu, lam, grav = sp.symbols("gamma Cp eps nu lambda_ g_", positive=False, real=True)

pi = sp.pi

rho = sp.Rational(5, 4) + sp.Rational(1, 10) * sp.cos(2 * pi * x) * sp.cos(pi * y) * (t + 1)
v1 = sp.sin(pi * x) * sp.sin(pi * y) * (1 - 2 * t**2)
v2 = sp.sin(pi * x) * sp.sin(2 * pi * y) * (1 + t**2)
c = sp.Rational(3, 4) + sp.Rational(1, 10) * sp.cos(pi * x) * sp.cos(pi * y) * (1 - t)

p = Cp * rho**gamma
m1 = rho * v1
m2 = rho * v2
q = rho * c

# mass
s_rho = sp.diff(rho, t) + sp.diff(m1, x) + sp.diff(m2, y)

# Korteweg force
cx, cy = sp.diff(c, x), sp.diff(c, y)
l2_x = eps * (sp.diff(cy**2, x) / 2 - sp.diff(cx**2, x) / 2 - sp.diff(cx * cy, y))
l2_y = eps * (sp.diff(cx**2, y) / 2 - sp.diff(cy**2, y) / 2 - sp.diff(cx * cy, x))

# viscous force
l4_x = (2 * nu + lam) * sp.diff(v1, x, 2) + nu * sp.diff(v1, y, 2) + (nu + lam) * sp.diff(v2, x, y)
l4_y = nu * sp.diff(v2, x, 2) + (2 * nu + lam) * sp.diff(v2, y, 2) + (nu + lam) * sp.diff(v1, x, y)

s_m1 = sp.diff(m1, t) + sp.diff(m1 * v1 + p, x) + sp.diff(m1 * v2, y) - l2_x - l4_x
s_m2 = sp.diff(m2, t) + sp.diff(m2 * v1, x) + sp.diff(m2 * v2 + p, y) - rho * grav - l2_y - l4_y

# order parameter: q_t + div(q v) = Lap(psi'(c)) - eps Lap(Lap(c)/rho)
psi_prime = c**3 - c
lap = lambda f: sp.diff(f, x, 2) + sp.diff(f, y, 2)
s_q = (sp.diff(q, t) + sp.diff(q * v1, x) + sp.diff(q * v2, y)
       - lap(psi_prime) + eps * lap(lap(c) / rho))


class Printer(C99CodePrinter):
    def _print_Pow(self, expr):
        if expr.exp == 2:
            b = self._print(expr.base)
            return f"(({b})*({b}))"
        return super()._print_Pow(expr)


printer = Printer()


def emit(name, expr, uses_par):
    expr = sp.simplify(expr) if expr.count_ops() < 200 else sp.cancel(sp.together(expr))
    body = printer.doprint(expr)
    args = "double x, double y, double t"
    pre = ""
    if uses_par:
        args += ", const ModelParams& par"
        fields = {gamma: "gamma", Cp: "Cp", eps: "eps", nu: "nu", lam: "lambda", grav: "g"}
        binds = [f"{printer.doprint(s)} = par.{m}" for s, m in fields.items()
                 if s in expr.free_symbols]
        if binds:
            pre = "    const double " + ", ".join(binds) + ";\n"
    return (f"double {name}({args}) {{\n{pre}    return {body};\n}}\n")


fns = [
    ("mms_rho", rho, False),
    ("mms_v1", v1, False),
    ("mms_v2", v2, False),
    ("mms_c", c, False),
    ("mms_s_rho", s_rho, False),
    ("mms_s_m1", s_m1, True),
    ("mms_s_m2", s_m2, True),
    ("mms_s_q", s_q, True),
]

out = [
    "// Generated by scripts/gen_mms.py; do not edit by hand.",
    "",
    '#include "chns/mms.hpp"',
    "",
    "#include <cmath>",
    "",
    "namespace chns {",
    "",
]
for name, expr, uses_par in fns:
    out.append(emit(name, expr, uses_par))
out.append("}  // namespace chns")

with open("src/mms_forcing.cpp", "w") as f:
    f.write("\n".join(out) + "\n")
print("wrote src/mms_forcing.cpp")
