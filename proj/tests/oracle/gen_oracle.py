#!/usr/bin/env python3
"""Generates frozen multiprecision oracle values for the test suite.

The double-Gamma oracle integrates the defining integral
    log G(x) = int_0^inf dt/t [ (e^{-xt} - e^{-Qt/2}) /
               ((1-e^{-t g/2})(1-e^{-2t/g})) - (Q/2-x)^2/2 e^{-t} + (x-Q/2)/t ]
with mpmath tanh-sinh quadrature at 50 digits.  The only non-quadrature
ingredients are (a) an exact symbolic Taylor expansion of the integrand on
[0, t0] (sympy, rational arithmetic) and (b) the closed-form tail of the
(x-Q/2)/t^2 term.  No shift equations are used, which keeps this oracle
independent of the evaluation strategy in the library.

Run from the repository root:
    python3 tests/oracle/gen_oracle.py > tests/oracle/oracle_values.hpp
"""

import sys

import sympy as sp
from mpmath import mp, mpf, mpc, exp, e1, quad, gamma, hyp2f1, pi, mpmathify

mp.dps = 50

T0 = mpf("1e-4")
SERIES_ORDER = 12


T_SYM, U_SYM = sp.symbols("t u")
A_SYM = sp.symbols("a", positive=True)


def series_coefficients():
    """Exact Taylor coefficients of the integrand about t=0, as polynomials
    in u = x - Q/2 with coefficients rational in a = gamma/2."""
    t, u, a = T_SYM, U_SYM, A_SYM
    b = 1 / a
    Q = a + b
    x = u + Q / 2
    D = 1 / ((1 - sp.exp(-a * t)) * (1 - sp.exp(-b * t)))
    bracket = (sp.exp(-x * t) - sp.exp(-Q * t / 2)) * D \
        - (Q / 2 - x) ** 2 / 2 * sp.exp(-t) + (x - Q / 2) / t
    f = sp.series(bracket / t, t, 0, SERIES_ORDER + 1).removeO()
    f = sp.expand(sp.simplify(f))
    coeffs = []
    for k in range(SERIES_ORDER + 1):
        coeffs.append(sp.Poly(sp.expand(f.coeff(t, k)), u))
    return coeffs


COEFFS = series_coefficients()
_COEFF_CACHE = {}


def numeric_coeffs(g):
    """Per-gamma numeric coefficient lists: [[c_{k,j} for u^j] for t^k]."""
    if g in _COEFF_CACHE:
        return _COEFF_CACHE[g]
    a_val = sp.Rational(str(g)) / 2
    rows = []
    for poly in COEFFS:
        terms = {}
        for mono, coef in zip(poly.monoms(), poly.coeffs()):
            v = sp.nsimplify(coef, rational=False).subs(A_SYM, a_val)
            terms[mono[0]] = mpmathify(str(sp.N(v, 60)))
        deg = max(terms) if terms else 0
        rows.append([terms.get(j, mpf(0)) for j in range(deg + 1)])
    _COEFF_CACHE[g] = rows
    return rows


def log_double_gamma_oracle(x, g):
    g = mpf(g)
    a = g / 2
    Q = a + 2 / g
    x = mpc(x)
    assert x.real > mpf("0.1"), "oracle only evaluates right of the pole region"

    def integrand(t):
        ea = 1 - exp(-a * t)
        eb = 1 - exp(-2 * t / g)
        diff = exp(-x * t) - exp(-Q * t / 2)
        u = x - Q / 2
        return (diff / (ea * eb) - u * u / 2 * exp(-t) + u / t) / t

    T = 130 / min(x.real, Q / 2, mpf(1))
    main = quad(integrand, [T0, mpf("0.1"), 1, 5, 20, 80, T])
    tail = (x - Q / 2) / T + (Q / 2 - x) ** 2 / 2 * e1(T)

    # series part on [0, t0], exact coefficients evaluated at this (a, u)
    u_val = x - Q / 2
    acc = mpc(0)
    for k, row in enumerate(numeric_coeffs(str(g))):
        c = mpc(0)
        for j in range(len(row) - 1, -1, -1):
            c = c * u_val + row[j]
        acc += c * T0 ** (k + 1) / (k + 1)
    return acc + main + tail


def self_check():
    for g in ("0.7", "1.1", "1.7"):
        gg = mpf(g)
        Q = gg / 2 + 2 / gg
        v = log_double_gamma_oracle(Q / 2, g)
        assert abs(v) < mpf("1e-40"), (g, v)
    # shift equation residual at a complex point
    g = mpf("1.1")
    Q = g / 2 + 2 / g
    x = mpc("0.83", "0.37")
    lhs = log_double_gamma_oracle(x, "1.1") - log_double_gamma_oracle(x + g / 2, "1.1")
    rhs = -mp.log(2 * pi) / 2 + mp.log(gamma(g * x / 2)) + (-g * x / 2 + mpf("0.5")) * mp.log(g / 2)
    assert abs(exp(lhs) - exp(rhs)) < mpf("1e-40"), abs(exp(lhs) - exp(rhs))


def fmt(v):
    return mp.nstr(v, 17, strip_zeros=False)


def emit_double_gamma(out):
    cases = []
    pts = {
        "0.7": ["0.5", "1.2", ("0.8", "0.3"), ("0.45", "-1.1"), "2.1", ("1.9", "0.9"), ("0.25", "0.15")],
        "1.1": ["0.5", "1.3", ("0.8", "0.3"), ("0.6", "-0.7"), "1.9", ("1.5", "1.4"), ("0.3", "0.05")],
        "1.7": ["0.5", "1.05", ("0.8", "0.3"), ("0.9", "-0.45"), "1.6", ("1.2", "0.75"), ("0.35", "-0.2")],
        "1.0": [("0.8", "0.3")],
    }
    for g, xs in pts.items():
        for x in xs:
            z = mpc(x) if isinstance(x, str) else mpc(x[0], x[1])
            val = exp(log_double_gamma_oracle(z, g))
            cases.append((g, z, val))
    out.append("struct DoubleGammaOracle { double gamma, x_re, x_im, val_re, val_im; };")
    out.append("inline constexpr DoubleGammaOracle kDoubleGammaOracle[] = {")
    for g, z, val in cases:
        out.append("    {%s, %s, %s, %s, %s}," % (g, fmt(z.real), fmt(z.imag), fmt(val.real), fmt(val.imag)))
    out.append("};")
    out.append("")


def emit_hyp2f1(out):
    cases = [
        ((mpf("0.37"), mpf("1.22"), mpf("2.41")), mpf("0.7")),
        ((mpf("-0.8"), mpf("2.3"), mpf("1.15")), mpf("0.7")),
        ((mpc("0.4", "0.3"), mpc("1.1", "-0.2"), mpc("1.7", "0.1")), mpf("0.7")),
        ((mpf("0.37"), mpf("1.22"), mpf("2.41")), mpf("-3.5")),
        ((mpc("0.4", "0.3"), mpc("1.1", "-0.2"), mpc("1.7", "0.1")), mpf("-3.5")),
        ((mpf("0.37"), mpf("1.22"), mpf("2.41")), mpf("-0.8")),
        ((mpf("0.9"), mpf("0.35"), mpf("1.61")), mpf("0.31")),
    ]
    out.append("struct Hyp2f1Oracle { double a_re, a_im, b_re, b_im, c_re, c_im, t, val_re, val_im; };")
    out.append("inline constexpr Hyp2f1Oracle kHyp2f1Oracle[] = {")
    for (A, B, C), t in cases:
        v = hyp2f1(A, B, C, t)
        A, B, C = mpc(A), mpc(B), mpc(C)
        out.append("    {%s, %s, %s, %s, %s, %s, %s, %s, %s}," %
                   (fmt(A.real), fmt(A.imag), fmt(B.real), fmt(B.imag),
                    fmt(C.real), fmt(C.imag), fmt(t), fmt(mpc(v).real), fmt(mpc(v).imag)))
    out.append("};")
    out.append("")


def emit_connection(out):
    A, B, C = mpf("0.3"), mpf("0.7"), mpf("1.4")
    m01 = [
        gamma(C) * gamma(C - A - B) / (gamma(C - A) * gamma(C - B)),
        gamma(2 - C) * gamma(C - A - B) / (gamma(1 - A) * gamma(1 - B)),
        gamma(C) * gamma(A + B - C) / (gamma(A) * gamma(B)),
        gamma(2 - C) * gamma(A + B - C) / (gamma(A - C + 1) * gamma(B - C + 1)),
    ]
    m0inf = [
        gamma(1 - C) * gamma(A - B + 1) / (gamma(A - C + 1) * gamma(1 - B)),
        gamma(1 - C) * gamma(B - A + 1) / (gamma(B - C + 1) * gamma(1 - A)),
        gamma(C - 1) * gamma(A - B + 1) / (gamma(A) * gamma(C - B)),
        gamma(C - 1) * gamma(B - A + 1) / (gamma(B) * gamma(C - A)),
    ]
    out.append("// connection matrices at (A,B,C) = (0.3, 0.7, 1.4), row-major")
    out.append("inline constexpr double kConn01[8] = {")
    out.append("    " + ", ".join("%s, 0.0" % fmt(v) for v in m01))
    out.append("};")
    out.append("inline constexpr double kConn0Inf[8] = {")
    out.append("    " + ", ".join("%s, 0.0" % fmt(v) for v in m0inf))
    out.append("};")
    out.append("")


def emit_misc(out):
    rows = []
    for g in ("0.7", "1.7"):
        gg = mpf(g)
        uv = pi * (gg / 2) ** (2 - gg ** 2 / 2) * gamma(gg ** 2 / 4) / gamma(1 - gg ** 2 / 4)
        rows.append((g, uv))
    out.append("struct UnitVolumeOracle { double gamma, value; };")
    out.append("inline constexpr UnitVolumeOracle kUnitVolumeOracle[] = {")
    for g, uv in rows:
        out.append("    {%s, %s}," % (g, fmt(uv)))
    out.append("};")
    out.append("")
    # ordinary Gamma at a purely imaginary argument (modular-kernel prefactor case)
    gp = gamma(mpc(0, 2 * mpf("0.8") / mpf("1.2")))
    out.append("// Gamma(2*i*0.8/1.2)")
    out.append("inline constexpr double kGammaImag_re = %s;" % fmt(gp.real))
    out.append("inline constexpr double kGammaImag_im = %s;" % fmt(gp.imag))
    out.append("")


def main():
    self_check()
    out = []
    out.append("// GENERATED by tests/oracle/gen_oracle.py -- do not edit by hand.")
    out.append("// Frozen multiprecision reference values (mpmath, 50 digits).")
    out.append("#pragma once")
    out.append("")
    out.append("namespace lcft::oracle {")
    out.append("")
    emit_double_gamma(out)
    emit_hyp2f1(out)
    emit_connection(out)
    emit_misc(out)
    out.append("}  // namespace lcft::oracle")
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
