#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "lcft/lngamma.hpp"
#include "lcft/types.hpp"

namespace lcft {

struct HypParams {
    Complex A, B, C;
};

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

namespace detail {

inline bool near_integer(Complex z, double tol = 1e-8) {
    return std::abs(z.imag()) < tol &&
           std::abs(z.real() - std::round(z.real())) < tol;
}

inline bool near_nonpos_integer(Complex z, double tol = 1e-8) {
    return near_integer(z, tol) && z.real() < 0.5;
}

// Gamma-ratio entry num0*num1/(den0*den1).  A pole in a denominator Gamma
// kills the entry; a pole in a numerator Gamma has no finite value and is
// reported as a degenerate connection.
inline Complex gamma_ratio_entry(Complex num0, Complex num1, Complex den0,
                                 Complex den1) {
    if (near_nonpos_integer(den0, 1e-12) || near_nonpos_integer(den1, 1e-12))
        return {0.0, 0.0};
    if (near_nonpos_integer(num0, 1e-12) || near_nonpos_integer(num1, 1e-12))
        throw Error(ErrorKind::DegenerateConnection,
                    "Gamma pole in a connection coefficient");
    return std::exp(lngamma(num0) + lngamma(num1) - lngamma(den0) - lngamma(den1));
}

inline Complex hyp_series(Complex A, Complex B, Complex C, double t) {
    if (near_nonpos_integer(C, 1e-12))
        throw Error(ErrorKind::PoleEncountered,
                    "2F1 series with C a non-positive integer", C);
    Complex term{1.0, 0.0}, sum{1.0, 0.0};
    for (int n = 0; n < 20000; ++n) {
        const double dn = static_cast<double>(n);
        term *= (A + dn) * (B + dn) / ((C + dn) * (dn + 1.0)) * t;
        sum += term;
        if (std::abs(term) < 1e-17 * (std::abs(sum) + 1.0)) return sum;
    }
    throw Error(ErrorKind::NonConvergent, "2F1 series did not converge");
}

}  // namespace detail

// Connection matrix mapping the t=0 basis coefficients (C1, C2+) to the
// t=1 basis coefficients (B1, B2-).
inline Matrix2 connection_matrix_01(const HypParams& h) {
    const Complex A = h.A, B = h.B, C = h.C;
    if (detail::near_integer(C) || detail::near_integer(C - A - B))
        throw Error(ErrorKind::DegenerateConnection,
                    "C or C-A-B within 1e-8 of an integer");
    Matrix2 M;
    M[0][0] = detail::gamma_ratio_entry(C, C - A - B, C - A, C - B);
    M[0][1] = detail::gamma_ratio_entry(2.0 - C, C - A - B, 1.0 - A, 1.0 - B);
    M[1][0] = detail::gamma_ratio_entry(C, A + B - C, A, B);
    M[1][1] = detail::gamma_ratio_entry(2.0 - C, A + B - C, A - C + 1.0, B - C + 1.0);
    return M;
}

// Connection matrix mapping the t=infinity basis (D1, D2+) to (C1, C2-).
inline Matrix2 connection_matrix_0inf(const HypParams& h) {
    const Complex A = h.A, B = h.B, C = h.C;
    if (detail::near_integer(C) || detail::near_integer(A - B))
        throw Error(ErrorKind::DegenerateConnection,
                    "C or A-B within 1e-8 of an integer");
    Matrix2 M;
    M[0][0] = detail::gamma_ratio_entry(1.0 - C, A - B + 1.0, A - C + 1.0, 1.0 - B);
    M[0][1] = detail::gamma_ratio_entry(1.0 - C, B - A + 1.0, B - C + 1.0, 1.0 - A);
    M[1][0] = detail::gamma_ratio_entry(C - 1.0, A - B + 1.0, A, C - B);
    M[1][1] = detail::gamma_ratio_entry(C - 1.0, B - A + 1.0, B, C - A);
    return M;
}

// Gauss hypergeometric function F(A,B;C;t) for real t < 1, complex
// parameters.  Series on |t| <= 1/2; the t -> 1-t connection on (1/2, 1);
// Pfaff on [-1, -1/2]; the t -> 1/t connection below -1.
inline Complex hyp2f1(const HypParams& h, double t) {
    const Complex A = h.A, B = h.B, C = h.C;
    if (!(t < 1.0))
        throw Error(ErrorKind::DomainError, "hyp2f1 requires t < 1");
    if (t == 0.0) return {1.0, 0.0};
    if (std::abs(t) <= 0.5) return detail::hyp_series(A, B, C, t);

    if (t > 0.5) {
        if (detail::near_integer(C - A - B))
            throw Error(ErrorKind::DegenerateConnection,
                        "C-A-B within 1e-8 of an integer");
        const Complex b1 = detail::gamma_ratio_entry(C, C - A - B, C - A, C - B);
        const Complex b2 = detail::gamma_ratio_entry(C, A + B - C, A, B);
        const double s = 1.0 - t;
        return b1 * detail::hyp_series(A, B, A + B - C + 1.0, s) +
               b2 * std::pow(Complex(s, 0.0), C - A - B) *
                   detail::hyp_series(C - A, C - B, C - A - B + 1.0, s);
    }
    if (t >= -1.0) {
        // Pfaff: F(A,B;C;t) = (1-t)^{-A} F(A, C-B; C; t/(t-1))
        const double w = t / (t - 1.0);
        return std::pow(Complex(1.0 - t, 0.0), -A) * hyp2f1({A, C - B, C}, w);
    }
    if (detail::near_integer(A - B))
        throw Error(ErrorKind::DegenerateConnection,
                    "A-B within 1e-8 of an integer");
    const Complex d1 = detail::gamma_ratio_entry(C, B - A, B, C - A);
    const Complex d2 = detail::gamma_ratio_entry(C, A - B, A, C - B);
    const double w = 1.0 / t;
    return d1 * std::pow(Complex(-t, 0.0), -A) * hyp2f1({A, A - C + 1.0, A - B + 1.0}, w) +
           d2 * std::pow(Complex(-t, 0.0), -B) * hyp2f1({B, B - C + 1.0, B - A + 1.0}, w);
}

// Derivative dF/dt = (AB/C) F(A+1,B+1;C+1;t).
inline Complex hyp2f1_deriv(const HypParams& h, double t) {
    return h.A * h.B / h.C * hyp2f1({h.A + 1.0, h.B + 1.0, h.C + 1.0}, t);
}

}  // namespace lcft
