#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>

#include "lcft/lngamma.hpp"
#include "lcft/quadrature.hpp"
#include "lcft/types.hpp"

namespace lcft {

// Pole lattice of Gamma_{gamma/2} (= pole lattice of S_{gamma/2}) and the
// zero lattice of S_{gamma/2}:
//   GammaPole, SinePole:  x = -n*gamma/2 - 2m/gamma,   n,m >= 0
//   SineZero:             x = Q + n*gamma/2 + 2m/gamma
enum class LatticeKind { GammaPole, SinePole, SineZero };

struct LatticePoint {
    long n = 0;
    long m = 0;
    double distance = 0.0;
};

inline std::optional<LatticePoint> lattice_query(LatticeKind kind, Complex x,
                                                 const LiouvilleParams& p,
                                                 double delta) {
    if (!(delta > 0.0))
        throw Error(ErrorKind::DomainError, "lattice_query: delta must be > 0");
    if (std::abs(x.imag()) > delta) return std::nullopt;
    const double a = p.gamma / 2.0, b = 2.0 / p.gamma;
    // Re coordinate of the lattice point relative to its seed direction.
    double target;
    if (kind == LatticeKind::SineZero) {
        target = x.real() - p.Q();           // = n*a + m*b
    } else {
        target = -x.real();                  // = n*a + m*b
    }
    if (target < -delta) return std::nullopt;

    const double reach = std::abs(x) + p.Q() + delta;
    const long n_max = static_cast<long>(reach / a) + 1;
    const long m_max = static_cast<long>(reach / b) + 1;

    std::optional<LatticePoint> best;
    for (long n = 0; n <= n_max; ++n) {
        const double rem = target - static_cast<double>(n) * a;
        // closest m for this n
        long m0 = static_cast<long>(std::floor(rem / b));
        for (long m = m0; m <= m0 + 1; ++m) {
            if (m < 0 || m > m_max) continue;
            const double re_lat = static_cast<double>(n) * a + static_cast<double>(m) * b;
            const double d = std::hypot(target - re_lat, x.imag());
            if (d <= delta && (!best || d < best->distance))
                best = LatticePoint{n, m, d};
        }
    }
    return best;
}

namespace detail {

// Proximity guard used by all public special-function entry points.
inline constexpr double kPoleGuard = 1e-9;

inline void guard_pole(LatticeKind kind, Complex x, const LiouvilleParams& p,
                       const char* who) {
    if (auto hit = lattice_query(kind, x, p, kPoleGuard))
        throw Error(ErrorKind::PoleEncountered, who, x, hit->n, hit->m);
}

// exp(z) - 1 without cancellation for small |z|.
inline Complex cexpm1(Complex z) {
    if (std::abs(z) > 0.5) return std::exp(z) - 1.0;
    Complex term = z, sum = z;
    for (int k = 2; k < 24; ++k) {
        term *= z / static_cast<double>(k);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

// Integrand of the defining integral for log Gamma_{gamma/2}, divided form
// [ (e^{-xt}-e^{-Qt/2}) / ((1-e^{-t gamma/2})(1-e^{-2t/gamma}))
//   - (Q/2-x)^2/2 e^{-t} + (x-Q/2)/t ] / t.
// The difference in the numerator is taken through expm1 so the remaining
// cancellation (against the u/t term) is the only noise source.
inline Complex dg_bracket_over_t(Complex x, double t, double a, double Q) {
    const double ea = -std::expm1(-a * t);      // 1 - e^{-at}
    const double eb = -std::expm1(-t / a);      // 1 - e^{-t/a},  2/gamma = 1/a
    const Complex u = x - Q / 2.0;
    const Complex diff = std::exp(-Q * t / 2.0) * cexpm1(-u * t);
    return (diff / (ea * eb) - 0.5 * u * u * std::exp(-t) + u / t) / t;
}

// Taylor expansion of the integrand about t = 0 (the constant term of the
// bracket cancels; everything is regular).  u = x - Q/2, a = gamma/2.
inline Complex dg_smallt_integral(Complex x, double t0, double a, double Q) {
    const Complex u = x - Q / 2.0;
    const Complex u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u4 * u2;
    const double a2 = a * a, a4 = a2 * a2, a6 = a4 * a2, a8 = a4 * a4;
    const double a10 = a8 * a2, a12 = a8 * a4;
    const Complex c0 = u * (a4 + 1.0 + 12.0 * a2 * u - 4.0 * a2 * u2) / (24.0 * a2);
    const Complex c1 = u2 * (-a4 + 2.0 * a2 * u2 - 12.0 * a2 - 1.0) / (48.0 * a2);
    const Complex c2 = -u *
                       (7.0 * a8 - 40.0 * a6 * u2 + 48.0 * a4 * u4 -
                        480.0 * a4 * u + 10.0 * a4 - 40.0 * a2 * u2 + 7.0) /
                       (5760.0 * a4);
    const Complex c3 = u2 *
                       (7.0 * a8 - 20.0 * a6 * u2 + 16.0 * a4 * u4 -
                        230.0 * a4 - 20.0 * a2 * u2 + 7.0) /
                       (11520.0 * a4);
    const Complex c4 = -u *
                       (-31.0 * a12 + 196.0 * a10 * u2 - 336.0 * a8 * u4 -
                        49.0 * a8 + 192.0 * a6 * u6 + 280.0 * a6 * u2 -
                        4032.0 * a6 * u - 336.0 * a4 * u4 - 49.0 * a4 +
                        196.0 * a2 * u2 - 31.0) /
                       (967680.0 * a6);
    const double t2 = t0 * t0;
    return c0 * t0 + c1 * t2 / 2.0 + c2 * t2 * t0 / 3.0 + c3 * t2 * t2 / 4.0 +
           c4 * t2 * t2 * t0 / 5.0;
}

// Defining integral, valid when Re x is inside the evaluation window.
inline Complex dg_window_integral(Complex x, const LiouvilleParams& p) {
    const double a = p.gamma / 2.0;
    const double Q = p.Q();
    const double t0 = 1e-3;
    const double rate = std::min({x.real(), Q / 2.0, 1.0});
    const double T = 38.0 / rate;
    // abs_tol sits just above the cancellation noise floor of the integrand
    // near t0 (~|u| * 1e-16 / t0 integrated).
    QuadSettings s;
    s.rel_tol = 1e-12;
    s.abs_tol = 3e-13 * std::max(1.0, std::abs(x - Q / 2.0));
    s.max_subdivisions = 20000;
    Complex main{0.0, 0.0};
    // Piecewise to keep the adaptive bisection local.
    const double cuts[] = {t0, 1.0, 4.0, 12.0, T};
    for (int i = 0; i + 1 < 5; ++i) {
        if (cuts[i] >= T) break;
        const double hi = std::min(cuts[i + 1], T);
        main += integrate_real(
            [&](double t) { return dg_bracket_over_t(x, t, a, Q); }, cuts[i], hi, s);
    }
    // Exact tail of the (x-Q/2)/t^2 term; the exponential pieces are below
    // 1e-16 at T by construction.
    const Complex tail = (x - Q / 2.0) / T;
    return dg_smallt_integral(x, t0, a, Q) + main + tail;
}

}  // namespace detail

// log Gamma_{gamma/2}(x).  Only exp(result) is contractual; the branch may
// differ by multiples of 2*pi*i between shift paths.
inline Complex log_double_gamma(Complex x, const LiouvilleParams& p) {
    if (!is_finite(x))
        throw Error(ErrorKind::DomainError, "log_double_gamma: non-finite x");
    detail::guard_pole(LatticeKind::GammaPole, x, p, "double Gamma pole");

    const double g = p.gamma;
    const double Q = p.Q();
    const double lo = Q / 2.0 - g / 4.0;
    const double hi = Q / 2.0 + std::max(g / 4.0, 1.0 / g);
    constexpr double half_log_2pi = 0.91893853320467274178;
    const double log_half_gamma = std::log(g / 2.0);

    Complex corr{0.0, 0.0};
    // Raise Re x into the window.  log G(x) = log G(x + step) + up(x).
    auto up_small = [&](Complex z) {  // step gamma/2 via Gamma(g z / 2)
        return -half_log_2pi + lngamma(g * z / 2.0) +
               (-g * z / 2.0 + 0.5) * log_half_gamma;
    };
    auto up_big = [&](Complex z) {  // step 2/gamma via Gamma(2 z / gamma)
        return -half_log_2pi + lngamma(2.0 * z / g) +
               (2.0 * z / g - 0.5) * log_half_gamma;
    };
    int safety = 0;
    while (x.real() < lo) {
        if (++safety > 100000)
            throw Error(ErrorKind::DomainError, "shift sequence did not converge");
        if (lo - x.real() >= 2.0 / g) {
            corr += up_big(x);
            x += 2.0 / g;
        } else {
            corr += up_small(x);
            x += g / 2.0;
        }
    }
    while (x.real() > hi) {
        if (++safety > 100000)
            throw Error(ErrorKind::DomainError, "shift sequence did not converge");
        if (x.real() - hi >= 2.0 / g) {
            x -= 2.0 / g;
            corr -= up_big(x);
        } else {
            x -= g / 2.0;
            corr -= up_small(x);
        }
    }
    return corr + detail::dg_window_integral(x, p);
}

inline Complex double_gamma(Complex x, const LiouvilleParams& p) {
    return std::exp(log_double_gamma(x, p));
}

namespace detail {

// Above this |Im x| the correction to the quadratic asymptotic of
// log S_{gamma/2} is below ~1e-13 and the closed form is used directly.
inline double sine_asymptotic_height(const LiouvilleParams& p) {
    constexpr double pi = 3.14159265358979323846;
    return std::max(10.0, 32.0 / (pi * p.gamma));
}

}  // namespace detail

// log S_{gamma/2}(x), S = Gamma_{g/2}(x) / Gamma_{g/2}(Q-x).  At a zero of S
// the log is -inf (the exponentiated wrapper yields exact 0).
inline Complex log_double_sine(Complex x, const LiouvilleParams& p) {
    if (!is_finite(x))
        throw Error(ErrorKind::DomainError, "log_double_sine: non-finite x");
    detail::guard_pole(LatticeKind::SinePole, x, p, "double sine pole");
    if (lattice_query(LatticeKind::SineZero, x, p, detail::kPoleGuard))
        return Complex(-std::numeric_limits<double>::infinity(), 0.0);

    const double Q = p.Q();
    const double y = x.imag();
    const double y_asym = detail::sine_asymptotic_height(p);
    if (std::abs(y) >= y_asym) {
        constexpr double pi = 3.14159265358979323846;
        const double s = (y > 0.0) ? 1.0 : -1.0;
        const Complex quad = Complex(0.0, -s * pi / 2.0) * x * (x - Q);
        return quad + Complex(0.0, -s * pi / 12.0 * (Q * Q + 1.0));
    }
    return log_double_gamma(x, p) - log_double_gamma(Q - x, p);
}

inline Complex double_sine(Complex x, const LiouvilleParams& p) {
    const Complex L = log_double_sine(x, p);
    if (L.real() == -std::numeric_limits<double>::infinity()) return {0.0, 0.0};
    return std::exp(L);
}

}  // namespace lcft
