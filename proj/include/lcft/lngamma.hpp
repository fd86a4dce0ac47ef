#pragma once

#include <cmath>
#include <complex>

#include "lcft/errors.hpp"
#include "lcft/types.hpp"

namespace lcft {

namespace detail {

// Lanczos approximation, g = 7, 9 terms.  Accurate to ~1e-14 relative for
// Re z >= 0.5; the reflection formula covers the left half plane.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

inline Complex lngamma_lanczos(Complex z) {
    // valid for Re z >= 0.5
    const Complex zm1 = z - 1.0;
    Complex ser(kLanczos[0], 0.0);
    for (int i = 1; i < 9; ++i) ser += kLanczos[i] / (zm1 + static_cast<double>(i));
    const Complex t = zm1 + kLanczosG + 0.5;
    constexpr double half_log_2pi = 0.91893853320467274178;
    return half_log_2pi + (zm1 + 0.5) * std::log(t) - t + std::log(ser);
}

// log sin(pi z) with a branch continuous on each open half plane, via the
// exponential that stays bounded there.
inline Complex log_sin_pi(Complex z) {
    constexpr double pi = 3.14159265358979323846;
    constexpr double log2 = 0.69314718055994530942;
    if (z.imag() >= 0.0) {
        const Complex iw = Complex(0.0, 2.0 * pi) * z;
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        return Complex(0.0, -pi) * z + std::log(1.0 - std::exp(iw)) +
               Complex(-log2, pi / 2.0);
    }
    return std::conj(log_sin_pi(std::conj(z)));
}

}  // namespace detail

// Principal-style complex log-Gamma: exp(lngamma(z)) == Gamma(z), branch
// continuous away from the cut (-inf, 0].
inline Complex lngamma(Complex z) {
    if (!is_finite(z))
        throw Error(ErrorKind::DomainError, "lngamma: non-finite argument");
    if (z.real() >= 0.5) return detail::lngamma_lanczos(z);
    // Pole check: non-positive integers.
    const double rn = std::round(z.real());
    if (rn <= 0.0 && std::abs(z.real() - rn) < 1e-13 && std::abs(z.imag()) < 1e-13)
        throw Error(ErrorKind::PoleEncountered, "lngamma at a non-positive integer",
                    z, static_cast<long>(-rn), 0);
    constexpr double log_pi = 1.14472988584940017414;
    return log_pi - detail::log_sin_pi(z) - detail::lngamma_lanczos(1.0 - z);
}

inline Complex cgamma(Complex z) { return std::exp(lngamma(z)); }

}  // namespace lcft
