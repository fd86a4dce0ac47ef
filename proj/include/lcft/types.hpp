#pragma once

#include <cmath>
#include <complex>

#include "lcft/errors.hpp"

namespace lcft {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Coupling gamma in (0,2) and the background charge Q = gamma/2 + 2/gamma.
struct LiouvilleParams {
    double gamma;
    double q_charge;

    explicit LiouvilleParams(double g) : gamma(g), q_charge(g / 2.0 + 2.0 / g) {
        if (!(g > 0.0) || !(g < 2.0) || !std::isfinite(g))
            throw Error(ErrorKind::DomainError,
                        "gamma must lie in the open interval (0,2)");
    }

    double Q() const noexcept { return q_charge; }
};

struct QuadSettings {
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    int max_subdivisions = 4000;
};

// Parameter bundles for the structure constants.

struct ThreePointArgs {
    Complex beta1, beta2, beta3;
    Complex sigma1, sigma2, sigma3;
};

struct BulkBoundaryArgs {
    Complex alpha;
    Complex beta;
    Complex sigma;
};

struct ReflectionArgs {
    Complex beta;
    Complex sigma1, sigma2;
};

}  // namespace lcft
