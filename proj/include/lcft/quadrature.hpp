#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "lcft/types.hpp"

namespace lcft {

struct QuadResult {
    Complex value{0.0, 0.0};
    double err = 0.0;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1,1] (QUADPACK dqk15 constants).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGK15WeightsG[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEval {
    Complex kronrod{0.0, 0.0};
    Complex gauss{0.0, 0.0};
    double err = 0.0;
};

template <typename F>
PanelEval gk15_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    PanelEval out;
    const Complex fc = f(c);
    if (!is_finite(fc))
        throw Error(ErrorKind::NonFiniteIntegrand,
                    "integrand returned a non-finite value", Complex(c, 0.0));
    Complex resk = kGK15WeightsK[7] * fc;
    Complex resg = kGK15WeightsG[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kGK15Nodes[j];
        const Complex fv = f(c - x) + f(c + x);
        if (!is_finite(fv))
            throw Error(ErrorKind::NonFiniteIntegrand,
                        "integrand returned a non-finite value",
                        Complex(c - x, 0.0));
        resk += kGK15WeightsK[j] * fv;
        if (j % 2 == 1) resg += kGK15WeightsG[j / 2] * fv;
    }
    out.kronrod = h * resk;
    out.gauss = h * resg;
    out.err = std::abs(out.kronrod - out.gauss);
    return out;
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of a complex-valued f over [a,b].
// Bisects the interval with the largest local error until the summed error
// estimate is below max(rel_tol*|result|, abs_tol).
template <typename F>
QuadResult integrate_real_est(F&& f, double a, double b, const QuadSettings& s) {
    if (!(a < b)) throw Error(ErrorKind::DomainError, "integrate_real needs a < b");

    struct Seg {
        double a, b, err;
        Complex val;
    };
    std::vector<Seg> segs;

    auto eval = [&](double lo, double hi) {
        auto p = detail::gk15_panel(f, lo, hi);
        return Seg{lo, hi, p.err, p.kronrod};
    };

    segs.push_back(eval(a, b));
    int used = 1;
    for (;;) {
        Complex total{0.0, 0.0};
        double err = 0.0;
        std::size_t worst = 0;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].val;
            err += segs[i].err;
            if (segs[i].err > worst_err) {
                worst_err = segs[i].err;
                worst = i;
            }
        }
        const double goal = std::max(s.rel_tol * std::abs(total), s.abs_tol);
        if (err <= goal) return {total, err};
        if (used >= s.max_subdivisions)
            throw Error(ErrorKind::SubdivisionLimit,
                        "quadrature error estimate did not reach tolerance");
        const Seg w = segs[worst];
        const double mid = 0.5 * (w.a + w.b);
        if (!(w.a < mid && mid < w.b))
            throw Error(ErrorKind::SubdivisionLimit,
                        "interval too small to bisect further");
        segs[worst] = eval(w.a, mid);
        segs.push_back(eval(mid, w.b));
        ++used;
    }
}

template <typename F>
Complex integrate_real(F&& f, double a, double b, const QuadSettings& s) {
    return integrate_real_est(std::forward<F>(f), a, b, s).value;
}

// Richardson extrapolation of g(eps) = c0 + c1*eps + c2*eps^2 + ... to eps=0
// given samples on a geometric sequence eps_k = eps_0 * rho^k, rho in (0,1).
// Returns c0; the tableau's last correction serves as a consistency estimate.
template <typename F>
Complex extrapolate_limit(F&& g, const std::vector<double>& eps_seq,
                          double* consistency = nullptr) {
    const std::size_t n = eps_seq.size();
    if (n < 3)
        throw Error(ErrorKind::DomainError, "need at least 3 epsilon values");
    for (double e : eps_seq)
        if (!(e > 0.0))
            throw Error(ErrorKind::DomainError, "epsilon values must be positive");
    const double rho = eps_seq[1] / eps_seq[0];
    if (!(rho > 0.0 && rho < 1.0))
        throw Error(ErrorKind::DomainError,
                    "epsilon sequence must decrease geometrically");
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double r = eps_seq[k + 1] / eps_seq[k];
        if (std::abs(r - rho) > 1e-9 * (1.0 + rho))
            throw Error(ErrorKind::DomainError,
                        "epsilon sequence must have a fixed geometric ratio");
    }

    std::vector<Complex> row(n);
    for (std::size_t k = 0; k < n; ++k) {
        row[k] = g(eps_seq[k]);
        if (!is_finite(row[k]))
            throw Error(ErrorKind::NonFiniteIntegrand,
                        "limit sequence produced a non-finite value");
    }

    // Neville tableau: column j removes the eps^j term.
    Complex best = row[0];
    double prev_gap = std::numeric_limits<double>::infinity();
    double last_gap = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        const double w = std::pow(rho, -static_cast<double>(j));
        for (std::size_t k = 0; k + j < n; ++k)
            row[k] = (w * row[k + 1] - row[k]) / (w - 1.0);
        last_gap = std::abs(row[0] - best);
        const double scale = std::max(std::abs(row[0]), 1e-300);
        if (j >= 2 && last_gap > 8.0 * prev_gap && last_gap > 1e-11 * scale)
            throw Error(ErrorKind::DivergentSequence,
                        "Richardson extrapolants stopped contracting");
        prev_gap = std::max(last_gap, 1e-16 * scale);
        best = row[0];
    }
    if (consistency) *consistency = last_gap;
    return best;
}

}  // namespace lcft
