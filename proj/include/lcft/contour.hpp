#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "lcft/quadrature.hpp"
#include "lcft/types.hpp"

namespace lcft {

// Half-lattice of poles: Left extends as seed - n*gamma/2 - 2m/gamma,
// Right as seed + n*gamma/2 + 2m/gamma (n, m >= 0).  A valid contour passes
// right of every Left lattice and left of every Right lattice.
struct PoleLattice {
    enum class Dir { Left, Right };
    Complex seed;
    Dir dir;
};

struct ResidueCorrection {
    Complex pole;
    int sign;       // +1: line ran left of a must-be-left pole, -1: the mirror case
    double radius;  // safe circle radius for residue extraction
};

struct ContourSpec {
    double base_re = 0.0;
    std::vector<ResidueCorrection> corrections;
    double trunc_height = 5.0;
    double decay_rate = 1.0;
};

struct ContourResult {
    Complex value{0.0, 0.0};
    double err = 0.0;
    double tail_bound = 0.0;
};

// Pole half-lattices of the three-point contour integrand.
inline std::pair<std::vector<PoleLattice>, std::vector<PoleLattice>>
pt_pole_seeds(const ThreePointArgs& a, const LiouvilleParams& p) {
    const double Q = p.Q();
    std::vector<PoleLattice> left = {
        {a.beta2 / 2.0 - a.sigma2 - a.sigma3, PoleLattice::Dir::Left},
        {a.beta2 / 2.0 - Q + a.sigma2 - a.sigma3, PoleLattice::Dir::Left},
        {-a.beta3 / 2.0 - a.sigma3 + a.sigma1, PoleLattice::Dir::Left},
        {a.beta3 / 2.0 - Q - a.sigma3 + a.sigma1, PoleLattice::Dir::Left},
    };
    std::vector<PoleLattice> right = {
        {-a.beta1 / 2.0 + a.beta2 / 2.0 - a.sigma3 + a.sigma1, PoleLattice::Dir::Right},
        {-Q + a.beta1 / 2.0 + a.beta2 / 2.0 - a.sigma3 + a.sigma1, PoleLattice::Dir::Right},
        {-2.0 * a.sigma3 + Q, PoleLattice::Dir::Right},
        {{0.0, 0.0}, PoleLattice::Dir::Right},
    };
    return {std::move(left), std::move(right)};
}

// Pole half-lattices of the bulk-boundary contour integrand.
inline std::pair<std::vector<PoleLattice>, std::vector<PoleLattice>>
hos_pole_seeds(Complex alpha, Complex beta, const LiouvilleParams& p) {
    const double Q = p.Q();
    std::vector<PoleLattice> left = {
        {(Q - alpha - beta / 2.0) / 2.0, PoleLattice::Dir::Left},
        {(alpha - beta / 2.0 - Q) / 2.0, PoleLattice::Dir::Left},
    };
    std::vector<PoleLattice> right = {
        {(alpha + beta / 2.0 - Q) / 2.0, PoleLattice::Dir::Right},
        {(Q - alpha + beta / 2.0) / 2.0, PoleLattice::Dir::Right},
    };
    return {std::move(left), std::move(right)};
}

namespace detail {

inline constexpr double kCollisionTol = 1e-8;
inline constexpr double kPathClearance = 1e-6;

// Is z within tol of the non-negative lattice {n*gamma/2 + 2m/gamma}?
inline bool on_positive_lattice(Complex z, const LiouvilleParams& p, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    const double a = p.gamma / 2.0, b = 2.0 / p.gamma;
    if (z.real() < -tol) return false;
    const long n_max = static_cast<long>(z.real() / a) + 1;
    for (long n = 0; n <= n_max; ++n) {
        const double rem = z.real() - static_cast<double>(n) * a;
        const long m0 = static_cast<long>(std::floor(rem / b));
        for (long m = m0; m <= m0 + 1; ++m) {
            if (m < 0) continue;
            const double d = std::abs(rem - static_cast<double>(m) * b);
            if (d <= tol) return true;
        }
    }
    return false;
}

// Enumerate lattice points of one half-lattice with Re on the given side of
// base (inclusive within clearance checks handled by the caller).
inline std::vector<Complex> lattice_points_beyond(const PoleLattice& lat,
                                                  const LiouvilleParams& p,
                                                  double base) {
    const double a = p.gamma / 2.0, b = 2.0 / p.gamma;
    std::vector<Complex> out;
    if (lat.dir == PoleLattice::Dir::Left) {
        // points seed - n a - m b with Re >= base
        const double span = lat.seed.real() - base;
        if (span < 0.0) return out;
        for (long n = 0; static_cast<double>(n) * a <= span; ++n)
            for (long m = 0; static_cast<double>(n) * a + static_cast<double>(m) * b <= span; ++m)
                out.push_back(lat.seed - Complex(static_cast<double>(n) * a +
                                                 static_cast<double>(m) * b, 0.0));
    } else {
        const double span = base - lat.seed.real();
        if (span < 0.0) return out;
        for (long n = 0; static_cast<double>(n) * a <= span; ++n)
            for (long m = 0; static_cast<double>(n) * a + static_cast<double>(m) * b <= span; ++m)
                out.push_back(lat.seed + Complex(static_cast<double>(n) * a +
                                                 static_cast<double>(m) * b, 0.0));
    }
    return out;
}

// Re coordinates of all lattice points inside [lo, hi].
inline void collect_lattice_re(const PoleLattice& lat, const LiouvilleParams& p,
                               double lo, double hi, std::vector<double>& out) {
    const double a = p.gamma / 2.0, b = 2.0 / p.gamma;
    const double sgn = (lat.dir == PoleLattice::Dir::Left) ? -1.0 : 1.0;
    // seed.re + sgn*(na + mb) in [lo, hi]
    const double smax = std::max(sgn * (lo - lat.seed.real()),
                                 sgn * (hi - lat.seed.real()));
    if (smax < 0.0) return;
    for (long n = 0; static_cast<double>(n) * a <= smax; ++n)
        for (long m = 0; static_cast<double>(n) * a + static_cast<double>(m) * b <= smax;
             ++m) {
            const double re = lat.seed.real() +
                              sgn * (static_cast<double>(n) * a +
                                     static_cast<double>(m) * b);
            if (re >= lo && re <= hi) out.push_back(re);
        }
}

// All lattice points within a box around z0, for radius planning.
inline void nearby_lattice_points(const PoleLattice& lat, const LiouvilleParams& p,
                                  Complex z0, double reach,
                                  std::vector<Complex>& out) {
    const double a = p.gamma / 2.0, b = 2.0 / p.gamma;
    const double sgn = (lat.dir == PoleLattice::Dir::Left) ? -1.0 : 1.0;
    // |seed + sgn(na+mb) - z0| <= reach requires na+mb within that distance
    const double center = sgn * (z0.real() - lat.seed.real());
    const double hi = center + reach;
    if (hi < 0.0) return;
    for (long n = 0; static_cast<double>(n) * a <= hi; ++n)
        for (long m = 0; static_cast<double>(n) * a + static_cast<double>(m) * b <= hi; ++m) {
            const Complex pt = lat.seed + sgn * Complex(static_cast<double>(n) * a +
                                                        static_cast<double>(m) * b, 0.0);
            if (std::abs(pt - z0) <= reach) out.push_back(pt);
        }
}

}  // namespace detail

// Choose the integration line and the residue corrections making the straight
// line equivalent to the true pole-separating contour.  Moving the upward
// line rightward across a pole adds 2*pi*i times the residue; with the dr/i
// convention that is a +2*pi*residue correction, hence sign +1 for Left-lattice
// poles the line left behind and -1 for Right-lattice poles it overtook.
inline ContourSpec plan_contour(const std::vector<PoleLattice>& left,
                                const std::vector<PoleLattice>& right,
                                const LiouvilleParams& p, double decay_rate,
                                double tol) {
    if (!(decay_rate > 0.0))
        throw Error(ErrorKind::ConvergenceDomain,
                    "contour integrand does not decay along the line");
    // Collision means the meromorphic target itself has a pole here.
    for (const auto& l : left)
        for (const auto& r : right)
            if (detail::on_positive_lattice(l.seed - r.seed, p, detail::kCollisionTol))
                throw Error(ErrorKind::PoleCollision,
                            "left and right pole lattices intersect",
                            l.seed - r.seed);

    ContourSpec spec;
    spec.decay_rate = decay_rate;
    const double tail_target = std::max(tol, 1e-15);
    spec.trunc_height =
        std::max(3.0, std::log(std::max(1.0, 1.0 / (tail_target * decay_rate))) /
                          decay_rate);

    double max_left = -std::numeric_limits<double>::infinity();
    double min_right = std::numeric_limits<double>::infinity();
    for (const auto& l : left) max_left = std::max(max_left, l.seed.real());
    for (const auto& r : right) min_right = std::min(min_right, r.seed.real());

    if (max_left + 2.0 * detail::kPathClearance < min_right) {
        spec.base_re = 0.5 * (max_left + min_right);
        return spec;
    }

    // No straight gap: run the line near Re = 0 and collect residue
    // corrections for the stranded poles.  The nominal position 0 usually
    // sits on a lattice point (0 is always a seed of the right lattices), so
    // place the line at the clearest spot in a unit window around it.
    {
        std::vector<double> res;
        for (const auto& l : left)
            detail::collect_lattice_re(l, p, -1.5, 1.5, res);
        for (const auto& r : right)
            detail::collect_lattice_re(r, p, -1.5, 1.5, res);
        std::sort(res.begin(), res.end());
        double best = 0.0, best_score = -1.0;
        auto consider = [&](double cand) {
            if (std::abs(cand) > 1.0) return;
            double d = 1e9;
            for (double x : res) d = std::min(d, std::abs(x - cand));
            const double score = std::min(d, 0.3) - 0.05 * std::abs(cand);
            if (score > best_score) {
                best_score = score;
                best = cand;
            }
        };
        consider(0.0);
        for (std::size_t i = 0; i + 1 < res.size(); ++i)
            consider(0.5 * (res[i] + res[i + 1]));
        if (!res.empty()) {
            consider(res.front() - 0.1);
            consider(res.back() + 0.1);
        }
        spec.base_re = best;
    }

    std::vector<std::pair<Complex, int>> raw;
    for (const auto& l : left)
        for (Complex z : detail::lattice_points_beyond(l, p, spec.base_re))
            raw.emplace_back(z, +1);
    for (const auto& r : right)
        for (Complex z : detail::lattice_points_beyond(r, p, spec.base_re))
            raw.emplace_back(z, -1);

    for (const auto& [z, sign] : raw)
        if (std::abs(z.real() - spec.base_re) < detail::kPathClearance)
            throw Error(ErrorKind::PoleTooClose,
                        "correction pole sits on the integration line", z);

    // Safe extraction radius: stay away from every other lattice point.
    for (const auto& [z, sign] : raw) {
        std::vector<Complex> nearby;
        for (const auto& l : left) detail::nearby_lattice_points(l, p, z, 2.0, nearby);
        for (const auto& r : right) detail::nearby_lattice_points(r, p, z, 2.0, nearby);
        double d = std::min(p.gamma / 2.0, 2.0 / p.gamma);
        for (Complex w : nearby) {
            const double dw = std::abs(w - z);
            if (dw > 1e-12) d = std::min(d, dw);
        }
        d = std::min(d, std::abs(z.real() - spec.base_re));
        spec.corrections.push_back({z, sign, 0.45 * d});
    }
    return spec;
}

// (1/(2*pi*i)) times the circle integral of f around the pole, by the
// trapezoidal rule (spectrally accurate for analytic integrands).
template <typename F>
Complex residue_at(F&& f, Complex pole, double radius) {
    if (!(radius > 0.0))
        throw Error(ErrorKind::DomainError, "residue_at: radius must be positive");
    constexpr double two_pi = 6.28318530717958647692;
    auto estimate = [&](int n) {
        Complex acc{0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            const double th = two_pi * k / n;
            const Complex w = radius * std::exp(Complex(0.0, th));
            acc += f(pole + w) * w;
        }
        return acc / static_cast<double>(n);
    };
    Complex prev = estimate(64);
    for (int n = 128; n <= 8192; n *= 2) {
        const Complex cur = estimate(n);
        if (std::abs(cur - prev) <= 1e-11 * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    throw Error(ErrorKind::NonConvergent,
                "residue circle quadrature did not stabilize", pole);
}

// Integral of f along the planned contour in the dr/i convention:
//   int f(base + i y) dy  +  2*pi * sum sign_k * Res_k.
// The vertical line is truncated adaptively: segments are appended beyond the
// planned height until they fall below the requested tolerance, and the last
// integrand magnitudes give the reported geometric tail bound.
template <typename F>
ContourResult integrate_contour_est(F&& f, const ContourSpec& spec,
                                    const QuadSettings& s) {
    ContourResult out;
    auto g = [&](double y) { return f(Complex(spec.base_re, y)); };

    // Break the core interval at the heights of the correction poles; the
    // integrand is sharply peaked near those.
    std::vector<double> cuts = {-spec.trunc_height, spec.trunc_height};
    for (const auto& c : spec.corrections) {
        for (double b : {c.pole.imag() - 0.5, c.pole.imag(), c.pole.imag() + 0.5})
            if (b > -spec.trunc_height && b < spec.trunc_height) cuts.push_back(b);
    }
    if (0.0 > -spec.trunc_height && 0.0 < spec.trunc_height) cuts.push_back(0.0);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               cuts.end());

    Complex acc{0.0, 0.0};
    double err = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const auto r = integrate_real_est(g, cuts[i], cuts[i + 1], s);
        acc += r.value;
        err += r.err;
    }

    // Extend the tails until the new segments are negligible.
    const double kappa = spec.decay_rate;
    const double seg_len = std::max(1.0, 5.0 / kappa);
    double lo = -spec.trunc_height, hi = spec.trunc_height;
    for (int round = 0; round < 60; ++round) {
        const double goal =
            0.25 * std::max(s.rel_tol * std::abs(acc), s.abs_tol);
        const auto up = integrate_real_est(g, hi, hi + seg_len, s);
        const auto dn = integrate_real_est(g, lo - seg_len, lo, s);
        acc += up.value + dn.value;
        err += up.err + dn.err;
        hi += seg_len;
        lo -= seg_len;
        if (std::abs(up.value) + std::abs(dn.value) <= goal) break;
        if (round == 59)
            throw Error(ErrorKind::SubdivisionLimit,
                        "contour tail did not fall below tolerance");
    }
    out.tail_bound = (std::abs(g(hi)) + std::abs(g(lo))) / kappa;

    for (const auto& c : spec.corrections)
        acc += 2.0 * 3.14159265358979323846 * static_cast<double>(c.sign) *
               residue_at(f, c.pole, c.radius);

    out.value = acc;
    out.err = err + out.tail_bound;
    return out;
}

template <typename F>
Complex integrate_contour(F&& f, const ContourSpec& spec, const QuadSettings& s) {
    return integrate_contour_est(std::forward<F>(f), spec, s).value;
}

}  // namespace lcft
