#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "lcft/contour.hpp"
#include "lcft/double_gamma.hpp"
#include "lcft/lngamma.hpp"
#include "lcft/types.hpp"

namespace lcft {

namespace detail {
inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
}  // namespace detail

struct EvalInfo {
    double err_est = 0.0;
};

// ---------------------------------------------------------------------------
// sigma parametrization and elementary quantities
// ---------------------------------------------------------------------------

// mu_B(sigma) = sqrt(1/sin(pi gamma^2/4)) cos(pi gamma (sigma - Q/2))
inline Complex mu_of_sigma(Complex sigma, const LiouvilleParams& p) {
    const double c = std::sqrt(1.0 / std::sin(detail::kPi * p.gamma * p.gamma / 4.0));
    return c * std::cos(detail::kPi * p.gamma * (sigma - p.Q() / 2.0));
}

// Inverse on the principal band Re sigma in (Q/2 - 1/(2 gamma), Q/2 + 1/(2 gamma)).
inline Complex sigma_of_mu(Complex mu, const LiouvilleParams& p) {
    const double c = std::sqrt(1.0 / std::sin(detail::kPi * p.gamma * p.gamma / 4.0));
    const Complex theta = std::acos(mu / c);  // principal, Re in [0, pi]
    const double edge_dist = std::abs(theta.real() - detail::kPi / 2.0);
    if (edge_dist < 1e-10)
        throw Error(ErrorKind::BranchAmbiguity,
                    "mu maps onto the edge of the principal sigma band");
    if (theta.real() > detail::kPi / 2.0)
        throw Error(ErrorKind::BranchAmbiguity,
                    "mu has no representative in the principal sigma band");
    return p.Q() / 2.0 + theta / (detail::kPi * p.gamma);
}

// g_chi(sigma) = sin(pi gamma^2/4)^(-chi/gamma) cos(2 pi chi (sigma - Q/2));
// for chi = gamma/2 this is mu_B(sigma).
inline Complex g_chi(Complex sigma, double chi, const LiouvilleParams& p) {
    const double s = std::sin(detail::kPi * p.gamma * p.gamma / 4.0);
    return std::pow(s, -chi / p.gamma) *
           std::cos(2.0 * detail::kPi * chi * (sigma - p.Q() / 2.0));
}

inline Complex conformal_dim(Complex beta, const LiouvilleParams& p) {
    return beta / 2.0 * (p.Q() - beta / 2.0);
}

// pi (gamma/2)^{2 - gamma^2/2} Gamma(gamma^2/4) / Gamma(1 - gamma^2/4)
inline double unit_volume_constant(const LiouvilleParams& p) {
    const double g = p.gamma;
    return detail::kPi * std::pow(g / 2.0, 2.0 - g * g / 2.0) *
           std::tgamma(g * g / 4.0) / std::tgamma(1.0 - g * g / 4.0);
}

// chi = gamma/2 or 2/gamma, and q = (2Q - beta1 - beta2 - beta3 + chi)/gamma.
struct ShiftContext {
    double chi;
    Complex q;
};

inline ShiftContext make_shift_context(double chi, const ThreePointArgs& a,
                                       const LiouvilleParams& p) {
    const bool ok = std::abs(chi - p.gamma / 2.0) < 1e-12 ||
                    std::abs(chi - 2.0 / p.gamma) < 1e-12;
    if (!ok)
        throw Error(ErrorKind::DomainError, "chi must be gamma/2 or 2/gamma");
    return {chi, (2.0 * p.Q() - a.beta1 - a.beta2 - a.beta3 + chi) / p.gamma};
}

// ---------------------------------------------------------------------------
// log-space product assembly
// ---------------------------------------------------------------------------

// Accumulates log factors while tracking the net vanishing order from factors
// that sit on a pole or zero lattice (within the proximity guard).  A positive
// net order exponentiates to an exact zero; a negative one is a pole of the
// assembled quantity.
class LogProduct {
  public:
    explicit LogProduct(const LiouvilleParams& p) : p_(p) {}

    void mul_sine(Complex x) { sine(x, +1); }
    void div_sine(Complex x) { sine(x, -1); }

    void mul_gamma2(Complex x) { gamma2(x, +1); }
    void div_gamma2(Complex x) { gamma2(x, -1); }

    void mul_gamma(Complex z) { ordinary_gamma(z, +1); }
    void div_gamma(Complex z) { ordinary_gamma(z, -1); }

    // ratio Gamma_{g/2}(x)/Gamma_{g/2}(-x) extended through x = 0, where the
    // simple poles cancel to -1
    void mul_gamma2_reflection_ratio(Complex x) {
        if (lattice_query(LatticeKind::GammaPole, x, p_, detail::kPoleGuard) &&
            lattice_query(LatticeKind::GammaPole, -x, p_, detail::kPoleGuard)) {
            logsum_ += Complex(0.0, detail::kPi);  // log(-1)
            return;
        }
        mul_gamma2(x);
        div_gamma2(-x);
    }

    void mul_log(Complex log_factor) { logsum_ += log_factor; }
    void mul_value(Complex v) {
        if (v == Complex(0.0, 0.0)) { ++order_; return; }
        logsum_ += std::log(v);
    }

    int net_zero_order() const { return order_; }
    Complex log_sum() const { return logsum_; }

    Complex value() const {
        if (order_ > 0) return {0.0, 0.0};
        if (order_ < 0)
            throw Error(ErrorKind::PoleEncountered,
                        "assembled product has a pole from a lattice factor");
        return std::exp(logsum_);
    }

    Complex value_times(Complex other) const {
        if (order_ > 0) return {0.0, 0.0};
        if (order_ < 0)
            throw Error(ErrorKind::PoleEncountered,
                        "assembled product has a pole from a lattice factor");
        return std::exp(logsum_) * other;
    }

  private:
    void sine(Complex x, int dir) {
        if (lattice_query(LatticeKind::SinePole, x, p_, detail::kPoleGuard)) {
            order_ -= dir;
            return;
        }
        if (lattice_query(LatticeKind::SineZero, x, p_, detail::kPoleGuard)) {
            order_ += dir;
            return;
        }
        logsum_ += static_cast<double>(dir) * log_double_sine(x, p_);
    }
    void gamma2(Complex x, int dir) {
        if (lattice_query(LatticeKind::GammaPole, x, p_, detail::kPoleGuard)) {
            order_ -= dir;
            return;
        }
        logsum_ += static_cast<double>(dir) * log_double_gamma(x, p_);
    }
    void ordinary_gamma(Complex z, int dir) {
        const double rn = std::round(z.real());
        if (rn <= 0.5 && std::abs(z.real() - rn) < detail::kPoleGuard &&
            std::abs(z.imag()) < detail::kPoleGuard) {
            order_ -= dir;
            return;
        }
        logsum_ += static_cast<double>(dir) * lngamma(z);
    }

    const LiouvilleParams& p_;
    Complex logsum_{0.0, 0.0};
    int order_ = 0;
};

// ---------------------------------------------------------------------------
// the three-point contour integral J_PT and the Ponsot-Teschner function
// ---------------------------------------------------------------------------

namespace detail {

// Magnitude decay rate of the J_PT integrand along vertical lines.  The
// quartic terms of the double-sine asymptotics cancel between the four
// numerator and four denominator factors and the linear terms leave
// exp(+-2 i pi Q r).
inline double jpt_decay_rate(const LiouvilleParams& p) { return kTwoPi * p.Q(); }

struct JptIntegrand {
    std::vector<Complex> num_offsets;  // S(offset + r) in the numerator
    std::vector<Complex> den_offsets;  // S(offset + r) in the denominator

    Complex operator()(Complex r, const LiouvilleParams& p) const {
        Complex logv{0.0, 0.0};
        for (Complex c : num_offsets) logv += log_double_sine(c + r, p);
        for (Complex c : den_offsets) logv -= log_double_sine(c + r, p);
        return std::exp(logv);
    }
};

inline JptIntegrand make_jpt_integrand(const ThreePointArgs& a,
                                       const LiouvilleParams& p) {
    const double Q = p.Q();
    JptIntegrand f;
    const Complex n1 = (Q - a.beta2) / 2.0 + a.sigma3;
    const Complex w2 = Q / 2.0 - a.sigma2;
    const Complex n3 = Q / 2.0 + a.sigma3 - a.sigma1;
    const Complex w3 = (Q - a.beta3) / 2.0;
    f.num_offsets = {n1 - w2, n1 + w2, n3 - w3, n3 + w3};
    const Complex d1 = 3.0 * Q / 2.0 - a.beta2 / 2.0 + a.sigma3 - a.sigma1;
    const Complex w1 = (Q - a.beta1) / 2.0;
    f.den_offsets = {d1 - w1, d1 + w1, 2.0 * a.sigma3, Complex(Q, 0.0)};
    return f;
}

}  // namespace detail

// Bare Mellin-Barnes integral of the eight-fold double-sine ratio, in the
// dr/i convention.
inline Complex j_pt(const ThreePointArgs& a, const LiouvilleParams& p,
                    const QuadSettings& s, EvalInfo* info = nullptr) {
    auto [left, right] = pt_pole_seeds(a, p);
    const auto spec =
        plan_contour(left, right, p, detail::jpt_decay_rate(p), s.abs_tol);
    const auto f = detail::make_jpt_integrand(a, p);
    const auto r = integrate_contour_est(
        [&](Complex z) { return f(z, p); }, spec, s);
    if (info) info->err_est = r.err;
    return r.value;
}

// Same integral evaluated on a caller-supplied contour plan (used by the
// robustness checks).
inline Complex j_pt_on(const ThreePointArgs& a, const LiouvilleParams& p,
                       const ContourSpec& spec, const QuadSettings& s,
                       EvalInfo* info = nullptr) {
    const auto f = detail::make_jpt_integrand(a, p);
    const auto r = integrate_contour_est(
        [&](Complex z) { return f(z, p); }, spec, s);
    if (info) info->err_est = r.err;
    return r.value;
}

// Ponsot-Teschner boundary three-point function H_PT.
inline Complex h_pt(const ThreePointArgs& a, const LiouvilleParams& p,
                    const QuadSettings& s, EvalInfo* info = nullptr) {
    const double Q = p.Q();
    const Complex bbar = a.beta1 + a.beta2 + a.beta3;

    LogProduct pre(p);
    pre.mul_log(Complex(std::log(detail::kTwoPi), 0.0));
    pre.mul_log((2.0 * Q - bbar) / (2.0 * p.gamma) *
                std::log(unit_volume_constant(p)));
    const Complex g_base = Q - a.beta2 / 2.0;
    const Complex w1 = (Q - a.beta1) / 2.0, w3 = (Q - a.beta3) / 2.0;
    pre.mul_gamma2(g_base - w1 - w3);
    pre.mul_gamma2(g_base - w1 + w3);
    pre.mul_gamma2(g_base + w1 - w3);
    pre.mul_gamma2(g_base + w1 + w3);
    const Complex s_base1 = a.beta3 / 2.0 - a.sigma1 + Q / 2.0;
    const Complex v3 = Q / 2.0 - a.sigma3;
    pre.div_sine(s_base1 - v3);
    pre.div_sine(s_base1 + v3);
    const Complex s_base2 = a.beta1 / 2.0 + a.sigma1 - Q / 2.0;
    const Complex v2 = Q / 2.0 - a.sigma2;
    pre.div_sine(s_base2 - v2);
    pre.div_sine(s_base2 + v2);
    pre.div_gamma2(Complex(Q, 0.0));
    pre.div_gamma2(Q - a.beta1);
    pre.div_gamma2(Q - a.beta2);
    pre.div_gamma2(Q - a.beta3);

    if (pre.net_zero_order() > 0) {
        if (info) info->err_est = 0.0;
        return {0.0, 0.0};
    }
    const Complex J = j_pt(a, p, s, info);
    const Complex out = pre.value_times(J);
    if (info && std::abs(J) > 0.0)
        info->err_est *= std::abs(out) / std::abs(J);
    return out;
}

// ---------------------------------------------------------------------------
// FZZ boundary reflection coefficient (closed form)
// ---------------------------------------------------------------------------

inline Complex r_fzz(const ReflectionArgs& a, const LiouvilleParams& p) {
    const double Q = p.Q();
    LogProduct prod(p);
    prod.mul_log((Q - a.beta) / p.gamma * std::log(unit_volume_constant(p)));
    prod.mul_gamma2_reflection_ratio(a.beta - Q);
    const Complex w = Q - a.sigma1 - a.sigma2;
    prod.mul_sine(Q - w - a.beta / 2.0);
    prod.mul_sine(Q + w - a.beta / 2.0);
    const Complex d = a.sigma2 - a.sigma1;
    prod.div_sine(a.beta / 2.0 - d);
    prod.div_sine(a.beta / 2.0 + d);
    return prod.value();
}

// ---------------------------------------------------------------------------
// bulk-boundary constant G_Hos and its contour integral
// ---------------------------------------------------------------------------

namespace detail {

inline double jhos_decay_rate(const BulkBoundaryArgs& a, const LiouvilleParams& p) {
    const double lo = a.sigma.real() - a.beta.real() / 4.0;
    const double hi = p.Q() - a.sigma.real() - a.beta.real() / 4.0;
    return 4.0 * kPi * std::min(lo, hi);
}

}  // namespace detail

// Contour integral of e^{2 i pi (Q - 2 sigma) u} S(h+ +- u)/S(h- +- u) in the
// du/i convention, over the planned contour separating the Hosomichi lattices.
inline Complex j_hos(const BulkBoundaryArgs& a, const LiouvilleParams& p,
                     const QuadSettings& s, EvalInfo* info = nullptr) {
    const double Q = p.Q();
    const double kappa = detail::jhos_decay_rate(a, p);
    if (!(kappa > 1e-9))
        throw Error(ErrorKind::ConvergenceDomain,
                    "need Re sigma strictly inside [Re beta/4, Q - Re beta/4]");
    auto [left, right] = hos_pole_seeds(a.alpha, a.beta, p);
    auto spec = plan_contour(left, right, p, kappa, s.abs_tol);

    const Complex hp = (a.alpha + a.beta / 2.0 - Q) / 2.0;
    const Complex hm = (a.alpha - a.beta / 2.0 + Q) / 2.0;
    const Complex phase = Complex(0.0, detail::kTwoPi) * (Q - 2.0 * a.sigma);
    auto f = [&](Complex u) {
        const Complex logv = log_double_sine(hp + u, p) + log_double_sine(hp - u, p) -
                             log_double_sine(hm + u, p) - log_double_sine(hm - u, p) +
                             phase * u;
        return std::exp(logv);
    };

    // The exponential model is derived from the double-sine asymptotics;
    // verify it empirically and fall back to the measured rate if it is off.
    const double T = spec.trunc_height;
    const double f_hi = std::abs(f(Complex(spec.base_re, T)));
    const double f_hi1 = std::abs(f(Complex(spec.base_re, T + 1.0)));
    if (f_hi1 > 0.0 && f_hi > 0.0) {
        const double emp = std::log(f_hi / f_hi1);
        if (std::abs(emp - kappa) > 0.1 * kappa && emp > 0.0) {
            spec.decay_rate = std::min(kappa, emp);
            spec.trunc_height = std::max(
                3.0, std::log(std::max(1.0, 1.0 / (s.abs_tol * spec.decay_rate))) /
                         spec.decay_rate);
        }
    }

    const auto r = integrate_contour_est(f, spec, s);
    if (info) info->err_est = r.err;
    return r.value;
}

// Hosomichi bulk-boundary structure constant.
inline Complex g_hos(const BulkBoundaryArgs& a, const LiouvilleParams& p,
                     const QuadSettings& s, EvalInfo* info = nullptr) {
    const double Q = p.Q();
    const Complex dal = conformal_dim(a.alpha, p);
    const Complex dbe = conformal_dim(a.beta, p);

    LogProduct pre(p);
    pre.mul_log(Complex(std::log(detail::kTwoPi), 0.0));
    pre.mul_log((dbe - 2.0 * dal) * std::log(2.0));
    pre.mul_log((Q - a.alpha - a.beta / 2.0) / p.gamma *
                std::log(unit_volume_constant(p)));
    pre.mul_gamma2(2.0 * Q - a.beta / 2.0 - a.alpha);
    pre.mul_gamma2(a.alpha - a.beta / 2.0);
    pre.mul_gamma2(Q - a.beta / 2.0);
    pre.mul_gamma2(Q - a.beta / 2.0);
    pre.mul_gamma2(Q - a.beta / 2.0);
    pre.div_gamma2(Q - a.alpha);
    pre.div_gamma2(Q - a.beta);
    pre.div_gamma2(a.alpha);
    pre.div_gamma2(Complex(Q, 0.0));
    pre.div_gamma2(a.beta / 2.0);

    if (pre.net_zero_order() > 0) {
        if (info) info->err_est = 0.0;
        return {0.0, 0.0};
    }
    const Complex J = j_hos(a, p, s, info);
    const Complex out = pre.value_times(J);
    if (info && std::abs(J) > 0.0)
        info->err_est *= std::abs(out) / std::abs(J);
    return out;
}

// ---------------------------------------------------------------------------
// fusion and modular kernels of Virasoro conformal blocks
// ---------------------------------------------------------------------------

struct FusionKernelArgs {
    Complex alpha1p, alpha2p, alpha3p, alpha4p;
    Complex P, Pprime;
};

struct ModularKernelArgs {
    Complex alphap;
    Complex P, Pprime;
};

// Parameter identification for the fusion kernel.
inline ThreePointArgs fusion_to_threepoint(const FusionKernelArgs& k,
                                           const LiouvilleParams& p) {
    const Complex i(0.0, 1.0);
    ThreePointArgs a;
    a.beta1 = k.alpha2p;
    a.beta2 = p.Q() - i * k.Pprime;
    a.beta3 = k.alpha3p;
    a.sigma1 = (p.Q() + i * k.P) / 2.0;
    a.sigma2 = k.alpha1p / 2.0;
    a.sigma3 = k.alpha4p / 2.0;
    return a;
}

inline FusionKernelArgs threepoint_to_fusion(const ThreePointArgs& a,
                                             const LiouvilleParams& p) {
    const Complex i(0.0, 1.0);
    FusionKernelArgs k;
    k.alpha2p = a.beta1;
    k.Pprime = (p.Q() - a.beta2) / i;
    k.alpha3p = a.beta3;
    k.P = (2.0 * a.sigma1 - p.Q()) / i;
    k.alpha1p = 2.0 * a.sigma2;
    k.alpha4p = 2.0 * a.sigma3;
    return k;
}

inline Complex fusion_kernel(const FusionKernelArgs& k, const LiouvilleParams& p,
                             const QuadSettings& s, EvalInfo* info = nullptr) {
    const double Q = p.Q();
    const ThreePointArgs a = fusion_to_threepoint(k, p);
    const Complex bbar = a.beta1 + a.beta2 + a.beta3;

    LogProduct pre(p);
    pre.mul_log(Complex(-std::log(detail::kTwoPi), 0.0));
    pre.mul_log((bbar - 2.0 * Q) / (2.0 * p.gamma) *
                std::log(unit_volume_constant(p)));
    pre.mul_gamma2(Complex(Q, 0.0));
    pre.mul_gamma2(Q - a.beta1);
    pre.mul_gamma2(Q - a.beta3);
    pre.div_gamma2(a.beta2 - Q);
    pre.mul_gamma2(2.0 * a.sigma1);
    pre.mul_gamma2(2.0 * Q - 2.0 * a.sigma1);
    {
        const Complex base = a.beta2 / 2.0;
        const Complex u = (Q - 2.0 * a.sigma2) / 2.0, v = (Q - 2.0 * a.sigma3) / 2.0;
        pre.mul_gamma2(base - u - v);
        pre.mul_gamma2(base - u + v);
        pre.mul_gamma2(base + u - v);
        pre.mul_gamma2(base + u + v);
    }
    {
        const Complex base = (Q + a.beta2 - a.beta3) / 2.0;
        const Complex u = (Q - a.beta1) / 2.0;
        pre.mul_sine(base - u);
        pre.mul_sine(base + u);
    }
    {
        const Complex base = Q - a.beta1 / 2.0;
        const Complex u = (Q - 2.0 * a.sigma1) / 2.0, v = (Q - 2.0 * a.sigma2) / 2.0;
        pre.div_gamma2(base - u - v);
        pre.div_gamma2(base - u + v);
        pre.div_gamma2(base + u - v);
        pre.div_gamma2(base + u + v);
    }
    {
        const Complex base = Q - a.beta3 / 2.0;
        const Complex u = (Q - 2.0 * a.sigma1) / 2.0, v = (Q - 2.0 * a.sigma3) / 2.0;
        pre.div_gamma2(base - u - v);
        pre.div_gamma2(base - u + v);
        pre.div_gamma2(base + u - v);
        pre.div_gamma2(base + u + v);
    }

    if (pre.net_zero_order() > 0) {
        if (info) info->err_est = 0.0;
        return {0.0, 0.0};
    }
    const Complex H = h_pt(a, p, s, info);
    const Complex out = pre.value_times(H);
    if (info && std::abs(H) > 0.0)
        info->err_est *= std::abs(out) / std::abs(H);
    return out;
}

inline Complex modular_kernel(const ModularKernelArgs& k, const LiouvilleParams& p,
                              const QuadSettings& s, EvalInfo* info = nullptr) {
    const double Q = p.Q();
    const Complex i(0.0, 1.0);
    BulkBoundaryArgs a;
    a.alpha = Q + i * k.Pprime;
    a.beta = k.alphap;
    a.sigma = (Q + i * k.P) / 2.0;

    const Complex dal = conformal_dim(a.alpha, p);
    const Complex dbe = conformal_dim(a.beta, p);

    LogProduct pre(p);
    pre.mul_value(Complex(-detail::kPi / 2.0, 0.0));
    pre.mul_log((2.0 * dal - dbe) * std::log(2.0));
    pre.mul_log(((2.0 / p.gamma - p.gamma / 2.0) * (Q - a.alpha) + 1.0) *
                std::log(p.gamma / 2.0));
    pre.mul_log((a.alpha + a.beta / 2.0 - Q) / p.gamma *
                std::log(unit_volume_constant(p)));
    pre.mul_gamma2(2.0 * a.sigma);
    pre.mul_gamma2(2.0 * Q - 2.0 * a.sigma);
    pre.mul_gamma2(Q - a.beta);
    pre.mul_gamma2(Complex(Q, 0.0));
    pre.div_gamma(2.0 / p.gamma * (a.alpha - Q));
    pre.div_gamma(p.gamma * a.alpha / 4.0 - p.gamma * p.gamma / 4.0);
    pre.div_gamma2(Q - a.beta / 2.0 + (2.0 * a.sigma - Q));
    pre.div_gamma2(Q - a.beta / 2.0 - (2.0 * a.sigma - Q));
    pre.div_gamma2(Q - a.beta / 2.0);
    pre.div_gamma2(Q - a.beta / 2.0);

    if (pre.net_zero_order() > 0) {
        if (info) info->err_est = 0.0;
        return {0.0, 0.0};
    }
    const Complex G = g_hos(a, p, s, info);
    const Complex out = pre.value_times(G);
    if (info && std::abs(G) > 0.0)
        info->err_est *= std::abs(out) / std::abs(G);
    return out;
}

// ---------------------------------------------------------------------------
// position-dependent correlators
// ---------------------------------------------------------------------------

// Boundary three-point correlator at positions s1 < s2 < s3 on the real line
// (bulk cosmological constant fixed to 1).
inline Complex boundary_3pt(double s1, double s2, double s3,
                            const ThreePointArgs& a, const LiouvilleParams& p,
                            const QuadSettings& s, EvalInfo* info = nullptr) {
    if (s1 == s2 || s1 == s3 || s2 == s3)
        throw Error(ErrorKind::CoincidentPoints,
                    "boundary insertion points must be pairwise distinct");
    const Complex d1 = conformal_dim(a.beta1, p);
    const Complex d2 = conformal_dim(a.beta2, p);
    const Complex d3 = conformal_dim(a.beta3, p);
    const Complex log_factor = (d1 + d2 - d3) * std::log(std::abs(s1 - s2)) +
                               (d1 + d3 - d2) * std::log(std::abs(s1 - s3)) +
                               (d2 + d3 - d1) * std::log(std::abs(s2 - s3));
    return h_pt(a, p, s, info) * std::exp(-log_factor);
}

// The |s3|^{2 Delta3}-normalized limit s3 -> infinity.
inline Complex boundary_3pt_inf(double s1, double s2, const ThreePointArgs& a,
                                const LiouvilleParams& p, const QuadSettings& s,
                                EvalInfo* info = nullptr) {
    if (s1 == s2)
        throw Error(ErrorKind::CoincidentPoints,
                    "boundary insertion points must be pairwise distinct");
    const Complex d1 = conformal_dim(a.beta1, p);
    const Complex d2 = conformal_dim(a.beta2, p);
    const Complex d3 = conformal_dim(a.beta3, p);
    const Complex log_factor = (d1 + d2 - d3) * std::log(std::abs(s1 - s2));
    return h_pt(a, p, s, info) * std::exp(-log_factor);
}

// Bulk-boundary correlator: one bulk insertion at z (upper half plane), one
// boundary insertion at s0.
inline Complex bulk_boundary(Complex z, double s0, const BulkBoundaryArgs& a,
                             const LiouvilleParams& p, const QuadSettings& s,
                             EvalInfo* info = nullptr) {
    if (!(z.imag() > 0.0))
        throw Error(ErrorKind::DomainError, "bulk point must satisfy Im z > 0");
    if (z.imag() == 0.0 && z.real() == s0)
        throw Error(ErrorKind::CoincidentPoints, "bulk and boundary points coincide");
    const Complex dal = conformal_dim(a.alpha, p);
    const Complex dbe = conformal_dim(a.beta, p);
    const Complex log_factor = (2.0 * dal - dbe) * std::log(2.0 * z.imag()) +
                               2.0 * dbe * std::log(std::abs(z - s0));
    return g_hos(a, p, s, info) * std::exp(-log_factor);
}

}  // namespace lcft
