#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "lcft/hyp2f1.hpp"
#include "lcft/structure.hpp"

namespace lcft {

// ---------------------------------------------------------------------------
// reports
// ---------------------------------------------------------------------------

using ParamMap = std::vector<std::pair<std::string, Complex>>;

struct IdentityReport {
    std::string identity_name;
    ParamMap params;
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    double elapsed_s = 0.0;
    std::string error;  // empty unless the evaluation raised a structured error
};

namespace detail {

inline constexpr double kAbsFloor = 1e-12;

inline IdentityReport finish_report(std::string name, ParamMap params, Complex lhs,
                                    Complex rhs, double tol) {
    IdentityReport r;
    r.identity_name = std::move(name);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.rel_err = r.abs_err / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.pass = (r.rel_err <= tol) ||
             (std::abs(lhs) <= kAbsFloor && std::abs(rhs) <= kAbsFloor &&
              r.abs_err <= tol);
    return r;
}

inline IdentityReport error_report(std::string name, ParamMap params,
                                   const Error& e) {
    IdentityReport r;
    r.identity_name = std::move(name);
    r.params = std::move(params);
    r.pass = false;
    r.error = error_kind_name(e.kind());
    return r;
}

template <typename F>
IdentityReport timed(F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    IdentityReport r = body();
    r.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline void put(ParamMap& m, const char* k, Complex v) { m.emplace_back(k, v); }

inline ParamMap threepoint_params(const ThreePointArgs& a) {
    ParamMap m;
    put(m, "beta1", a.beta1);
    put(m, "beta2", a.beta2);
    put(m, "beta3", a.beta3);
    put(m, "sigma1", a.sigma1);
    put(m, "sigma2", a.sigma2);
    put(m, "sigma3", a.sigma3);
    return m;
}

inline ParamMap reflection_params(const ReflectionArgs& a) {
    ParamMap m;
    put(m, "beta", a.beta);
    put(m, "sigma1", a.sigma1);
    put(m, "sigma2", a.sigma2);
    return m;
}

inline ParamMap bulkboundary_params(const BulkBoundaryArgs& a) {
    ParamMap m;
    put(m, "alpha", a.alpha);
    put(m, "beta", a.beta);
    put(m, "sigma", a.sigma);
    return m;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// shift-equation checks for H
// ---------------------------------------------------------------------------

// Both displays of the three-point shift equations for one value of chi.
// Each display relates three H evaluations; the report carries the two sides.
inline std::vector<IdentityReport> check_h_shift(double chi, const ThreePointArgs& a,
                                                 const LiouvilleParams& p,
                                                 const QuadSettings& s, double tol) {
    const double g = p.gamma;
    const double Q = p.Q();
    const auto ctx = make_shift_context(chi, a, p);
    const Complex q = ctx.q;
    const double chi2 = chi * chi;
    const double pref_pow =
        std::pow(detail::kPi, 2.0 * chi / g) /
        std::pow(std::tgamma(1.0 - g * g / 4.0), 2.0 * chi / g);

    const std::string suffix = (std::abs(chi - g / 2.0) < 1e-12) ? "chi_half" : "chi_inv";

    std::vector<IdentityReport> out;

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        detail::put(pm, "chi", Complex(chi, 0.0));
        try {
            ThreePointArgs lhs_a = a;
            lhs_a.beta2 -= chi;
            const Complex lhs = h_pt(lhs_a, p, s);

            ThreePointArgs down = a, up = a;
            down.beta1 -= chi;
            down.sigma2 += chi / 2.0;
            up.beta1 += chi;
            up.sigma2 += chi / 2.0;

            const Complex c1 =
                cgamma(chi * (a.beta1 - chi)) * cgamma(1.0 - chi * a.beta2 + chi2) /
                (cgamma(chi * (a.beta1 - chi + q * g / 2.0)) *
                 cgamma(1.0 - chi * a.beta2 + chi2 - q * g * chi / 2.0));
            const Complex c2 =
                chi2 * pref_pow * cgamma(1.0 - chi * a.beta1) *
                cgamma(1.0 - chi * a.beta2 + chi2) *
                (g_chi(a.sigma1, chi, p) - g_chi(a.sigma2 + a.beta1 / 2.0, chi, p)) /
                (std::sin(detail::kPi * chi * (chi - a.beta1)) *
                 cgamma(1.0 + q * g * chi / 2.0) *
                 cgamma(2.0 - chi * (a.beta1 + a.beta2 - 2.0 * chi + q * g / 2.0)));

            const Complex rhs = c1 * h_pt(down, p, s) + c2 * h_pt(up, p, s);
            return detail::finish_report("h.shift1_" + suffix, std::move(pm), lhs, rhs,
                                         tol);
        } catch (const Error& e) {
            return detail::error_report("h.shift1_" + suffix, std::move(pm), e);
        }
    }));

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        detail::put(pm, "chi", Complex(chi, 0.0));
        try {
            ThreePointArgs lhs_a = a;
            lhs_a.beta2 += chi;
            lhs_a.sigma2 += chi / 2.0;
            const Complex d0 =
                chi2 * std::pow(detail::kPi, 2.0 * chi / g - 1.0) /
                std::pow(std::tgamma(1.0 - g * g / 4.0), 2.0 * chi / g) *
                cgamma(1.0 - chi * a.beta2) *
                (g_chi(a.sigma3, chi, p) - g_chi(a.sigma2 + a.beta2 / 2.0, chi, p));
            const Complex lhs = d0 * h_pt(lhs_a, p, s);

            ThreePointArgs down = a, up = a;
            down.beta1 -= chi;
            up.beta1 += chi;

            const Complex d1 =
                cgamma(chi * (a.beta1 - chi)) /
                (cgamma(-q * g * chi / 2.0) *
                 cgamma(-1.0 + chi * (a.beta1 + a.beta2 - 2.0 * chi + q * g / 2.0)));
            const Complex d2 =
                chi2 * pref_pow *
                (g_chi(a.sigma1, chi, p) -
                 g_chi(a.sigma2 - a.beta1 / 2.0 + chi / 2.0, chi, p)) *
                cgamma(1.0 - chi * a.beta1) /
                (std::sin(detail::kPi * chi * (chi - a.beta1)) *
                 cgamma(1.0 - chi * (a.beta1 - chi + q * g / 2.0)) *
                 cgamma(chi * a.beta2 - chi2 + q * g * chi / 2.0));

            const Complex rhs = d1 * h_pt(down, p, s) + d2 * h_pt(up, p, s);
            return detail::finish_report("h.shift2_" + suffix, std::move(pm), lhs, rhs,
                                         tol);
        } catch (const Error& e) {
            return detail::error_report("h.shift2_" + suffix, std::move(pm), e);
        }
    }));

    return out;
}

// ---------------------------------------------------------------------------
// shift-equation checks for R
// ---------------------------------------------------------------------------

namespace detail {

inline double c_chi(double chi, const LiouvilleParams& p) {
    const double g = p.gamma;
    if (std::abs(chi - g / 2.0) < 1e-12) return -1.0 / std::tgamma(-g * g / 4.0);
    const double e = 4.0 / (g * g);
    return e * std::pow(kPi, e - 1.0) * std::pow(std::tgamma(1.0 - g * g / 4.0), -e);
}

}  // namespace detail

inline std::vector<IdentityReport> check_r_shift(double chi, const ReflectionArgs& a,
                                                 const LiouvilleParams& p,
                                                 double tol) {
    const double chi2 = chi * chi;
    const double c = detail::c_chi(chi, p);
    const std::string suffix =
        (std::abs(chi - p.gamma / 2.0) < 1e-12) ? "chi_half" : "chi_inv";
    std::vector<IdentityReport> out;

    for (int variant = 1; variant <= 2; ++variant) {
        out.push_back(detail::timed([&] {
            ParamMap pm = detail::reflection_params(a);
            detail::put(pm, "chi", Complex(chi, 0.0));
            const std::string name =
                "r.shift" + std::to_string(variant) + "_" + suffix;
            try {
                ReflectionArgs shifted = a;
                shifted.beta += chi;
                shifted.sigma1 += (variant == 1 ? -chi / 2.0 : chi / 2.0);
                const Complex lhs = r_fzz(a, p) / r_fzz(shifted, p);
                const Complex gg =
                    g_chi(a.sigma2, chi, p) -
                    g_chi(a.sigma1 + (variant == 1 ? -a.beta / 2.0 : a.beta / 2.0),
                          chi, p);
                const Complex rhs = c * cgamma(-1.0 + chi * a.beta - chi2) *
                                    cgamma(1.0 - chi * a.beta) * gg;
                return detail::finish_report(name, std::move(pm), lhs, rhs, tol);
            } catch (const Error& e) {
                return detail::error_report(name, std::move(pm), e);
            }
        }));
    }
    return out;
}

// gamma-step shift equation obtained by composing the two chi = gamma/2 steps.
inline IdentityReport check_r_combined(const ReflectionArgs& a,
                                       const LiouvilleParams& p, double tol) {
    return detail::timed([&] {
        ParamMap pm = detail::reflection_params(a);
        try {
            const double g = p.gamma;
            ReflectionArgs shifted = a;
            shifted.beta += g;
            const Complex lhs = r_fzz(a, p) / r_fzz(shifted, p);

            const Complex b = a.beta;
            const double s4 = std::pow(g / 2.0, 4.0);
            const Complex gammas =
                cgamma(-1.0 + g * b / 2.0 - g * g / 4.0) *
                cgamma(1.0 - g * b / 2.0 - g * g / 4.0) * cgamma(1.0 - g * b / 2.0) *
                cgamma(-1.0 + g * b / 2.0) /
                (std::sin(detail::kPi * g * g / 4.0) *
                 std::pow(std::tgamma(1.0 - g * g / 4.0), 2.0));
            auto sg = [&](Complex z) {
                return std::sin(g * detail::kPi / 2.0 * z);
            };
            const double Q = p.Q();
            const Complex rhs =
                s4 * gammas * 4.0 * sg(b / 2.0 - a.sigma1 - a.sigma2 + Q) *
                sg(b / 2.0 + a.sigma1 + a.sigma2 - Q) * sg(b / 2.0 + a.sigma2 - a.sigma1) *
                sg(b / 2.0 + a.sigma1 - a.sigma2);
            return detail::finish_report("r.combined", std::move(pm), lhs, rhs, tol);
        } catch (const Error& e) {
            return detail::error_report("r.combined", std::move(pm), e);
        }
    });
}

// Consistency of the composed chi = gamma/2 coefficients with the gamma-step
// coefficient (pure algebra, no R evaluations).
inline IdentityReport check_r_shift_composition(const ReflectionArgs& a,
                                                const LiouvilleParams& p,
                                                double tol) {
    return detail::timed([&] {
        ParamMap pm = detail::reflection_params(a);
        try {
            const double g = p.gamma;
            const double chi = g / 2.0;
            const double c = detail::c_chi(chi, p);
            // step 1: (beta, sigma1) -> (beta+chi, sigma1 - chi/2)
            const Complex f1 = c * cgamma(-1.0 + chi * a.beta - chi * chi) *
                               cgamma(1.0 - chi * a.beta) *
                               (g_chi(a.sigma2, chi, p) -
                                g_chi(a.sigma1 - a.beta / 2.0, chi, p));
            // step 2 from the shifted point back to sigma1
            const Complex b2 = a.beta + chi;
            const Complex f2 = c * cgamma(-1.0 + chi * b2 - chi * chi) *
                               cgamma(1.0 - chi * b2) *
                               (g_chi(a.sigma2, chi, p) -
                                g_chi(a.sigma1 - chi / 2.0 + b2 / 2.0, chi, p));
            const Complex lhs = f1 * f2;

            const Complex b = a.beta;
            const double s4 = std::pow(g / 2.0, 4.0);
            const Complex gammas =
                cgamma(-1.0 + g * b / 2.0 - g * g / 4.0) *
                cgamma(1.0 - g * b / 2.0 - g * g / 4.0) * cgamma(1.0 - g * b / 2.0) *
                cgamma(-1.0 + g * b / 2.0) /
                (std::sin(detail::kPi * g * g / 4.0) *
                 std::pow(std::tgamma(1.0 - g * g / 4.0), 2.0));
            auto sg = [&](Complex z) { return std::sin(g * detail::kPi / 2.0 * z); };
            const double Q = p.Q();
            const Complex rhs =
                s4 * gammas * 4.0 * sg(b / 2.0 - a.sigma1 - a.sigma2 + Q) *
                sg(b / 2.0 + a.sigma1 + a.sigma2 - Q) * sg(b / 2.0 + a.sigma2 - a.sigma1) *
                sg(b / 2.0 + a.sigma1 - a.sigma2);
            return detail::finish_report("r.shift_composition", std::move(pm), lhs,
                                         rhs, tol);
        } catch (const Error& e) {
            return detail::error_report("r.shift_composition", std::move(pm), e);
        }
    });
}

inline IdentityReport check_r_reflection(const ReflectionArgs& a,
                                         const LiouvilleParams& p, double tol) {
    return detail::timed([&] {
        ParamMap pm = detail::reflection_params(a);
        try {
            ReflectionArgs b = a;
            b.beta = 2.0 * p.Q() - a.beta;
            const Complex lhs = r_fzz(a, p) * r_fzz(b, p);
            return detail::finish_report("r.reflection", std::move(pm), lhs,
                                         Complex(1.0, 0.0), tol);
        } catch (const Error& e) {
            return detail::error_report("r.reflection", std::move(pm), e);
        }
    });
}

// H(beta1) = R(beta1, sigma1, sigma2) H(2Q - beta1), and the bare-integral
// reflection J(beta1) = J(2Q - beta1).
inline std::vector<IdentityReport> check_h_reflection(const ThreePointArgs& a,
                                                      const LiouvilleParams& p,
                                                      const QuadSettings& s,
                                                      double tol) {
    std::vector<IdentityReport> out;
    out.push_back(detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        try {
            ThreePointArgs b = a;
            b.beta1 = 2.0 * p.Q() - a.beta1;
            ReflectionArgs r;
            r.beta = a.beta1;
            r.sigma1 = a.sigma1;
            r.sigma2 = a.sigma2;
            const Complex lhs = h_pt(a, p, s);
            const Complex rhs = r_fzz(r, p) * h_pt(b, p, s);
            return detail::finish_report("h.reflection", std::move(pm), lhs, rhs, tol);
        } catch (const Error& e) {
            return detail::error_report("h.reflection", std::move(pm), e);
        }
    }));
    out.push_back(detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        try {
            ThreePointArgs b = a;
            b.beta1 = 2.0 * p.Q() - a.beta1;
            const Complex lhs = j_pt(a, p, s);
            const Complex rhs = j_pt(b, p, s);
            return detail::finish_report("j.reflection", std::move(pm), lhs, rhs, tol);
        } catch (const Error& e) {
            return detail::error_report("j.reflection", std::move(pm), e);
        }
    }));
    return out;
}

// ---------------------------------------------------------------------------
// residue checks
// ---------------------------------------------------------------------------

namespace detail {

inline const std::vector<double>& residue_eps_seq() {
    static const std::vector<double> seq = {0.08, 0.04, 0.02, 0.01, 0.005, 0.0025};
    return seq;
}

}  // namespace detail

// Three reports: the two residue limits of H_PT in beta1 and the ratio of the
// corresponding bare-integral residues against its closed form.
inline std::vector<IdentityReport> check_h_residues(const ThreePointArgs& a,
                                                    const LiouvilleParams& p,
                                                    const QuadSettings& s,
                                                    double tol) {
    const double Q = p.Q();
    const double g = p.gamma;
    const Complex beta0 = 2.0 * Q - a.beta2 - a.beta3;
    std::vector<IdentityReport> out;

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        try {
            auto fn = [&](double eps) {
                ThreePointArgs b = a;
                b.beta1 = beta0 + eps;
                return Complex(eps / 2.0, 0.0) * h_pt(b, p, s);
            };
            const Complex lim = extrapolate_limit(fn, detail::residue_eps_seq());
            return detail::finish_report("h.residue_first", std::move(pm), lim,
                                         Complex(1.0, 0.0), tol);
        } catch (const Error& e) {
            return detail::error_report("h.residue_first", std::move(pm), e);
        }
    }));

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        try {
            auto fn = [&](double eps) {
                ThreePointArgs b = a;
                b.beta1 = beta0 - g + eps;
                return Complex(eps / 2.0, 0.0) * h_pt(b, p, s);
            };
            const Complex lim = extrapolate_limit(fn, detail::residue_eps_seq());

            const double sq = std::sqrt(1.0 / std::sin(detail::kPi * g * g / 4.0));
            const Complex trig =
                std::cos(detail::kPi * g * (a.sigma1 - Q / 2.0)) *
                    std::sin(detail::kPi * g * a.beta2 / 2.0) +
                std::cos(detail::kPi * g * (a.sigma2 - Q / 2.0)) *
                    std::sin(detail::kPi * g * a.beta3 / 2.0) -
                std::cos(detail::kPi * g * (a.sigma3 - Q / 2.0)) *
                    std::sin(detail::kPi * g * (a.beta2 + a.beta3) / 2.0);
            const Complex rhs = -1.0 / detail::kPi * sq *
                                cgamma(1.0 - g * a.beta2 / 2.0) *
                                cgamma(1.0 - g * a.beta3 / 2.0) *
                                cgamma(g * a.beta2 / 2.0 + g * a.beta3 / 2.0 - 1.0) *
                                trig;
            return detail::finish_report("h.residue_second", std::move(pm), lim, rhs,
                                         tol);
        } catch (const Error& e) {
            return detail::error_report("h.residue_second", std::move(pm), e);
        }
    }));

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        try {
            auto first = [&](double eps) {
                ThreePointArgs b = a;
                b.beta1 = beta0 + eps;
                return Complex(eps / 2.0, 0.0) * j_pt(b, p, s);
            };
            auto second = [&](double eps) {
                ThreePointArgs b = a;
                b.beta1 = beta0 - g + eps;
                return Complex(eps / 2.0, 0.0) * j_pt(b, p, s);
            };
            const Complex l1 = extrapolate_limit(first, detail::residue_eps_seq());
            const Complex l2 = extrapolate_limit(second, detail::residue_eps_seq());
            const Complex lhs = l2 / l1;

            // closed form of the ratio, from the two explicit residue limits
            // of the bare integral reduced with the gamma/2 sine shifts
            const Complex u2 = (a.beta2 + a.beta3) / 2.0;
            auto sg = [&](Complex z) { return std::sin(detail::kPi * g / 2.0 * z); };
            const Complex trig =
                std::sin(detail::kPi * g * a.beta2 / 2.0) *
                    std::cos(detail::kPi * g / 2.0 * (2.0 * a.sigma1 - g / 2.0)) +
                std::sin(detail::kPi * g * a.beta3 / 2.0) *
                    std::cos(detail::kPi * g / 2.0 * (2.0 * a.sigma2 - g / 2.0)) -
                std::sin(detail::kPi * g * (a.beta2 + a.beta3) / 2.0) *
                    std::cos(detail::kPi * g / 2.0 * (2.0 * a.sigma3 - g / 2.0));
            const Complex s1 = sg(2.0 / g - a.beta3);
            const Complex s2 = sg(2.0 / g - u2 + a.sigma1 - a.sigma2);
            const Complex s3 = sg(a.sigma1 + a.sigma2 - u2 - g / 2.0);
            const Complex s4 = sg(Q + 2.0 / g - a.beta2 - a.beta3);
            const Complex rhs = trig * s4 /
                                (2.0 * std::sin(detail::kPi * g * g / 4.0) * s1 * s2 * s3);
            return detail::finish_report("j.residue_ratio", std::move(pm), lhs, rhs,
                                         tol);
        } catch (const Error& e) {
            return detail::error_report("j.residue_ratio", std::move(pm), e);
        }
    }));

    return out;
}

// ---------------------------------------------------------------------------
// three-term relation for the bare integral
// ---------------------------------------------------------------------------

struct ThreeTermCoeffs {
    Complex f1, f2, f3, f4;
    Complex a_chi, b_chi;
};

namespace detail {

// Coefficients of the first-order shift system obeyed by the bare contour
// integral, re-derived from the proven shift equations of H and the explicit
// H <-> J normalization.  The ordinary-Gamma factors cancel in closed form
// through chi*Q = chi^2 + 1 reflections, leaving pure sine ratios, so the
// composed three-term coefficients are manifestly 2/chi-periodic in beta1.
struct ShiftCoeffFns {
    double chi;
    Complex beta3, sigma1, sigma2, sigma3;
    double Q;

    Complex sn(Complex z) const { return std::sin(kPi * chi * z); }

    Complex f1(Complex b1, Complex) const {
        return sn(b1 / 2.0 + sigma1 - sigma2 - chi) / sn(b1 - chi);
    }
    Complex f2(Complex b1, Complex) const {
        return sn(b1 / 2.0 - sigma1 + sigma2) / sn(chi - b1);
    }
    Complex f3(Complex b1, Complex b2) const {
        const Complex bbar = b1 + b2 + beta3;
        return sn((bbar - 3.0 * chi) / 2.0) * sn((b1 + b2 - beta3 - chi) / 2.0) *
               sn(b1 / 2.0 + sigma1 + sigma2 - Q - chi / 2.0) /
               (sn(b1 - chi) * sn(b2 / 2.0 + sigma2 + sigma3 - Q) *
                sn(sigma3 - sigma2 - b2 / 2.0));
    }
    Complex f4(Complex b1, Complex b2) const {
        return -sn(sigma1 + sigma2 - b1 / 2.0 + chi / 2.0 - Q) *
               sn((b1 - b2 - beta3 + chi) / 2.0) * sn((b1 + beta3 - b2 - chi) / 2.0) /
               (sn(chi - b1) * sn(b2 / 2.0 + sigma2 + sigma3 - Q) *
                sn(sigma3 - sigma2 - b2 / 2.0));
    }
};

}  // namespace detail

// Coefficients of J(beta1 + 4chi) + a_chi J(beta1 + 2chi) + b_chi J(beta1) = 0.
inline ThreeTermCoeffs three_term_coeffs(double chi, Complex beta1,
                                         const ThreePointArgs& fixed,
                                         const LiouvilleParams& p) {
    detail::ShiftCoeffFns fns{chi,          fixed.beta3,  fixed.sigma1,
                              fixed.sigma2, fixed.sigma3, p.Q()};
    const Complex b2 = fixed.beta2;
    ThreeTermCoeffs c;
    c.f1 = fns.f1(beta1 + 2.0 * chi, b2 + chi);
    c.f2 = fns.f2(beta1 + 2.0 * chi, b2 + chi);
    c.f3 = fns.f3(beta1 + chi, b2);
    c.f4 = fns.f4(beta1 + chi, b2);
    const Complex f3_hi = fns.f3(beta1 + 3.0 * chi, b2);
    const Complex f4_hi = fns.f4(beta1 + 3.0 * chi, b2);
    const Complex denom = c.f2 * f4_hi;
    c.a_chi = (-1.0 + c.f1 * c.f4 + c.f2 * f3_hi) / denom;
    c.b_chi = c.f1 * c.f3 / denom;
    return c;
}

inline IdentityReport check_three_term(double chi, const ThreePointArgs& a,
                                       const LiouvilleParams& p,
                                       const QuadSettings& s, double tol) {
    const std::string suffix =
        (std::abs(chi - p.gamma / 2.0) < 1e-12) ? "chi_half" : "chi_inv";
    return detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        detail::put(pm, "chi", Complex(chi, 0.0));
        const std::string name = "j.three_term_" + suffix;
        try {
            const auto c = three_term_coeffs(chi, a.beta1, a, p);
            ThreePointArgs a0 = a, a2 = a, a4 = a;
            a2.beta1 += 2.0 * chi;
            a4.beta1 += 4.0 * chi;
            const Complex j0 = j_pt(a0, p, s);
            const Complex j2 = j_pt(a2, p, s);
            const Complex j4 = j_pt(a4, p, s);
            const Complex lhs = j4 + c.a_chi * j2;
            const Complex rhs = -c.b_chi * j0;
            const double scale = std::max(
                {std::abs(j4), std::abs(c.a_chi * j2), std::abs(c.b_chi * j0)});
            IdentityReport r =
                detail::finish_report(name, std::move(pm), lhs, rhs, tol);
            // residual measured against the largest term of the relation
            r.rel_err = std::abs(lhs - rhs) / std::max(scale, 1e-300);
            r.pass = r.rel_err <= tol;
            return r;
        } catch (const Error& e) {
            return detail::error_report(name, std::move(pm), e);
        }
    });
}

inline IdentityReport check_three_term_periodicity(double chi, const ThreePointArgs& a,
                                                   const LiouvilleParams& p,
                                                   double tol) {
    const std::string suffix =
        (std::abs(chi - p.gamma / 2.0) < 1e-12) ? "chi_half" : "chi_inv";
    return detail::timed([&] {
        ParamMap pm = detail::threepoint_params(a);
        detail::put(pm, "chi", Complex(chi, 0.0));
        const std::string name = "coeff.periodicity_" + suffix;
        try {
            const auto c0 = three_term_coeffs(chi, a.beta1, a, p);
            const auto c1 = three_term_coeffs(chi, a.beta1 + 2.0 / chi, a, p);
            const double da = std::abs(c0.a_chi - c1.a_chi) /
                              std::max(std::abs(c0.a_chi), 1e-300);
            const double db = std::abs(c0.b_chi - c1.b_chi) /
                              std::max(std::abs(c0.b_chi), 1e-300);
            IdentityReport r = detail::finish_report(name, std::move(pm), c0.a_chi,
                                                     c1.a_chi, tol);
            r.rel_err = std::max(da, db);
            r.abs_err = std::max(std::abs(c0.a_chi - c1.a_chi),
                                 std::abs(c0.b_chi - c1.b_chi));
            r.pass = r.rel_err <= tol;
            return r;
        } catch (const Error& e) {
            return detail::error_report(name, std::move(pm), e);
        }
    });
}

// ---------------------------------------------------------------------------
// special values of R
// ---------------------------------------------------------------------------

inline std::vector<IdentityReport> check_special_values(const ReflectionArgs& a,
                                                        const LiouvilleParams& p,
                                                        double tol) {
    std::vector<IdentityReport> out;
    const double g = p.gamma;
    const double Q = p.Q();

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::reflection_params(a);
        try {
            ReflectionArgs q = a;
            q.beta = Complex(Q, 0.0);
            return detail::finish_report("r.value_at_q", std::move(pm), r_fzz(q, p),
                                         Complex(-1.0, 0.0), tol);
        } catch (const Error& e) {
            return detail::error_report("r.value_at_q", std::move(pm), e);
        }
    }));

    // closed form at beta = gamma (needs 4/gamma^2 away from the integers)
    const double four_over_g2 = 4.0 / (g * g);
    if (std::abs(four_over_g2 - std::round(four_over_g2)) > 1e-3) {
        out.push_back(detail::timed([&] {
            ParamMap pm = detail::reflection_params(a);
            try {
                ReflectionArgs ga = a;
                ga.beta = Complex(g, 0.0);
                const Complex lhs = r_fzz(ga, p);

                const double pref =
                    std::pow(detail::kPi * std::tgamma(g * g / 4.0) /
                                 std::tgamma(1.0 - g * g / 4.0),
                             2.0 / (g * g) - 0.5) *
                    std::tgamma(1.0 - 4.0 / (g * g)) / std::tgamma(1.0 - g * g / 4.0);
                const Complex num =
                    std::cos(4.0 * detail::kPi / g * (a.sigma1 - Q / 2.0)) -
                    std::cos(4.0 * detail::kPi / g * (a.sigma2 - Q / 2.0));
                const Complex den =
                    std::cos(g * detail::kPi * (a.sigma1 - Q / 2.0)) -
                    std::cos(g * detail::kPi * (a.sigma2 - Q / 2.0));
                const Complex rhs = pref * num / den;
                return detail::finish_report("r.value_at_gamma", std::move(pm), lhs,
                                             rhs, tol);
            } catch (const Error& e) {
                return detail::error_report("r.value_at_gamma", std::move(pm), e);
            }
        }));

        // sigma2 -> sigma1 merge: finite differences against the l'Hopital
        // extension of the cosine ratio
        out.push_back(detail::timed([&] {
            ParamMap pm = detail::reflection_params(a);
            try {
                auto fd = [&](double h) {
                    ReflectionArgs ga = a;
                    ga.beta = Complex(g, 0.0);
                    ga.sigma2 = a.sigma1 + h;
                    return r_fzz(ga, p);
                };
                const Complex lhs = extrapolate_limit(fd, {4e-3, 2e-3, 1e-3});
                const double pref =
                    std::pow(detail::kPi * std::tgamma(g * g / 4.0) /
                                 std::tgamma(1.0 - g * g / 4.0),
                             2.0 / (g * g) - 0.5) *
                    std::tgamma(1.0 - 4.0 / (g * g)) / std::tgamma(1.0 - g * g / 4.0);
                const Complex rhs =
                    pref * four_over_g2 *
                    std::sin(4.0 * detail::kPi / g * (a.sigma1 - Q / 2.0)) /
                    std::sin(g * detail::kPi * (a.sigma1 - Q / 2.0));
                return detail::finish_report("r.value_at_gamma_merge", std::move(pm),
                                             lhs, rhs, tol);
            } catch (const Error& e) {
                return detail::error_report("r.value_at_gamma_merge", std::move(pm), e);
            }
        }));
    }
    return out;
}

// ---------------------------------------------------------------------------
// double-sine integral identities
// ---------------------------------------------------------------------------

// integral of e^{2 pi i tau b'} e^{i pi tau (a'-Q)} S(tau+a')/S(tau+Q) dtau
// equals i e^{i pi a'(Q-a')/2} e^{-i pi a' b'} S(a')S(b')/S(a'+b').
inline IdentityReport check_sine_integral_pt(Complex ap, Complex bp,
                                             const LiouvilleParams& p,
                                             const QuadSettings& s, double tol) {
    return detail::timed([&] {
        ParamMap pm;
        detail::put(pm, "a_prime", ap);
        detail::put(pm, "b_prime", bp);
        try {
            const double Q = p.Q();
            const double kp = detail::kTwoPi * bp.real();
            const double km = detail::kTwoPi * (Q - ap.real() - bp.real());
            if (!(kp > 1e-9) || !(km > 1e-9))
                throw Error(ErrorKind::ConvergenceDomain,
                            "need Re b' > 0 and Re(a'+b') < Q");
            std::vector<PoleLattice> left = {{-ap, PoleLattice::Dir::Left}};
            std::vector<PoleLattice> right = {{{0.0, 0.0}, PoleLattice::Dir::Right}};
            const auto spec = plan_contour(left, right, p, std::min(kp, km), s.abs_tol);
            auto f = [&](Complex tau) {
                const Complex logv =
                    Complex(0.0, detail::kTwoPi) * tau * bp +
                    Complex(0.0, detail::kPi) * tau * (ap - Q) +
                    log_double_sine(tau + ap, p) - log_double_sine(tau + Q, p);
                return std::exp(logv);
            };
            // plain-d-tau integral = i * (d tau / i)-convention integral
            const Complex lhs = Complex(0.0, 1.0) * integrate_contour(f, spec, s);
            const Complex rhs =
                Complex(0.0, 1.0) *
                std::exp(Complex(0.0, detail::kPi / 2.0) * ap * (Q - ap) -
                         Complex(0.0, detail::kPi) * ap * bp +
                         log_double_sine(ap, p) + log_double_sine(bp, p) -
                         log_double_sine(ap + bp, p));
            return detail::finish_report("sineint.pt_cmp15", std::move(pm), lhs, rhs,
                                         tol);
        } catch (const Error& e) {
            return detail::error_report("sineint.pt_cmp15", std::move(pm), e);
        }
    });
}

// Kernel-shift identity: the sigma-shifted integral with phase e^{2 i pi (Q-alpha) u}
// equals S(Q-beta/2)/S(beta/2) times the bulk-boundary integrand integral.
inline IdentityReport check_sine_integral_d34a(const BulkBoundaryArgs& a,
                                               const LiouvilleParams& p,
                                               const QuadSettings& s, double tol) {
    return detail::timed([&] {
        ParamMap pm = detail::bulkboundary_params(a);
        try {
            const double Q = p.Q();
            const double kp = detail::kPi * (2.0 * Q - 2.0 * a.alpha.real() + a.beta.real());
            const double km = detail::kPi * (2.0 * a.alpha.real() + a.beta.real() - 2.0 * Q);
            if (!(kp > 1e-9) || !(km > 1e-9))
                throw Error(ErrorKind::ConvergenceDomain,
                            "need |Re alpha - Q| < Re beta / 2");
            std::vector<PoleLattice> left = {
                {a.beta / 4.0 - a.sigma, PoleLattice::Dir::Left},
                {a.sigma + a.beta / 4.0 - Q, PoleLattice::Dir::Left}};
            std::vector<PoleLattice> right = {
                {a.sigma - a.beta / 4.0, PoleLattice::Dir::Right},
                {Q - a.sigma - a.beta / 4.0, PoleLattice::Dir::Right}};
            const auto spec = plan_contour(left, right, p, std::min(kp, km), s.abs_tol);
            auto f = [&](Complex u) {
                const Complex logv =
                    Complex(0.0, detail::kTwoPi) * (Q - a.alpha) * u +
                    log_double_sine(a.sigma - a.beta / 4.0 - u, p) +
                    log_double_sine(a.sigma - a.beta / 4.0 + u, p) -
                    log_double_sine(a.sigma + a.beta / 4.0 + u, p) -
                    log_double_sine(a.sigma + a.beta / 4.0 - u, p);
                return std::exp(logv);
            };
            const Complex lhs = integrate_contour(f, spec, s);
            const Complex pref = std::exp(log_double_sine(Q - a.beta / 2.0, p) -
                                          log_double_sine(a.beta / 2.0, p));
            const Complex rhs = pref * j_hos(a, p, s);
            return detail::finish_report("sineint.d34a", std::move(pm), lhs, rhs, tol);
        } catch (const Error& e) {
            return detail::error_report("sineint.d34a", std::move(pm), e);
        }
    });
}

// ---------------------------------------------------------------------------
// hypergeometric connection and special-function suites
// ---------------------------------------------------------------------------

inline IdentityReport check_hyp_connection(uint64_t seed, double tol);

inline std::vector<IdentityReport> check_specialfn_suite(const LiouvilleParams& p,
                                                         double tol_shift,
                                                         double tol_inv);

// ---------------------------------------------------------------------------
// G_Hos residue checks
// ---------------------------------------------------------------------------

inline std::vector<IdentityReport> check_ghos_residues(const BulkBoundaryArgs& a,
                                                       const LiouvilleParams& p,
                                                       const QuadSettings& s,
                                                       double tol) {
    const double Q = p.Q();
    std::vector<IdentityReport> out;
    static const std::vector<double> eps_seq = {0.08, 0.04, 0.02, 0.01, 0.005, 0.0025};

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::bulkboundary_params(a);
        try {
            auto fn = [&](double eps) {
                BulkBoundaryArgs b = a;
                b.alpha = Q - a.beta / 2.0 + eps;
                return Complex(eps, 0.0) * g_hos(b, p, s);
            };
            const Complex lim = extrapolate_limit(fn, eps_seq);
            const Complex x = Q - a.beta / 2.0;
            const Complex rhs = std::exp(-0.5 * x * x * std::log(2.0));
            return detail::finish_report("ghos.residue_g", std::move(pm), lim, rhs,
                                         tol);
        } catch (const Error& e) {
            return detail::error_report("ghos.residue_g", std::move(pm), e);
        }
    }));

    out.push_back(detail::timed([&] {
        ParamMap pm = detail::bulkboundary_params(a);
        try {
            auto fn = [&](double eps) {
                BulkBoundaryArgs b = a;
                b.alpha = Q - a.beta / 2.0 + eps;
                return Complex(eps, 0.0) * j_hos(b, p, s);
            };
            const Complex lim = extrapolate_limit(fn, eps_seq);
            const Complex rhs =
                1.0 / (2.0 * detail::kPi) *
                std::exp(-2.0 * log_double_sine(Q - a.beta / 2.0, p));
            return detail::finish_report("ghos.residue_j", std::move(pm), lim, rhs,
                                         tol);
        } catch (const Error& e) {
            return detail::error_report("ghos.residue_j", std::move(pm), e);
        }
    }));
    return out;
}

// ---------------------------------------------------------------------------
// kernel smoke checks
// ---------------------------------------------------------------------------

inline std::vector<IdentityReport> check_kernels_finite(const FusionKernelArgs& fk,
                                                        const LiouvilleParams& p,
                                                        const QuadSettings& s) {
    std::vector<IdentityReport> out;
    out.push_back(detail::timed([&] {
        ParamMap pm;
        detail::put(pm, "alpha1p", fk.alpha1p);
        detail::put(pm, "alpha2p", fk.alpha2p);
        detail::put(pm, "alpha3p", fk.alpha3p);
        detail::put(pm, "alpha4p", fk.alpha4p);
        detail::put(pm, "P", fk.P);
        detail::put(pm, "Pprime", fk.Pprime);
        try {
            const Complex v = fusion_kernel(fk, p, s);
            IdentityReport r;
            r.identity_name = "kernel.fusion_finite";
            r.params = std::move(pm);
            r.lhs = v;
            r.rhs = v;
            r.pass = is_finite(v);
            return r;
        } catch (const Error& e) {
            return detail::error_report("kernel.fusion_finite", std::move(pm), e);
        }
    }));
    out.push_back(detail::timed([&] {
        ParamMap pm;
        ModularKernelArgs mk{fk.alpha1p, fk.P, fk.Pprime};
        detail::put(pm, "alphap", mk.alphap);
        detail::put(pm, "P", mk.P);
        detail::put(pm, "Pprime", mk.Pprime);
        try {
            const Complex v = modular_kernel(mk, p, s);
            IdentityReport r;
            r.identity_name = "kernel.modular_finite";
            r.params = std::move(pm);
            r.lhs = v;
            r.rhs = v;
            r.pass = is_finite(v);
            return r;
        } catch (const Error& e) {
            return detail::error_report("kernel.modular_finite", std::move(pm), e);
        }
    }));
    return out;
}

}  // namespace lcft

#include "lcft/verify_suite.hpp"
