#pragma once

// Suite driver: deterministic parameter sampling, the remaining check
// implementations, canonical ordering, and single-report replay.
// Included at the end of verify.hpp.

#include <atomic>
#include <bit>

namespace lcft {

// ---------------------------------------------------------------------------
// deterministic RNG (documented generator: splitmix64, doubles from the top
// 53 bits; identical streams on every platform)
// ---------------------------------------------------------------------------

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  private:
    uint64_t state_;
};

// ---------------------------------------------------------------------------
// hypergeometric connection check (ODE propagation vs the Gamma-ratio matrix)
// ---------------------------------------------------------------------------

inline IdentityReport check_hyp_connection(uint64_t seed, double tol) {
    return detail::timed([&] {
        ParamMap pm;
        detail::put(pm, "seed", Complex(static_cast<double>(seed), 0.0));
        try {
            SplitMix64 rng(seed);
            double worst = 0.0;
            Complex worst_lhs{0, 0}, worst_rhs{0, 0};
            int done = 0;
            while (done < 10) {
                HypParams h{{rng.uniform(0.2, 1.0), 0.0},
                            {rng.uniform(1.0, 1.9), 0.0},
                            {rng.uniform(1.7, 2.6), 0.0}};
                if (detail::near_integer(h.C, 5e-2) ||
                    detail::near_integer(h.C - h.A - h.B, 5e-2) ||
                    detail::near_integer(h.A - h.B, 5e-2))
                    continue;

                // propagate the (C1, C2+) = (1, 0) solution from 0.1 to 0.9
                const double t0 = 0.1, t1 = 0.9;
                Complex f = detail::hyp_series(h.A, h.B, h.C, t0);
                Complex fp = hyp2f1_deriv(h, t0);
                const int steps = 4000;
                const double dt = (t1 - t0) / steps;
                auto acc = [&](double t, Complex fv, Complex fpv) {
                    return (h.A * h.B * fv - (h.C - (h.A + h.B + 1.0) * t) * fpv) /
                           (t * (1.0 - t));
                };
                double t = t0;
                for (int i = 0; i < steps; ++i) {
                    const Complex k1f = fp, k1p = acc(t, f, fp);
                    const Complex k2f = fp + dt / 2 * k1p,
                                  k2p = acc(t + dt / 2, f + dt / 2 * k1f, fp + dt / 2 * k1p);
                    const Complex k3f = fp + dt / 2 * k2p,
                                  k3p = acc(t + dt / 2, f + dt / 2 * k2f, fp + dt / 2 * k2p);
                    const Complex k4f = fp + dt * k3p,
                                  k4p = acc(t + dt, f + dt * k3f, fp + dt * k3p);
                    f += dt / 6 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
                    fp += dt / 6 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
                    t += dt;
                }

                // fit the t=1 basis at t1
                const double sreal = 1.0 - t1;
                const Complex sC(sreal, 0.0);
                const HypParams g1{h.A, h.B, h.A + h.B - h.C + 1.0};
                const HypParams g2{h.C - h.A, h.C - h.B, h.C - h.A - h.B + 1.0};
                const Complex e = h.C - h.A - h.B;
                const Complex G1 = detail::hyp_series(g1.A, g1.B, g1.C, sreal);
                const Complex G2 =
                    std::pow(sC, e) * detail::hyp_series(g2.A, g2.B, g2.C, sreal);
                const Complex G1p = -hyp2f1_deriv(g1, sreal);
                const Complex G2p =
                    -e * std::pow(sC, e - 1.0) *
                        detail::hyp_series(g2.A, g2.B, g2.C, sreal) -
                    std::pow(sC, e) * hyp2f1_deriv(g2, sreal);
                const Complex det = G1 * G2p - G2 * G1p;
                const Complex B1 = (f * G2p - fp * G2) / det;
                const Complex B2 = (fp * G1 - f * G1p) / det;

                const auto m = connection_matrix_01(h);
                const double r1 =
                    std::abs(B1 - m[0][0]) / std::max(1.0, std::abs(m[0][0]));
                const double r2 =
                    std::abs(B2 - m[1][0]) / std::max(1.0, std::abs(m[1][0]));
                if (std::max(r1, r2) > worst) {
                    worst = std::max(r1, r2);
                    worst_lhs = (r1 > r2) ? B1 : B2;
                    worst_rhs = (r1 > r2) ? m[0][0] : m[1][0];
                }
                ++done;
            }
            IdentityReport r = detail::finish_report("hyp.connection_ode",
                                                     std::move(pm), worst_lhs,
                                                     worst_rhs, tol);
            r.rel_err = worst;
            r.pass = worst <= tol;
            return r;
        } catch (const Error& e) {
            return detail::error_report("hyp.connection_ode", std::move(pm), e);
        }
    });
}

// ---------------------------------------------------------------------------
// special-function identity suite
// ---------------------------------------------------------------------------

inline std::vector<IdentityReport> check_specialfn_suite(const LiouvilleParams& p,
                                                         double tol_shift,
                                                         double tol_inv) {
    std::vector<IdentityReport> out;
    const double g = p.gamma;
    const double Q = p.Q();
    ParamMap pg;
    detail::put(pg, "gamma", Complex(g, 0.0));

    // grid of complex points clear of the lattices
    std::vector<Complex> grid;
    for (double re : {-1.31, -0.43, 0.37, 0.91, 1.73, 2.59, 3.11, 4.03}) {
        for (double im : {-0.83, 0.29, 1.57, 2.71, -1.93}) {
            const Complex x(re, im);
            bool clear = true;
            for (Complex probe : {x, x + g / 2.0, x + 2.0 / g, Q - x})
                if (lattice_query(LatticeKind::GammaPole, probe, p, 0.05)) clear = false;
            if (clear) grid.push_back(x);
            if (grid.size() >= 40) break;
        }
        if (grid.size() >= 40) break;
    }

    out.push_back(detail::timed([&] {
        try {
            double worst = 0.0;
            Complex wl{0, 0}, wr{0, 0};
            for (Complex x : grid) {
                const Complex lhs =
                    std::exp(log_double_gamma(x, p) - log_double_gamma(x + g / 2.0, p));
                const Complex rhs = cgamma(g * x / 2.0) *
                                    std::pow(Complex(g / 2.0, 0.0), -g * x / 2.0 + 0.5) /
                                    std::sqrt(2.0 * detail::kPi);
                const double rd = std::abs(lhs - rhs) / std::abs(rhs);
                if (rd > worst) { worst = rd; wl = lhs; wr = rhs; }
            }
            IdentityReport r =
                detail::finish_report("specialfn.shift_g1", pg, wl, wr, tol_shift);
            r.rel_err = worst;
            r.pass = worst <= tol_shift;
            return r;
        } catch (const Error& e) {
            return detail::error_report("specialfn.shift_g1", pg, e);
        }
    }));

    out.push_back(detail::timed([&] {
        try {
            double worst = 0.0;
            Complex wl{0, 0}, wr{0, 0};
            for (Complex x : grid) {
                const Complex lhs =
                    std::exp(log_double_gamma(x, p) - log_double_gamma(x + 2.0 / g, p));
                const Complex rhs = cgamma(2.0 * x / g) *
                                    std::pow(Complex(g / 2.0, 0.0), 2.0 * x / g - 0.5) /
                                    std::sqrt(2.0 * detail::kPi);
                const double rd = std::abs(lhs - rhs) / std::abs(rhs);
                if (rd > worst) { worst = rd; wl = lhs; wr = rhs; }
            }
            IdentityReport r =
                detail::finish_report("specialfn.shift_g2", pg, wl, wr, tol_shift);
            r.rel_err = worst;
            r.pass = worst <= tol_shift;
            return r;
        } catch (const Error& e) {
            return detail::error_report("specialfn.shift_g2", pg, e);
        }
    }));

    out.push_back(detail::timed([&] {
        try {
            double worst = 0.0;
            Complex wl{0, 0};
            for (Complex x : grid) {
                const Complex prod = std::exp(log_double_sine(x, p) +
                                              log_double_sine(Q - x, p));
                const double rd = std::abs(prod - 1.0);
                if (rd > worst) { worst = rd; wl = prod; }
            }
            IdentityReport r = detail::finish_report("specialfn.sine_inversion", pg,
                                                     wl, Complex(1.0, 0.0), tol_inv);
            r.rel_err = worst;
            r.pass = worst <= tol_inv;
            return r;
        } catch (const Error& e) {
            return detail::error_report("specialfn.sine_inversion", pg, e);
        }
    }));

    for (int which = 1; which <= 2; ++which) {
        out.push_back(detail::timed([&] {
            const std::string name =
                which == 1 ? "specialfn.sine_shift_1" : "specialfn.sine_shift_2";
            try {
                const double step = (which == 1) ? g / 2.0 : 2.0 / g;
                const double freq = (which == 1) ? g / 2.0 : 2.0 / g;
                double worst = 0.0;
                Complex wl{0, 0}, wr{0, 0};
                for (Complex x : grid) {
                    const Complex lhs = std::exp(log_double_sine(x + step, p) -
                                                 log_double_sine(x, p));
                    const Complex rhs =
                        2.0 * std::sin(detail::kPi * freq * x);
                    const double rd = std::abs(lhs - rhs) / std::abs(rhs);
                    if (rd > worst) { worst = rd; wl = lhs; wr = rhs; }
                }
                IdentityReport r = detail::finish_report(name, pg, wl, wr, tol_shift);
                r.rel_err = worst;
                r.pass = worst <= tol_shift;
                return r;
            } catch (const Error& e) {
                return detail::error_report(
                    which == 1 ? "specialfn.sine_shift_1" : "specialfn.sine_shift_2",
                    pg, e);
            }
        }));
    }

    out.push_back(detail::timed([&] {
        try {
            const Complex lhs = std::exp(log_double_gamma(Complex(Q, 0.0), p) -
                                         log_double_gamma(Complex(2.0 / g, 0.0), p));
            const Complex rhs(std::sqrt(2.0 * detail::kPi) * std::sqrt(g / 2.0), 0.0);
            return detail::finish_report("specialfn.gamma_q_ratio", pg, lhs, rhs,
                                         tol_shift);
        } catch (const Error& e) {
            return detail::error_report("specialfn.gamma_q_ratio", pg, e);
        }
    }));

    out.push_back(detail::timed([&] {
        try {
            const Complex v = double_gamma(Complex(Q / 2.0, 0.0), p);
            return detail::finish_report("specialfn.dgamma_qhalf", pg, v,
                                         Complex(1.0, 0.0), 1e-12);
        } catch (const Error& e) {
            return detail::error_report("specialfn.dgamma_qhalf", pg, e);
        }
    }));

    // |S| against the quadratic asymptotic: the magnitude ratio at heights 5
    // and 8 must agree within 5%
    out.push_back(detail::timed([&] {
        try {
            auto mag_ratio = [&](double Y) {
                const Complex x(0.8, Y);
                const Complex L = log_double_sine(x, p);
                const Complex quad = Complex(0.0, -detail::kPi / 2.0) * x * (x - Q);
                return std::exp(L.real() - quad.real());
            };
            const double r5 = mag_ratio(5.0), r8 = mag_ratio(8.0);
            IdentityReport r = detail::finish_report("specialfn.sine_asymptotic", pg,
                                                     Complex(r8, 0.0), Complex(r5, 0.0),
                                                     5e-2);
            r.rel_err = std::abs(r8 / r5 - 1.0);
            r.pass = r.rel_err < 5e-2;
            return r;
        } catch (const Error& e) {
            return detail::error_report("specialfn.sine_asymptotic", pg, e);
        }
    }));

    // ordinary Gamma: reflection and duplication at fixed non-lattice points
    out.push_back(detail::timed([&] {
        try {
            const Complex pts[] = {{0.37, 0.81}, {-1.3, 0.4}, {2.6, -1.9}, {0.91, 0.0}};
            double worst = 0.0;
            Complex wl{0, 0}, wr{0, 0};
            for (Complex apt : pts) {
                const Complex lhs = cgamma(apt) * cgamma(1.0 - apt);
                const Complex rhs = detail::kPi / std::sin(detail::kPi * apt);
                double rd = std::abs(lhs - rhs) / std::abs(rhs);
                const Complex lhs2 = cgamma(apt) * cgamma(apt + 0.5);
                const Complex rhs2 = std::sqrt(detail::kPi) *
                                     std::pow(Complex(2.0, 0.0), 1.0 - 2.0 * apt) *
                                     cgamma(2.0 * apt);
                rd = std::max(rd, std::abs(lhs2 - rhs2) / std::abs(rhs2));
                if (rd > worst) { worst = rd; wl = lhs; wr = rhs; }
            }
            IdentityReport r = detail::finish_report("specialfn.gamma_reflection", pg,
                                                     wl, wr, 1e-12);
            r.rel_err = worst;
            r.pass = worst <= 1e-12;
            return r;
        } catch (const Error& e) {
            return detail::error_report("specialfn.gamma_reflection", pg, e);
        }
    }));

    return out;
}

// ---------------------------------------------------------------------------
// suite sampling and execution
// ---------------------------------------------------------------------------

struct SuiteSettings {
    QuadSettings quad;
    std::map<std::string, double> tol_map;  // by identity-name prefix
    int jobs = 1;
};

inline std::map<std::string, double> default_tol_map() {
    return {
        {"specialfn.shift", 1e-10}, {"specialfn.sine_inversion", 1e-11},
        {"specialfn.sine_shift", 1e-10}, {"specialfn.gamma_q_ratio", 1e-10},
        {"specialfn.gamma_reflection", 1e-12}, {"hyp.connection_ode", 1e-8},
        {"r.shift", 1e-9}, {"r.combined", 1e-8}, {"r.shift_composition", 1e-10},
        {"r.reflection", 1e-10}, {"r.value_at_q", 1e-9}, {"r.value_at_gamma", 1e-9},
        {"r.value_at_gamma_merge", 1e-6},
        {"h.shift", 1e-6}, {"h.reflection", 1e-7}, {"j.reflection", 1e-7},
        {"h.residue", 1e-5}, {"j.residue_ratio", 1e-5}, {"j.three_term", 1e-5},
        {"coeff.periodicity", 1e-12}, {"ghos.residue", 1e-5},
        {"sineint.", 1e-6}, {"corr.", 1e-12},
    };
}

namespace detail {

inline double tol_for(const std::map<std::string, double>& m, const std::string& name,
                      double fallback = 1e-8) {
    // longest-prefix match
    double best = fallback;
    std::size_t best_len = 0;
    for (const auto& [k, v] : m) {
        if (name.rfind(k, 0) == 0 && k.size() > best_len) {
            best = v;
            best_len = k.size();
        }
    }
    return best;
}

// Deterministic sample of a Seiberg-range three-point configuration; the
// sigma3 band keeps Re sigma3 <= Q/2 + 1/(2 gamma) - gamma/4.
inline ThreePointArgs sample_threepoint(SplitMix64& rng, const LiouvilleParams& p) {
    const double g = p.gamma;
    const double Q = p.Q();
    for (int tries = 0; tries < 4000; ++tries) {
        ThreePointArgs a;
        double betas[3];
        for (double& b : betas) b = rng.uniform(g / 2.0 + 0.1, Q - 0.1);
        if (betas[0] + betas[1] + betas[2] <= 2.0 * Q + 0.1) continue;
        a.beta1 = Complex(betas[0], 0.0);
        a.beta2 = Complex(betas[1], 0.0);
        a.beta3 = Complex(betas[2], 0.0);
        auto draw_sigma = [&](double umax) {
            const double u = rng.uniform(-1.0, umax);
            const double v = rng.uniform(-0.3, 0.3);
            return Complex(Q / 2.0 + u * 0.8 / (2.0 * g), v);
        };
        a.sigma1 = draw_sigma(1.0);
        a.sigma2 = draw_sigma(1.0);
        const double u3max = std::min(1.0, (1.0 - g * g / 2.0) / 0.8);
        a.sigma3 = draw_sigma(u3max);

        // reject configurations whose prefactor arguments or contour seeds sit
        // within 0.05 of a lattice
        bool ok = true;
        const Complex w1 = (Q - a.beta1) / 2.0, w3 = (Q - a.beta3) / 2.0;
        const Complex gb = Q - a.beta2 / 2.0;
        const Complex probes_gamma[] = {gb - w1 - w3, gb - w1 + w3, gb + w1 - w3,
                                        gb + w1 + w3, Q - a.beta1, Q - a.beta2,
                                        Q - a.beta3};
        for (Complex x : probes_gamma)
            if (lattice_query(LatticeKind::GammaPole, x, p, 0.05)) ok = false;
        const Complex sb1 = a.beta3 / 2.0 - a.sigma1 + Q / 2.0;
        const Complex v3 = Q / 2.0 - a.sigma3;
        const Complex sb2 = a.beta1 / 2.0 + a.sigma1 - Q / 2.0;
        const Complex v2 = Q / 2.0 - a.sigma2;
        const Complex probes_sine[] = {sb1 - v3, sb1 + v3, sb2 - v2, sb2 + v2};
        for (Complex x : probes_sine) {
            if (lattice_query(LatticeKind::SinePole, x, p, 0.05)) ok = false;
            if (lattice_query(LatticeKind::SineZero, x, p, 0.05)) ok = false;
        }
        if (!ok) continue;
        try {
            auto [left, right] = pt_pole_seeds(a, p);
            (void)plan_contour(left, right, p, detail::jpt_decay_rate(p), 1e-12);
        } catch (const Error&) {
            continue;
        }
        return a;
    }
    throw Error(ErrorKind::DomainError, "three-point sampler failed to find a point");
}

inline ReflectionArgs sample_reflection(SplitMix64& rng, const LiouvilleParams& p) {
    const double g = p.gamma;
    const double Q = p.Q();
    const double lo = std::max(g / 2.0, 2.0 / g - g / 2.0) + 0.08;
    for (int tries = 0; tries < 4000; ++tries) {
        ReflectionArgs a;
        a.beta = Complex(rng.uniform(lo, Q - 0.08), 0.0);
        a.sigma1 = Complex(Q / 2.0 + rng.uniform(-1.0, 1.0) * 0.8 / (2.0 * g),
                           rng.uniform(-0.3, 0.3));
        a.sigma2 = Complex(Q / 2.0 + rng.uniform(-1.0, 1.0) * 0.8 / (2.0 * g),
                           rng.uniform(-0.3, 0.3));
        bool ok = true;
        // the closed form and its chi- and gamma-shifts must stay clear of
        // the lattices (sigma1 also moves by +-chi/2 in the shift checks)
        for (Complex b : {a.beta, a.beta + g / 2.0, a.beta + 2.0 / g, a.beta + g,
                          2.0 * Q - a.beta}) {
            for (Complex s1 : {a.sigma1, a.sigma1 - g / 4.0, a.sigma1 + g / 4.0,
                               a.sigma1 - 1.0 / g, a.sigma1 + 1.0 / g}) {
                const Complex w = Q - s1 - a.sigma2;
                const Complex d = a.sigma2 - s1;
                const Complex probes[] = {Q - w - b / 2.0, Q + w - b / 2.0,
                                          b / 2.0 - d, b / 2.0 + d};
                for (Complex x : probes) {
                    if (lattice_query(LatticeKind::SinePole, x, p, 0.04)) ok = false;
                    if (lattice_query(LatticeKind::SineZero, x, p, 0.04)) ok = false;
                }
            }
            // a near-pole of the Gamma ratio away from the balanced point b = Q
            if (std::abs(b - Q) > 0.02 &&
                (lattice_query(LatticeKind::GammaPole, b - Q, p, 0.04) ||
                 lattice_query(LatticeKind::GammaPole, Q - b, p, 0.04)))
                ok = false;
        }
        if (std::abs((a.beta - Q).real()) < 0.05) ok = false;
        if (!ok) continue;
        return a;
    }
    throw Error(ErrorKind::DomainError, "reflection sampler failed to find a point");
}

inline BulkBoundaryArgs sample_bulkboundary(SplitMix64& rng,
                                            const LiouvilleParams& p) {
    const double Q = p.Q();
    for (int tries = 0; tries < 4000; ++tries) {
        BulkBoundaryArgs a;
        const double beta = rng.uniform(0.3, std::min(Q - 0.2, 1.6));
        const double alo = Q - beta / 2.0 + 0.1;
        if (alo >= Q - 0.05) continue;
        a.beta = Complex(beta, 0.0);
        a.alpha = Complex(rng.uniform(alo, Q - 0.05), 0.0);
        const double smin = beta / 4.0 + 0.12, smax = Q - beta / 4.0 - 0.12;
        if (smin >= smax) continue;
        a.sigma = Complex(rng.uniform(smin, smax), 0.0);
        return a;
    }
    throw Error(ErrorKind::DomainError, "bulk-boundary sampler failed");
}

inline uint64_t params_hash(const IdentityReport& r) {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&](const void* data, std::size_t n) {
        const unsigned char* b = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [k, v] : r.params) {
        mix(k.data(), k.size());
        const double re = v.real(), im = v.imag();
        mix(&re, sizeof re);
        mix(&im, sizeof im);
    }
    return h;
}

}  // namespace detail

// Execute every identity check on deterministic pseudo-random samples.
// Failures come back as reports, never exceptions; ordering is canonical
// (name, then parameter hash) regardless of execution order.
inline std::vector<IdentityReport> run_suite(const std::vector<double>& gammas,
                                             int n_cases, uint64_t seed,
                                             const SuiteSettings& settings = {}) {
    for (double g : gammas) {
        LiouvilleParams probe(g);  // validates the range
        if (std::abs(g - std::sqrt(2.0)) < 1e-3)
            throw Error(ErrorKind::DomainError,
                        "gamma within 1e-3 of sqrt(2) is excluded from the suite");
    }
    const auto tols = settings.tol_map.empty() ? default_tol_map() : settings.tol_map;
    auto tol = [&](const char* name) { return detail::tol_for(tols, name); };

    std::vector<std::function<std::vector<IdentityReport>()>> tasks;
    const QuadSettings qs = settings.quad;

    for (double g : gammas) {
        tasks.push_back([g, tol] {
            LiouvilleParams p(g);
            return check_specialfn_suite(p, tol("specialfn.shift_g1"),
                                         tol("specialfn.sine_inversion"));
        });
        tasks.push_back([seed, tol] {
            return std::vector<IdentityReport>{
                check_hyp_connection(seed ^ 0x9e37u, tol("hyp.connection_ode"))};
        });

        SplitMix64 rng(seed ^ std::bit_cast<uint64_t>(g));
        // sine-integral identities: the exact substitution pair and a generic one
        {
            LiouvilleParams p(g);
            const double Q = p.Q();
            tasks.push_back([p, qs, tol, Q] {
                std::vector<IdentityReport> v;
                const Complex beta(0.9, 0.0);
                const Complex alpha(Q - 0.25, 0.0);  // Seiberg: alpha + beta/2 > Q
                v.push_back(check_sine_integral_pt(Q - beta / 2.0, Q - alpha, p, qs,
                                                   tol("sineint.pt_cmp15")));
                v.push_back(check_sine_integral_pt(Complex(0.45 * Q, 0.0),
                                                   Complex(0.35 * Q, 0.0), p, qs,
                                                   tol("sineint.pt_cmp15")));
                BulkBoundaryArgs ba;
                ba.beta = Complex(0.9, 0.0);
                ba.alpha = Complex(Q - 0.25, 0.0);
                ba.sigma = Complex(Q / 2.0 + 0.06, 0.0);
                v.push_back(check_sine_integral_d34a(ba, p, qs, tol("sineint.d34a")));
                BulkBoundaryArgs bb;
                bb.beta = Complex(1.1, 0.0);
                bb.alpha = Complex(Q - 0.35, 0.0);
                bb.sigma = Complex(Q / 2.0 - 0.09, 0.0);
                v.push_back(check_sine_integral_d34a(bb, p, qs, tol("sineint.d34a")));
                return v;
            });
        }

        for (int c = 0; c < n_cases; ++c) {
            LiouvilleParams p(g);
            const ThreePointArgs a3 = detail::sample_threepoint(rng, p);
            const ReflectionArgs ar = detail::sample_reflection(rng, p);
            const BulkBoundaryArgs ab = detail::sample_bulkboundary(rng, p);
            FusionKernelArgs fk;
            fk.alpha1p = Complex(rng.uniform(0.3, p.Q() - 0.3), 0.0);
            fk.alpha2p = Complex(rng.uniform(0.3, p.Q() - 0.3), 0.0);
            fk.alpha3p = Complex(rng.uniform(0.3, p.Q() - 0.3), 0.0);
            fk.alpha4p = Complex(rng.uniform(0.3, p.Q() - 0.3), 0.0);
            fk.P = Complex(rng.uniform(0.2, 1.0), 0.0);
            fk.Pprime = Complex(rng.uniform(0.2, 1.0), 0.0);

            tasks.push_back([p, a3, qs, tol] {
                std::vector<IdentityReport> v;
                for (double chi : {p.gamma / 2.0, 2.0 / p.gamma}) {
                    auto r = check_h_shift(chi, a3, p, qs, tol("h.shift1_chi_half"));
                    v.insert(v.end(), r.begin(), r.end());
                }
                return v;
            });
            tasks.push_back([p, ar, tol] {
                std::vector<IdentityReport> v;
                for (double chi : {p.gamma / 2.0, 2.0 / p.gamma}) {
                    auto r = check_r_shift(chi, ar, p, tol("r.shift1_chi_half"));
                    v.insert(v.end(), r.begin(), r.end());
                }
                v.push_back(check_r_combined(ar, p, tol("r.combined")));
                v.push_back(check_r_shift_composition(ar, p, tol("r.shift_composition")));
                v.push_back(check_r_reflection(ar, p, tol("r.reflection")));
                auto sv = check_special_values(ar, p, tol("r.value_at_q"));
                v.insert(v.end(), sv.begin(), sv.end());
                return v;
            });
            tasks.push_back([p, a3, qs, tol] {
                return check_h_reflection(a3, p, qs, tol("h.reflection"));
            });
            tasks.push_back([p, a3, qs, tol] {
                return check_h_residues(a3, p, qs, tol("h.residue_first"));
            });
            tasks.push_back([p, a3, qs, tol] {
                std::vector<IdentityReport> v;
                for (double chi : {p.gamma / 2.0, 2.0 / p.gamma}) {
                    v.push_back(check_three_term(chi, a3, p, qs, tol("j.three_term_chi_half")));
                    v.push_back(check_three_term_periodicity(chi, a3, p,
                                                             tol("coeff.periodicity_chi_half")));
                }
                return v;
            });
            tasks.push_back([p, ab, qs, tol] {
                return check_ghos_residues(ab, p, qs, tol("ghos.residue_g"));
            });
            tasks.push_back([p, fk, qs] { return check_kernels_finite(fk, p, qs); });
        }
    }

    std::vector<std::vector<IdentityReport>> results(tasks.size());
    const int jobs = std::max(1, settings.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    results[i] = tasks[i]();
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<IdentityReport> out;
    for (auto& v : results) out.insert(out.end(), v.begin(), v.end());
    std::sort(out.begin(), out.end(), [](const IdentityReport& a, const IdentityReport& b) {
        if (a.identity_name != b.identity_name) return a.identity_name < b.identity_name;
        return detail::params_hash(a) < detail::params_hash(b);
    });
    return out;
}

// Re-run a single identity check from its serialized parameters.
inline IdentityReport run_check(const std::string& name, const ParamMap& params,
                                const LiouvilleParams& p, const QuadSettings& qs,
                                double tol) {
    auto get = [&](const char* key) -> Complex {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        throw Error(ErrorKind::DomainError, std::string("missing parameter ") + key);
    };
    auto threepoint = [&] {
        ThreePointArgs a;
        a.beta1 = get("beta1");
        a.beta2 = get("beta2");
        a.beta3 = get("beta3");
        a.sigma1 = get("sigma1");
        a.sigma2 = get("sigma2");
        a.sigma3 = get("sigma3");
        return a;
    };
    auto reflection = [&] {
        ReflectionArgs a;
        a.beta = get("beta");
        a.sigma1 = get("sigma1");
        a.sigma2 = get("sigma2");
        return a;
    };
    auto bulkboundary = [&] {
        BulkBoundaryArgs a;
        a.alpha = get("alpha");
        a.beta = get("beta");
        a.sigma = get("sigma");
        return a;
    };

    auto pick = [&](std::vector<IdentityReport> v) {
        for (auto& r : v)
            if (r.identity_name == name) return r;
        throw Error(ErrorKind::DomainError, "check did not produce " + name);
    };

    if (name.rfind("h.shift", 0) == 0)
        return pick(check_h_shift(get("chi").real(), threepoint(), p, qs, tol));
    if (name.rfind("r.shift_composition", 0) == 0)
        return check_r_shift_composition(reflection(), p, tol);
    if (name.rfind("r.shift", 0) == 0)
        return pick(check_r_shift(get("chi").real(), reflection(), p, tol));
    if (name == "r.combined") return check_r_combined(reflection(), p, tol);
    if (name == "r.reflection") return check_r_reflection(reflection(), p, tol);
    if (name == "h.reflection" || name == "j.reflection")
        return pick(check_h_reflection(threepoint(), p, qs, tol));
    if (name.rfind("h.residue", 0) == 0 || name == "j.residue_ratio")
        return pick(check_h_residues(threepoint(), p, qs, tol));
    if (name.rfind("j.three_term", 0) == 0)
        return check_three_term(get("chi").real(), threepoint(), p, qs, tol);
    if (name.rfind("coeff.periodicity", 0) == 0)
        return check_three_term_periodicity(get("chi").real(), threepoint(), p, tol);
    if (name.rfind("r.value", 0) == 0)
        return pick(check_special_values(reflection(), p, tol));
    if (name.rfind("ghos.residue", 0) == 0)
        return pick(check_ghos_residues(bulkboundary(), p, qs, tol));
    if (name == "sineint.pt_cmp15")
        return check_sine_integral_pt(get("a_prime"), get("b_prime"), p, qs, tol);
    if (name == "sineint.d34a")
        return check_sine_integral_d34a(bulkboundary(), p, qs, tol);
    if (name == "hyp.connection_ode")
        return check_hyp_connection(static_cast<uint64_t>(get("seed").real()), tol);
    throw Error(ErrorKind::DomainError, "unknown identity name: " + name);
}

}  // namespace lcft
