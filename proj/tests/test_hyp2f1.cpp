#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "lcft/hyp2f1.hpp"
#include "oracle/oracle_values.hpp"

using lcft::Complex;
using lcft::HypParams;

namespace {

double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// Fixed-step RK4 propagation of the hypergeometric ODE
//   t(1-t) f'' + (C - (A+B+1) t) f' - A B f = 0
// used as an oracle that is independent of the connection formulas.
struct OdeState {
    Complex f, fp;
};

OdeState propagate(const HypParams& h, OdeState y, double t0, double t1, int steps) {
    auto rhs = [&](double t, const OdeState& s) {
        const Complex fpp =
            (h.A * h.B * s.f - (h.C - (h.A + h.B + 1.0) * t) * s.fp) /
            (t * (1.0 - t));
        return OdeState{s.fp, fpp};
    };
    const double dt = (t1 - t0) / steps;
    double t = t0;
    for (int i = 0; i < steps; ++i) {
        const OdeState k1 = rhs(t, y);
        const OdeState k2 = rhs(t + dt / 2, {y.f + dt / 2 * k1.f, y.fp + dt / 2 * k1.fp});
        const OdeState k3 = rhs(t + dt / 2, {y.f + dt / 2 * k2.f, y.fp + dt / 2 * k2.fp});
        const OdeState k4 = rhs(t + dt, {y.f + dt * k3.f, y.fp + dt * k3.fp});
        y.f += dt / 6 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
        y.fp += dt / 6 * (k1.fp + 2.0 * k2.fp + 2.0 * k3.fp + k4.fp);
        t += dt;
    }
    return y;
}

}  // namespace

TEST_CASE("2F1 at t=0 is 1") {
    for (auto h : {HypParams{{0.3, 0.1}, {1.2, -0.4}, {2.0, 0.3}},
                   HypParams{{-0.8, 0.0}, {2.3, 0.0}, {1.15, 0.0}}}) {
        REQUIRE(std::abs(lcft::hyp2f1(h, 0.0) - Complex(1.0, 0.0)) == 0.0);
    }
}

TEST_CASE("2F1 classical closed form") {
    // F(1,1;2;t) = -log(1-t)/t
    const Complex v = lcft::hyp2f1({{1.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}}, 0.5);
    REQUIRE(rel_diff(v, Complex(2.0 * std::log(2.0), 0.0)) < 1e-14);
}

TEST_CASE("2F1 matches the multiprecision oracle in all evaluation regions") {
    for (const auto& rec : lcft::oracle::kHyp2f1Oracle) {
        HypParams h{{rec.a_re, rec.a_im}, {rec.b_re, rec.b_im}, {rec.c_re, rec.c_im}};
        const Complex got = lcft::hyp2f1(h, rec.t);
        REQUIRE(rel_diff(got, Complex(rec.val_re, rec.val_im)) < 1e-12);
    }
}

TEST_CASE("connection matrices match the multiprecision Gamma-ratio oracle") {
    HypParams h{{0.3, 0.0}, {0.7, 0.0}, {1.4, 0.0}};
    const auto m01 = lcft::connection_matrix_01(h);
    const auto minf = lcft::connection_matrix_0inf(h);
    const double* o = lcft::oracle::kConn01;
    const double* oi = lcft::oracle::kConn0Inf;
    int k = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j, k += 2) {
            REQUIRE(rel_diff(m01[i][j], Complex(o[k], o[k + 1])) < 1e-12);
            REQUIRE(rel_diff(minf[i][j], Complex(oi[k], oi[k + 1])) < 1e-12);
        }
}

TEST_CASE("A=0 reduces the first connection row to (1, 0)") {
    HypParams h{{0.0, 0.0}, {0.75, 0.0}, {1.45, 0.0}};
    const auto m = lcft::connection_matrix_01(h);
    REQUIRE(rel_diff(m[0][0], Complex(1.0, 0.0)) < 1e-12);
    REQUIRE(std::abs(m[1][0]) < 1e-12);
}

TEST_CASE("ODE propagation reproduces the 0->1 connection matrix") {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> U(0.1, 0.9);
    int done = 0;
    while (done < 10) {
        HypParams h{{U(rng) + 0.1, 0.0}, {U(rng) + 1.0, 0.0}, {U(rng) + 1.6, 0.0}};
        const Complex gaps[] = {h.C, h.C - h.A - h.B, h.A - h.B};
        bool bad = false;
        for (Complex g : gaps)
            if (lcft::detail::near_integer(g, 5e-2)) bad = true;
        if (bad) continue;

        const double t0 = 0.1, t1 = 0.9;
        OdeState y{lcft::detail::hyp_series(h.A, h.B, h.C, t0),
                   lcft::hyp2f1_deriv(h, t0)};
        y = propagate(h, y, t0, t1, 4000);

        // solve for (B1, B2-) in the t=1 basis at t1
        const Complex s(1.0 - t1, 0.0);
        const HypParams g1{h.A, h.B, h.A + h.B - h.C + 1.0};
        const HypParams g2{h.C - h.A, h.C - h.B, h.C - h.A - h.B + 1.0};
        const Complex e = h.C - h.A - h.B;
        const Complex G1 = lcft::detail::hyp_series(g1.A, g1.B, g1.C, s.real());
        const Complex G2 = std::pow(s, e) *
                           lcft::detail::hyp_series(g2.A, g2.B, g2.C, s.real());
        const Complex G1p = -lcft::hyp2f1_deriv(g1, s.real());
        const Complex G2p =
            -e * std::pow(s, e - 1.0) *
                lcft::detail::hyp_series(g2.A, g2.B, g2.C, s.real()) -
            std::pow(s, e) * lcft::hyp2f1_deriv(g2, s.real());
        const Complex det = G1 * G2p - G2 * G1p;
        const Complex B1 = (y.f * G2p - y.fp * G2) / det;
        const Complex B2 = (y.fp * G1 - y.f * G1p) / det;

        const auto m = lcft::connection_matrix_01(h);
        REQUIRE(std::abs(B1 - m[0][0]) < 1e-8 * std::max(1.0, std::abs(m[0][0])));
        REQUIRE(std::abs(B2 - m[1][0]) < 1e-8 * std::max(1.0, std::abs(m[1][0])));
        ++done;
    }
}

TEST_CASE("degenerate connections are flagged") {
    // C - A - B exactly integer
    HypParams h{{0.3, 0.0}, {0.7, 0.0}, {2.0, 0.0}};
    REQUIRE_THROWS_MATCHES(
        lcft::hyp2f1(h, 0.7), lcft::Error,
        Catch::Matchers::Predicate<lcft::Error>([](const lcft::Error& e) {
            return e.kind() == lcft::ErrorKind::DegenerateConnection;
        }));
    REQUIRE_THROWS_AS(lcft::connection_matrix_01(h), lcft::Error);
    // A - B integer for the 0-inf matrix
    HypParams h2{{0.3, 0.0}, {1.3, 0.0}, {1.45, 0.0}};
    REQUIRE_THROWS_AS(lcft::connection_matrix_0inf(h2), lcft::Error);
}

TEST_CASE("series rejects non-positive integer C") {
    REQUIRE_THROWS_AS(lcft::hyp2f1({{0.3, 0.0}, {0.7, 0.0}, {-1.0, 0.0}}, 0.3),
                      lcft::Error);
}
