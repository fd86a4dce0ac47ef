#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "lcft/contour.hpp"
#include "lcft/lngamma.hpp"

using lcft::Complex;
using lcft::ContourSpec;
using lcft::LiouvilleParams;
using lcft::PoleLattice;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("pt pole seeds, literal substitution") {
    LiouvilleParams p(1.4);
    const double Q = p.Q();
    lcft::ThreePointArgs a;
    a.beta1 = Complex(0.9, 0.0);
    a.beta2 = a.beta3 = Complex(0.0, 0.0);
    a.sigma1 = a.sigma2 = a.sigma3 = Complex(Q / 2.0, 0.0);
    auto [left, right] = lcft::pt_pole_seeds(a, p);
    REQUIRE(left.size() == 4);
    REQUIRE(right.size() == 4);
    REQUIRE(std::abs(left[0].seed - Complex(-Q, 0.0)) < 1e-14);
    REQUIRE(std::abs(left[1].seed - Complex(-Q, 0.0)) < 1e-14);
    REQUIRE(std::abs(left[2].seed) < 1e-14);
    REQUIRE(std::abs(left[3].seed - Complex(-Q, 0.0)) < 1e-14);
    // last two right seeds are always Q - 2 sigma3 and 0
    REQUIRE(std::abs(right[2].seed - Complex(Q - 2.0 * a.sigma3.real(), 0.0)) < 1e-14);
    REQUIRE(std::abs(right[3].seed) == 0.0);
}

TEST_CASE("generic Seiberg sample admits a straight contour") {
    LiouvilleParams p(1.2);
    const double Q = p.Q();
    lcft::ThreePointArgs a;
    a.beta1 = Complex(1.6, 0.0);
    a.beta2 = Complex(1.7, 0.0);
    a.beta3 = Complex(1.8, 0.0);
    a.sigma1 = Complex(Q / 2.0, 0.0);
    a.sigma2 = Complex(Q / 2.0 + 0.1, 0.0);
    a.sigma3 = Complex(Q / 2.0 - 0.1, 0.0);
    auto [left, right] = lcft::pt_pole_seeds(a, p);
    double max_left = -1e300, min_right = 1e300;
    for (auto& l : left) max_left = std::max(max_left, l.seed.real());
    for (auto& r : right) min_right = std::min(min_right, r.seed.real());
    REQUIRE(max_left < min_right);
    const auto spec = lcft::plan_contour(left, right, p, 2.0 * kPi * Q, 1e-12);
    REQUIRE(spec.corrections.empty());
    REQUIRE(spec.base_re > max_left);
    REQUIRE(spec.base_re < min_right);
}

TEST_CASE("hos pole seeds literal values") {
    LiouvilleParams p(1.2);
    const double Q = p.Q();
    const Complex alpha(1.8, 0.0), beta(0.9, 0.0);
    auto [left, right] = lcft::hos_pole_seeds(alpha, beta, p);
    REQUIRE(std::abs(left[0].seed - (Q - alpha - beta / 2.0) / 2.0) < 1e-14);
    REQUIRE(std::abs(left[1].seed - (alpha - beta / 2.0 - Q) / 2.0) < 1e-14);
    REQUIRE(std::abs(right[0].seed - (alpha + beta / 2.0 - Q) / 2.0) < 1e-14);
    REQUIRE(std::abs(right[1].seed - (Q - alpha + beta / 2.0) / 2.0) < 1e-14);
}

TEST_CASE("alpha = Q - beta/2 collides the Hosomichi lattices") {
    LiouvilleParams p(1.2);
    const Complex beta(0.9, 0.0);
    const Complex alpha = p.Q() - beta / 2.0;
    auto [left, right] = lcft::hos_pole_seeds(alpha, beta, p);
    REQUIRE_THROWS_MATCHES(
        lcft::plan_contour(left, right, p, 1.0, 1e-12), lcft::Error,
        Catch::Matchers::Predicate<lcft::Error>([](const lcft::Error& e) {
            return e.kind() == lcft::ErrorKind::PoleCollision;
        }));
}

TEST_CASE("no-gap plan lists exactly the stranded poles") {
    LiouvilleParams p(1.2);
    std::vector<PoleLattice> left = {{Complex(0.2, 0.3), PoleLattice::Dir::Left}};
    std::vector<PoleLattice> right = {{Complex(-0.1, -0.2), PoleLattice::Dir::Right}};
    const auto spec = lcft::plan_contour(left, right, p, 1.0, 1e-12);
    REQUIRE(std::abs(spec.base_re) <= 1.0);
    // exactly the lattice points stranded on the wrong side of the line are
    // listed, with the orientation signs
    for (const auto& c : spec.corrections) {
        if (c.sign == +1) REQUIRE(c.pole.real() >= spec.base_re);
        if (c.sign == -1) REQUIRE(c.pole.real() <= spec.base_re);
    }
    bool saw_left = false, saw_right = false;
    for (const auto& c : spec.corrections) {
        if (std::abs(c.pole - Complex(0.2, 0.3)) < 1e-14) {
            REQUIRE(c.sign == +1);
            saw_left = true;
        }
        if (std::abs(c.pole - Complex(-0.1, -0.2)) < 1e-14) {
            REQUIRE(c.sign == -1);
            saw_right = true;
        }
    }
    REQUIRE(saw_left == (0.2 >= spec.base_re));
    REQUIRE(saw_right == (-0.1 <= spec.base_re));
    // the left lattice head is right of any admissible line here
    REQUIRE(saw_left);
}

TEST_CASE("pt collision at beta1 = 2Q - beta2 - beta3") {
    LiouvilleParams p(1.2);
    const double Q = p.Q();
    lcft::ThreePointArgs a;
    a.beta2 = Complex(1.6, 0.0);
    a.beta3 = Complex(1.6, 0.0);
    a.beta1 = 2.0 * Q - a.beta2 - a.beta3;
    a.sigma1 = Complex(Q / 2.0, 0.0);
    a.sigma2 = Complex(Q / 2.0 + 0.13, 0.0);
    a.sigma3 = Complex(Q / 2.0 - 0.07, 0.0);
    auto [left, right] = lcft::pt_pole_seeds(a, p);
    REQUIRE_THROWS_MATCHES(
        lcft::plan_contour(left, right, p, 1.0, 1e-12), lcft::Error,
        Catch::Matchers::Predicate<lcft::Error>([](const lcft::Error& e) {
            return e.kind() == lcft::ErrorKind::PoleCollision;
        }));
}

TEST_CASE("gaussian line integral") {
    ContourSpec spec;
    spec.base_re = 0.0;
    spec.decay_rate = 4.0;
    spec.trunc_height = 7.0;
    lcft::QuadSettings s;
    const Complex v = lcft::integrate_contour(
        [](Complex r) { return std::exp(Complex(-r.imag() * r.imag(), 0.0)); }, spec, s);
    REQUIRE(std::abs(v - Complex(std::sqrt(kPi), 0.0)) < 1e-11);
}

TEST_CASE("residue correction equals a shifted straight line") {
    // meromorphic, gaussian decay on vertical lines, simple pole at 0.05
    // with residue exactly 1
    auto f = [](Complex z) {
        return std::exp(z * z - 0.05 * 0.05) / (z - 0.05);
    };
    lcft::QuadSettings s;

    ContourSpec right_line;
    right_line.base_re = 0.2;
    right_line.decay_rate = 2.0;
    right_line.trunc_height = 7.0;
    const Complex direct = lcft::integrate_contour(f, right_line, s);

    ContourSpec corrected;
    corrected.base_re = 0.0;
    corrected.decay_rate = 2.0;
    corrected.trunc_height = 7.0;
    corrected.corrections.push_back({Complex(0.05, 0.0), +1, 0.02});
    const Complex via_residue = lcft::integrate_contour(f, corrected, s);

    REQUIRE(std::abs(direct - via_residue) < 1e-10 * std::max(1.0, std::abs(direct)));
}

TEST_CASE("residue extraction classics") {
    auto inv = [](Complex z) { return 1.0 / z; };
    REQUIRE(std::abs(lcft::residue_at(inv, Complex(0, 0), 0.1) - 1.0) < 1e-12);

    auto inv2 = [](Complex z) { return 1.0 / (z * z); };
    REQUIRE(std::abs(lcft::residue_at(inv2, Complex(0, 0), 0.1)) < 1e-12);

    // Gamma has residue (-1)^n / n! at z = -n
    REQUIRE(std::abs(lcft::residue_at([](Complex z) { return lcft::cgamma(z); },
                                      Complex(0, 0), 0.1) -
                     1.0) < 1e-11);
    REQUIRE(std::abs(lcft::residue_at([](Complex z) { return lcft::cgamma(z); },
                                      Complex(-1.0, 0.0), 0.1) +
                     1.0) < 1e-11);
}
