#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "tachyon/loopint.hpp"
#include "tachyon/numeric.hpp"

#include "oracles.hpp"

using namespace tachyon::loopint;

namespace {

constexpr double kPi = std::numbers::pi;

SelfEnergyParams params(double p2, double m0sq, double m1sq) {
    SelfEnergyParams p;
    p.p2 = p2;
    p.m0sq = m0sq;
    p.m1sq = m1sq;
    return p;
}

std::mt19937_64 rng(4242);

SelfEnergyParams random_params() {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double mag = std::pow(10.0, -2.0 + 5.0 * u(rng));
    SelfEnergyParams p;
    p.p2 = (u(rng) < 0.5 ? -1.0 : 1.0) * mag;
    p.m0sq = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.1 + 3.0 * u(rng));
    p.m1sq = 0.1 + 3.0 * u(rng);
    return p;
}

}  // namespace

TEST_CASE("feynman_delta endpoints and threshold") {
    const SelfEnergyParams flat = params(0.0, 1.0, 1.0);
    for (double x : {0.0, 0.25, 0.5, 1.0}) {
        CHECK(feynman_delta(x, flat) == doctest::Approx(1.0));
    }
    CHECK(feynman_delta(0.0, params(1.0, -1.0, 1.0)) == doctest::Approx(-1.0));
    CHECK(feynman_delta(1.0, params(1.0, -1.0, 1.0)) == doctest::Approx(1.0));
    CHECK(feynman_delta(0.5, params(4.0, 1.0, 1.0)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(feynman_delta(1.5, flat), std::domain_error);
}

TEST_CASE("roots: threshold double root and the golden-ratio pair") {
    const auto [tp, tm] = roots_xpm(params(4.0, 1.0, 1.0));
    CHECK(tp.real() == doctest::Approx(0.5).epsilon(1e-7));
    CHECK(tm.real() == doctest::Approx(0.5).epsilon(1e-7));

    const auto [xp, xm] = roots_xpm(params(1.0, -1.0, 1.0));
    CHECK(xp.real() == doctest::Approx((std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-14));
    CHECK(xm.real() == doctest::Approx(-(std::sqrt(5.0) + 1.0) / 2.0).epsilon(1e-14));

    CHECK_THROWS_AS(roots_xpm(params(0.0, 1.0, 1.0)), std::domain_error);
}

TEST_CASE("roots satisfy Delta(x+-) = 0 on randomized parameters") {
    for (int trial = 0; trial < 500; ++trial) {
        const SelfEnergyParams p = random_params();
        const auto [xp, xm] = roots_xpm(p);
        const auto delta = [&](std::complex<double> x) {
            return p.p2 * x * x - (p.p2 + p.m0sq - p.m1sq) * x +
                   std::complex<double>(p.m0sq, -p.eps_ir);
        };
        const double scale = std::abs(p.p2) * (1.0 + std::norm(xp) + std::norm(xm)) +
                             std::abs(p.m0sq) + p.m1sq;
        CHECK(std::abs(delta(xp)) < 1e-12 * scale);
        CHECK(std::abs(delta(xm)) < 1e-12 * scale);
    }
}

TEST_CASE("branch utility: ln(-A - i eps) = ln A - i pi") {
    std::uniform_real_distribution<double> u(0.01, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double A = u(rng);
        const auto v = log_minus_ieps(-A, 1e-30);
        CHECK(v.real() == doctest::Approx(std::log(A)).epsilon(1e-14));
        CHECK(v.imag() == doctest::Approx(-kPi).epsilon(1e-14));
        const auto w = log_minus_ieps(A, 1e-30);
        CHECK(w.imag() == doctest::Approx(0.0));
    }
    CHECK(xlogx({0.0, 0.0}) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("closed form: real below threshold, golden value at p2 = 1") {
    CHECK(I_closed(params(-1.0, 1.0, 1.0)).value.imag() == doctest::Approx(0.0));
    CHECK(I_closed(params(2.0, 1.0, 1.0)).value.imag() == doctest::Approx(0.0));
    CHECK(I_closed(params(2.0, 1.0, 1.0)).value.real() ==
          doctest::Approx(-0.429203673205103).epsilon(1e-12));

    const auto g = I_closed(params(1.0, -1.0, 1.0));
    CHECK(g.value.real() == doctest::Approx(oracles::kReI_golden).epsilon(1e-12));
    CHECK(g.value.imag() ==
          doctest::Approx(-kPi * (std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-14));

    CHECK_THROWS_AS(I_closed(params(0.0, 1.0, 1.0)), std::domain_error);
}

TEST_CASE("quadrature is the oracle: agreement across a 1000-point sweep") {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const SelfEnergyParams p = random_params();
        const auto cl = I_closed(p);
        const auto qd = I_quadrature(p);
        const double tol = std::max(1e-8 * std::abs(cl.value), 1e-10);
        worst = std::max(worst, std::abs(cl.value - qd.value) / tol);
        CHECK(std::abs(cl.value - qd.value) < tol);
    }
    CHECK(worst < 1.0);
}

TEST_CASE("quadrature covers p2 = 0") {
    CHECK(std::abs(I_quadrature(params(0.0, 1.0, 1.0)).value) < 1e-12);  // log 1 = 0
    // tachyonic internal line at p2 = 0: Delta = -1, so I = -i pi exactly
    const auto v = I_quadrature(params(0.0, -1.0, -1.0));
    CHECK(v.value.real() == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(v.value.imag() == doctest::Approx(-kPi).epsilon(1e-10));
}

TEST_CASE("im_measure: exact values and agreement with the closed form") {
    CHECK(im_measure(params(1.0, -1.0, 1.0)) ==
          doctest::Approx(-kPi * (std::sqrt(5.0) - 1.0) / 2.0).epsilon(1e-14));
    for (double p2 : {0.5, 1.0, 2.0, 3.0, 3.999}) {
        CHECK(im_measure(params(p2, 1.0, 1.0)) == 0.0);
    }
    for (int trial = 0; trial < 500; ++trial) {
        const SelfEnergyParams p = random_params();
        CHECK(std::abs(I_closed(p).value.imag() - im_measure(p)) < 1e-10);
    }
    // any m0sq < 0 forces a negative subinterval from Delta(0) = m0sq
    for (int trial = 0; trial < 200; ++trial) {
        SelfEnergyParams p = random_params();
        p.m0sq = -std::abs(p.m0sq) - 0.01;
        CHECK(im_measure(p) < 0.0);
    }
}

TEST_CASE("threshold analysis matches the measure scan") {
    const auto equal_mass = threshold_analysis(1.0, 1.0);
    REQUIRE(equal_mass.has_zero_region);
    CHECK(equal_mass.upper == doctest::Approx(4.0));

    const auto heavy = threshold_analysis(4.0, 1.0);
    CHECK(heavy.upper == doctest::Approx(9.0));

    CHECK_FALSE(threshold_analysis(-1.0, 1.0).has_zero_region);

    // scan: measure vanishes strictly below, not above
    for (double p2 = 0.25; p2 < 3.99; p2 += 0.25) {
        CHECK(im_measure(params(p2, 1.0, 1.0)) == 0.0);
    }
    for (double p2 = 4.01; p2 < 10.0; p2 += 0.5) {
        CHECK(im_measure(params(p2, 1.0, 1.0)) < 0.0);
    }
    CHECK_THROWS_AS(threshold_analysis(1.0, -1.0), std::domain_error);
}

TEST_CASE("amplitude: optical-theorem region and the tachyonic width") {
    SelfEnergyParams p = params(1.0, -1.0, 1.0);
    const auto M = amplitude(p, 0.01);
    CHECK(M.imag() ==
          doctest::Approx(-kPi * (std::sqrt(5.0) - 1.0) / 2.0 / (16.0 * kPi * kPi))
              .epsilon(1e-9));
    CHECK(std::abs(M.imag() - (-0.012295)) < 1e-6);

    CHECK(amplitude(params(2.0, 1.0, 1.0), 0.01).imag() == doctest::Approx(0.0));

    SelfEnergyParams off = params(2.0, 1.0, 1.0);
    off.kappa = 0.0;
    CHECK(std::abs(amplitude(off, 0.01)) == 0.0);
    CHECK_THROWS_AS(amplitude(p, 0.0), std::domain_error);
}

TEST_CASE("Schwarz reflection across the cut") {
    for (double p2 : {1.0, 5.0, 42.0}) {
        SelfEnergyParams up = params(p2, -1.0, 1.0);
        SelfEnergyParams dn = up;
        up.eps_ir = 1e-30;
        dn.eps_ir = -1e-30;
        const auto a = I_closed(up).value;
        const auto b = I_closed(dn).value;
        CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-13));
        CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-13));
        CHECK(std::abs(a.imag()) > 1e-3);  // genuinely in the Im != 0 region
    }
}

TEST_CASE("tachyonic internal line: Im I < 0 at every finite p2, fading at -infinity") {
    double prev = -HUGE_VAL;
    for (int j = 1; j <= 6; ++j) {
        const double im = im_measure(params(-std::pow(10.0, j), -1.0, 1.0));
        CHECK(im < 0.0);
        CHECK(std::abs(im) < (j == 1 ? 1.0 : std::abs(prev)));
        prev = im;
    }
}

TEST_CASE("figure2 dataset: shapes of the positive and negative m0sq panels") {
    std::vector<double> grid;
    for (int i = 0; i <= 100; ++i) grid.push_back(-10.0 + 0.2 * i);

    const auto pos = figure2_dataset(1.0, 1.0, grid);
    REQUIRE(pos.size() == grid.size());
    for (const auto& r : pos) {
        if (r.p2 < 4.0) CHECK(std::abs(r.imI) < 1e-12);
        if (r.p2 > 4.0 + 1e-6) CHECK(r.imI < 0.0);
        CHECK(r.method_agreement <= std::max(1e-8 * std::hypot(r.reI, r.imI), 1e-10));
    }

    const auto neg = figure2_dataset(-1.0, 1.0, grid);
    double prev_im = HUGE_VAL;
    for (const auto& r : neg) {
        CHECK(r.imI < -1e-6);
        // |Im| shrinks toward p2 -> -inf, so imI decreases along the
        // ascending grid while p2 stays well below the m0sq scale
        if (r.p2 <= -2.0) {
            CHECK(r.imI < prev_im + 1e-12);
            prev_im = r.imI;
        }
    }

    CHECK(figure2_dataset(1.0, 1.0, {}).empty());
}
