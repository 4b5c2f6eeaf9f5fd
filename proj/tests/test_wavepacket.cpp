#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "tachyon/numeric.hpp"
#include "tachyon/wavepacket.hpp"

#include "oracles.hpp"

using namespace tachyon::wavepacket;
using tachyon::lorentz::Vec3;

namespace {

constexpr double kPi = std::numbers::pi;

const WavePacketSpec kNarrow = WavePacketSpec::bump_packet(1.25, 0.1, 1.0);
const WavePacketSpec kWide = WavePacketSpec::bump_packet(1.25, 0.2, 1.0);
const WavePacketSpec kSub =
    WavePacketSpec::bump_packet(0.6, 0.2, 1.0, Dispersion::Subluminal);

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(WavePacketSpec::bump_packet(1.05, 0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(WavePacketSpec::bump_packet(1.25, -0.1, 1.0), std::domain_error);
    CHECK_THROWS_AS(WavePacketSpec::power_tail_packet(-1.0, 1.0), std::domain_error);
    CHECK(kNarrow.group_velocity() == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
    CHECK(kSub.group_velocity() == doctest::Approx(0.6 / std::sqrt(1.36)).epsilon(1e-14));
    // compact support strictly inside |k| > m
    CHECK(kNarrow.profile(1.25, 0.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(kNarrow.profile(1.36, 0.0) == 0.0);
    CHECK(kNarrow.profile(1.25, 0.11) == 0.0);
}

TEST_CASE("packet field: golden complex value at (t,x) = (3, 5 xhat)") {
    const FieldValue v = packet_field_numeric(3.0, {5.0, 0.0, 0.0}, kNarrow);
    CHECK(v.value.real() == doctest::Approx(oracles::kRePhi_3_5).epsilon(1e-10));
    CHECK(v.value.imag() == doctest::Approx(oracles::kImPhi_3_5).epsilon(1e-10));
}

TEST_CASE("packet field: no phase at the origin, zero profile, axial guard") {
    const FieldValue v = packet_field_numeric(0.0, {0.0, 0.0, 0.0}, kNarrow);
    CHECK(v.value.imag() == doctest::Approx(0.0));
    CHECK(v.value.real() == doctest::Approx(oracles::kPhi_0_0).epsilon(1e-10));
    CHECK(v.value.real() > 0.0);

    WavePacketSpec off = kNarrow;
    off.normalization = 0.0;
    CHECK(std::abs(packet_field_numeric(3.0, {5.0, 0.0, 0.0}, off).value) == 0.0);

    CHECK_THROWS_AS(packet_field_numeric(3.0, {0.0, 5.0, 0.0}, kNarrow),
                    std::invalid_argument);
}

TEST_CASE("stationary point: golden values and the trajectory identity") {
    const StationaryPoint sp = stationary_point(3.0, {5.0, 0.0, 0.0}, 1.0);
    REQUIRE(sp.valid);
    CHECK(sp.k_s.x == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(sp.omega_s == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(sp.k_s.norm() / sp.omega_s == doctest::Approx(5.0 / 3.0).epsilon(1e-13));
    CHECK(sp.gamma_s == doctest::Approx(0.75).epsilon(1e-13));

    // t -> 0: k_s approaches the mode-support boundary m xhat
    const StationaryPoint edge = stationary_point(1e-12, {2.0, 0.0, 0.0}, 1.0);
    CHECK(edge.k_s.x == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(edge.omega_s == doctest::Approx(0.0));

    CHECK_FALSE(stationary_point(5.0, {3.0, 0.0, 0.0}, 1.0).valid);
    CHECK_FALSE(stationary_point(3.0, {3.0, 0.0, 0.0}, 1.0).valid);

    // |k_s| > m whenever t != 0
    for (double t : {0.1, 1.0, 4.0}) {
        const StationaryPoint s = stationary_point(t, {5.0, 0.0, 0.0}, 1.0);
        CHECK(s.k_s.norm() > 1.0);
    }
}

TEST_CASE("stationary phase estimate: scaling law and support flag") {
    const double vs = kWide.group_velocity();
    const auto at = [&](double t) {
        return std::abs(stationary_phase_estimate(t, {vs * t, 0, 0}, kWide).value);
    };
    // |estimate| is an exact t^{-3/2} power law along the trajectory
    for (double t : {100.0, 400.0, 1600.0}) {
        CHECK(at(2.0 * t) / at(t) == doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-12));
    }

    // far off trajectory the stationary momentum leaves the bump support
    const EstimateValue off = stationary_phase_estimate(100.0, {1000.0, 0, 0}, kWide);
    CHECK_FALSE(off.inside_support);
    CHECK(std::abs(off.value) == 0.0);

    CHECK_THROWS_AS(stationary_phase_estimate(300.0, {3.0, 0, 0}, kWide),
                    std::domain_error);
}

TEST_CASE("numeric field to estimate ratio: golden at t = 200, pi^{3/2} asymptote") {
    const double vs = kNarrow.group_velocity();
    const FieldValue num = packet_field_numeric(200.0, {vs * 200.0, 0, 0}, kNarrow);
    const EstimateValue est = stationary_phase_estimate(200.0, {vs * 200.0, 0, 0}, kNarrow);
    const double ratio = std::abs(num.value) / std::abs(est.value);
    CHECK(ratio == doctest::Approx(oracles::kRatio_t200).epsilon(1e-4));

    // deep in the asymptotic regime the full stationary-phase constant
    // (2 pi)^{3/2}/2^{3/2} = pi^{3/2} emerges
    const double vs2 = kWide.group_velocity();
    const FieldValue far = packet_field_numeric(8800.0, {vs2 * 8800.0, 0, 0}, kWide);
    const EstimateValue fest = stationary_phase_estimate(8800.0, {vs2 * 8800.0, 0, 0}, kWide);
    CHECK(std::abs(far.value) / std::abs(fest.value) ==
          doctest::Approx(std::pow(kPi, 1.5)).epsilon(0.01));
}

TEST_CASE("decay fit: tachyonic and subluminal packets both give -3/2") {
    const DecayFit tach = decay_exponent_fit(kWide, kWide.group_velocity(),
                                             {800, 1280, 2080, 3360, 5440, 8800});
    CHECK(std::abs(tach.slope + 1.5) <= 0.05);
    CHECK(tach.stderr_slope < 0.05);
    CHECK_FALSE(tach.stderr_flag);

    const DecayFit sub = decay_exponent_fit(kSub, kSub.group_velocity(),
                                            {1280, 2080, 3360, 5440, 8800, 14080});
    CHECK(std::abs(sub.slope + 1.5) <= 0.05);
    CHECK_FALSE(sub.stderr_flag);

    // ratios stabilize near pi^{3/2} across the fitted range
    for (const auto& s : tach.samples) {
        CHECK(s.ratio == doctest::Approx(std::pow(kPi, 1.5)).epsilon(0.03));
    }
}

TEST_CASE("decay fit preconditions") {
    CHECK_THROWS_AS(decay_exponent_fit(kWide, kWide.group_velocity(), {100, 200, 300}),
                    std::invalid_argument);  // less than a decade
    CHECK_THROWS_AS(decay_exponent_fit(kWide, 1.05, {100, 300, 1100}),
                    std::invalid_argument);  // trajectory momentum outside the bump
    CHECK_THROWS_AS(decay_exponent_fit(kWide, kWide.group_velocity(), {100, 1100}),
                    std::invalid_argument);  // too few points
}

TEST_CASE("phase along the trajectory advances as m sqrt(x^2 - t^2)") {
    const double vs = kWide.group_velocity();
    std::vector<double> residuals;
    for (double t : {800.0, 1280.0, 2080.0, 3360.0, 5440.0, 8800.0}) {
        const FieldValue v = packet_field_numeric(t, {vs * t, 0, 0}, kWide);
        const double lam = std::sqrt(vs * vs - 1.0) * t;  // sqrt(x^2 - t^2)
        const double resid = std::remainder(std::arg(v.value) - lam, 2.0 * kPi);
        residuals.push_back(resid);
    }
    // the offset is the constant Hessian phase; the drift must stay small
    double lo = HUGE_VAL, hi = -HUGE_VAL;
    for (double r : residuals) {
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    CHECK(hi - lo < 0.05);
}

TEST_CASE("trajectory peak: |phi| is maximized within a bump width of v_s t") {
    const double t = 500.0;
    const double vs = kWide.group_velocity();
    const double xs = vs * t;
    double best_x = 0.0, best = -1.0;
    for (double f = 0.90; f <= 1.101; f += 0.02) {
        const double x = xs * f;
        const double a = std::abs(packet_field_numeric(t, {x, 0, 0}, kWide).value);
        if (a > best) {
            best = a;
            best_x = x;
        }
    }
    // one bump width in momentum maps to roughly t dv ~ t w/omega in position
    const double dv_width = t * 0.2 / 0.75;
    CHECK(std::abs(best_x - xs) < dv_width);
}

TEST_CASE("norm analysis classifies the power-tail family by power counting") {
    struct Want {
        double beta;
        NormClass l2, l1;
    };
    const Want wants[] = {
        {0.75, NormClass::Divergent, NormClass::Divergent},
        {1.25, NormClass::Finite, NormClass::Divergent},
        {1.5, NormClass::Finite, NormClass::Divergent},
        {1.75, NormClass::Finite, NormClass::Divergent},
        {2.5, NormClass::Finite, NormClass::Finite},
    };
    for (const auto& w : wants) {
        const NormAnalysis na = norm_analysis(WavePacketSpec::power_tail_packet(w.beta, 1.0));
        CHECK(na.l2_weighted == w.l2);
        CHECK(na.l1_weighted == w.l1);
        // shell increments follow the analytic exponents 2-2beta and 2-beta
        CHECK(na.l2_increment_slope == doctest::Approx(2.0 - 2.0 * w.beta).epsilon(0.02));
        CHECK(na.l1_increment_slope == doctest::Approx(2.0 - w.beta).epsilon(0.02));
        CHECK(na.trace.size() >= 10);
        CHECK(na.trace.front().R == doctest::Approx(2.0));
    }
    CHECK_THROWS_AS(norm_analysis(kNarrow), std::invalid_argument);
}

TEST_CASE("threshold 1/omega singularity is integrable for bounded profiles") {
    // bounded f~ supported on m < |k| < 2m: partial integrals of |f~|/omega
    // converge (the divergence risk lives at large |k|, not at the threshold)
    const double m = 1.0;
    auto partial_l1 = [&](double R) {
        // f~ = 1 on (m, 2m): integrate only over the support slice below R
        const double u = std::acosh(std::min(R, 2.0 * m) / m);
        return 4.0 * kPi * m * m *
               tachyon::numeric::gk_integrate(
                   [&](double s) { return std::cosh(s) * std::cosh(s); }, 0.0, u, 1e-12);
    };
    const double near = partial_l1(2.0 * m);
    CHECK(std::isfinite(near));
    CHECK(near > 0.0);
    // increments above the support vanish: the trace has converged
    CHECK(partial_l1(8.0 * m) - partial_l1(4.0 * m) == doctest::Approx(0.0));
    CHECK(partial_l1(4.0 * m) == doctest::Approx(near).epsilon(1e-10));
}
