// Test-only reference implementations and frozen high-precision values.
// Everything here is independent of the library evaluation paths it checks:
// closed forms from special functions, and constants produced by 30-digit
// product-form quadrature of the defining integrals.
#ifndef TACHYON_TESTS_ORACLES_HPP
#define TACHYON_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>

namespace oracles {

/// Pauli-Jordan commutator function of an ordinary m^2 > 0 scalar at timelike
/// separation |dt| > r >= 0:
///   C(dt, r) = i sgn(dt) (m/(4 pi lam)) J1(m lam),  lam = sqrt(dt^2 - r^2).
inline std::complex<double> pauli_jordan_timelike(double dt, double r, double m) {
    const double lam = std::sqrt(dt * dt - r * r);
    const double mag = m / (4.0 * M_PI * lam) * std::cyl_bessel_j(1, m * lam);
    return {0.0, (dt >= 0.0 ? 1.0 : -1.0) * mag};
}

// Im C(dt=0.5, r=2, m=1) for the tachyonic |k|>m kernel.
inline constexpr double kImC_tachyon_0p5_2 = 5.6199055232093143e-3;

// Im C at the boost image of (dt=0, r=2) under rapidity 0.5,
// i.e. (dt', r') = (-2 sinh(1/2), 2 cosh(1/2)).
inline constexpr double kImC_tachyon_boosted = -1.1031524300808581e-2;

// Im C(dt=1.3, r=2.7, m=1), tachyonic kernel.
inline constexpr double kImC_tachyon_1p3_2p7 = 1.1097558790327811e-2;

// Finite part I(p2=1, m0sq=-1, m1sq=1): Re from 30-digit quadrature of
// int_0^1 ln|x^2+x-1| dx; Im is exactly -pi (sqrt(5)-1)/2.
inline constexpr double kReI_golden = -0.92397764758999;

// Wave packet bump(k0=1.25, w=0.1, m=1) at t=3, x=(5,0,0).
inline constexpr double kRePhi_3_5 = -7.79435439724039e-7;
inline constexpr double kImPhi_3_5 = -9.01782468572160e-7;
// Same packet at t=0, x=0 (real positive).
inline constexpr double kPhi_0_0 = 1.191970025988483e-6;
// |phi| / |stationary phase estimate| at t=200 on-trajectory.
inline constexpr double kRatio_t200 = 2.25360646;

// Gaussian-smeared delta overlap at rho=0.8, sigma=0.35.
inline constexpr double kOverlap_0p8_0p35 = 0.141820593541880;

}  // namespace oracles

#endif
