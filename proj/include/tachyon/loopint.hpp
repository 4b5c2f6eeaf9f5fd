#ifndef TACHYON_LOOPINT_HPP
#define TACHYON_LOOPINT_HPP

#include <complex>
#include <utility>
#include <vector>

namespace tachyon::loopint {

/// One-loop self-energy inputs: external momentum squared p2 (mostly-minus
/// metric), internal masses squared m0sq (sign free: negative for a tachyonic
/// internal line) and m1sq (> 0), coupling kappa = g*Lambda of mass dimension
/// one, regularization scale mu, and the magnitude of the -i*eps prescription
/// selecting the branch of the logs (sign may be flipped to probe the
/// reflected boundary value).
struct SelfEnergyParams {
    double p2 = 0.0;
    double m0sq = 0.0;
    double m1sq = 1.0;
    double kappa = 1.0;
    double mu = 1.0;
    double eps_ir = 1e-30;
};

enum class Method { ClosedForm, Quadrature, MeasureOracle };

struct ComplexResult {
    std::complex<double> value;
    double error_estimate = 0.0;
    Method method = Method::ClosedForm;
    bool boundary_root = false;  // a root of Delta landed within 1e-12 of {0,1}
};

/// Feynman-parameter denominator Delta(x) = -x(1-x)p2 + (1-x)m0sq + x m1sq.
double feynman_delta(double x, const SelfEnergyParams& p);

/// Roots x+- of Delta(x) = p2 x^2 - (p2 + m0sq - m1sq) x + m0sq with the
/// -i*eps shift applied to m0sq. Requires p2 != 0.
std::pair<std::complex<double>, std::complex<double>> roots_xpm(const SelfEnergyParams& p);

/// log(a - i*eps) for real a: equals ln|a| - i*pi when a < 0 (the branch used
/// throughout the finite part).
std::complex<double> log_minus_ieps(double a, double eps);

/// z*log(z) continued to 0 at z = 0.
std::complex<double> xlogx(const std::complex<double>& z);

/// Finite part of the bubble,
///   I(p2) = log(p2 - i eps) + (1-x+)log(1-x+) + (1-x-)log(1-x-) - 2
///           + x+ log(-x+) + x- log(-x-).
/// Requires p2 != 0 (use I_quadrature there).
ComplexResult I_closed(const SelfEnergyParams& p);

/// Same quantity as the direct Feynman-parameter integral
/// int_0^1 log(Delta(x) - i eps) dx, subdivided at the real roots of Delta.
/// This is the oracle route for I_closed and the value of record at p2 = 0.
ComplexResult I_quadrature(const SelfEnergyParams& p);

/// Im I from the support of Delta < 0:  -pi * |{x in [0,1] : Delta(x) < 0}|,
/// computed from the roots.
double im_measure(const SelfEnergyParams& p);

struct ThresholdResult {
    bool has_zero_region = false;
    double upper = 0.0;  // Im I = 0 exactly for p2 < upper when has_zero_region
};

/// For m0sq > 0 the imaginary part vanishes below the two-particle threshold
/// (sqrt(m0sq)+sqrt(m1sq))^2; for m0sq < 0 there is no such region at any
/// finite p2 (Delta(0) = m0sq < 0 keeps the measure positive).
ThresholdResult threshold_analysis(double m0sq, double m1sq);

/// Renormalization-free amplitude M = kappa^2/(16 pi^2) (I(p2) - UV) with
/// UV = 1/d_eps - gamma_E + ln(4 pi mu^2). The pole is reported, never
/// subtracted. Requires d_eps > 0.
std::complex<double> amplitude(const SelfEnergyParams& p, double d_eps);

struct Fig2Row {
    double p2;
    double reI, imI;
    double reI_err, imI_err;
    double method_agreement;  // |I_closed - I_quadrature|, 0 at p2 = 0
};

/// Both evaluation routes per grid point; throws if they disagree beyond
/// max(1e-8 |I|, 1e-10).
std::vector<Fig2Row> figure2_dataset(double m0sq, double m1sq,
                                     const std::vector<double>& p2_grid);

}  // namespace tachyon::loopint

#endif
