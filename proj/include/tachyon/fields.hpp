#ifndef TACHYON_FIELDS_HPP
#define TACHYON_FIELDS_HPP

#include <complex>

namespace tachyon::fields {

enum class Variant { Phi1, Phi2, SubluminalReference };
enum class ModeSupport { AboveM, BelowM, All };

/// Configuration of the c-number commutator integrals. The conditionally
/// convergent mode integrals are evaluated under an exp(-eta |k|) damping and
/// Richardson-extrapolated to eta -> 0; eta = 0 requests an automatic scale.
struct CommutatorKernel {
    double m = 1.0;
    Variant variant = Variant::Phi2;
    ModeSupport mode_support = ModeSupport::AboveM;
    double eta = 0.0;
    int richardson_levels = 8;
};

/// Rotational invariance reduces every kernel to the pair (dt, |dx|).
struct SpacetimeSeparation {
    double dt = 0.0;
    double r = 0.0;  // >= 0
};

struct CommutatorValue {
    std::complex<double> value;
    double error_estimate = 0.0;
};

/// Twin-field commutator under the transpose-like star: identically zero.
/// Returns the residual C_k - C_w of two independent evaluations of the same
/// mode integral (radial k-variable vs frequency-variable pipelines).
CommutatorValue phi1_commutator(const SpacetimeSeparation& sep, const CommutatorKernel& k);

/// Twin-field commutator under the adjoint-like star: equals the single-space
/// c-number
///   C(dt,r) = -2i int_{|k|>m} d3k/((2pi)^3 2w) sin(w dt - k.dx),
/// reduced to a damped radial integral. Vanishes at dt = 0 and is odd in dt.
CommutatorValue phi2_commutator(const SpacetimeSeparation& sep, const CommutatorKernel& k);

/// Same pipeline for an ordinary m^2 > 0 scalar over the full mode ball
/// (the Pauli-Jordan function); microcausal at spacelike separation.
CommutatorValue subluminal_commutator(const SpacetimeSeparation& sep,
                                      const CommutatorKernel& k);

/// Fourier transform of the missing |k| < m modes,
///   (sin(m r) - m r cos(m r)) / (2 pi^2 r^3),
/// continued to m^3/(6 pi^2) at r -> 0.
double equal_time_smooth_part_closed(double r, double m);

struct QuadratureValue {
    double value = 0.0;
    double error_estimate = 0.0;
};

/// The same quantity as (1/(2 pi^2 r)) int_0^m k sin(k r) dk by adaptive
/// quadrature; agrees with the closed form to 1e-10.
QuadratureValue equal_time_smooth_part_quadrature(double r, double m);

struct BoostProbe {
    std::complex<double> value_original;
    std::complex<double> value_boosted;
    std::complex<double> difference;
    double error_estimate = 0.0;
};

/// Evaluates the commutator at (dt, r) and at the boosted separation
/// (dt cosh chi - r sinh chi, |r cosh chi - dt sinh chi|). A nonzero
/// difference exhibits the frame dependence of the adjoint-convention
/// commutator. Requires a spacelike separation, r > |dt|.
BoostProbe boost_invariance_probe(const SpacetimeSeparation& sep, double rapidity,
                                  const CommutatorKernel& k);

/// Equal-time [Phi(f), dPhi/dt(g)] with normalized Gaussian smearings of
/// width sigma centered a distance rho apart. For the twin Phi1 field the
/// value is the residual of two independent routes (momentum-space vs
/// position-space with the closed-form smooth part) and must vanish; the
/// subluminal reference must reproduce i times the Gaussian overlap.
struct SmearedCcrResult {
    std::complex<double> value;
    std::complex<double> delta_term;  // i * overlap integral of the smearings
    double residual = 0.0;            // |value - expected|
    double error_estimate = 0.0;
};

SmearedCcrResult smeared_ccr(double rho, double sigma, const CommutatorKernel& k);

}  // namespace tachyon::fields

#endif
