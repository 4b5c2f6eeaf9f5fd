#ifndef TACHYON_WAVEPACKET_HPP
#define TACHYON_WAVEPACKET_HPP

#include <complex>
#include <optional>
#include <vector>

#include "tachyon/lorentz.hpp"

namespace tachyon::wavepacket {

enum class Dispersion { Tachyonic, Subluminal };

/// Smooth compactly supported profile exp(-1/(1-s^2)), s = |k - k0|/width,
/// centered at k0 = k0mag * xhat. For a tachyonic packet the support must sit
/// strictly inside the mode region: k0mag - width > m.
struct BumpProfile {
    double k0mag = 0.0;
    double width = 0.0;
};

/// Bounded power-law profile (m/|k|)^beta on |k| > m (cut off at the mode
/// threshold); used by the norm classifier.
struct PowerTail {
    double beta = 0.0;
};

struct WavePacketSpec {
    double m = 1.0;
    Dispersion dispersion = Dispersion::Tachyonic;
    std::optional<BumpProfile> bump;
    std::optional<PowerTail> power_tail;
    double normalization = 1.0;

    static WavePacketSpec bump_packet(double k0mag, double width, double m,
                                      Dispersion d = Dispersion::Tachyonic);
    static WavePacketSpec power_tail_packet(double beta, double m);

    double omega(double ksq) const;       // dispersion relation from |k|^2
    double group_velocity() const;        // at the bump center
    double profile(double kpar, double kperp) const;  // f~(k), axial coordinates
    void validate() const;
};

struct FieldValue {
    std::complex<double> value;
    double error_estimate = 0.0;
};

/// phi(t,x) = N int_{supp} d3k/((2pi)^3 2 w) f~(k) e^{-i w t + i k.x}, reduced
/// to a 2D (k_par, k_perp) integral by axial symmetry; x must be parallel to
/// the packet center (or zero). Oscillation is resolved by adaptive cell
/// subdivision keyed to the local phase variation.
FieldValue packet_field_numeric(double t, const lorentz::Vec3& x, const WavePacketSpec& spec);

struct StationaryPoint {
    lorentz::Vec3 k_s;
    double omega_s = 0.0;
    double gamma_s = 0.0;  // 1/sqrt(v_s^2 - 1) for a tachyonic packet
    bool valid = false;    // requires |x| > |t|
};

/// Stationary point of w_k t - k.x for the tachyonic dispersion:
///   k_s = m x sgn(t)/sqrt(|x|^2 - t^2),  w_s = m |t|/sqrt(|x|^2 - t^2).
StationaryPoint stationary_point(double t, const lorentz::Vec3& x, double m);

/// Dispersion-aware variant (the subluminal mirror needs |x| < |t|).
StationaryPoint stationary_point(double t, const lorentz::Vec3& x, const WavePacketSpec& spec);

struct EstimateValue {
    std::complex<double> value;
    bool inside_support = true;  // false: k_s left supp f~, value set to 0
};

/// Stationary-phase estimate
///   (dk_par dk_perp^2)/((2pi)^3 2 w_s) e^{i sgn(t) m sqrt(|x|^2-t^2)} f~(k_s),
/// dk_par = sqrt(2m)|t| / (|x|^2-t^2)^{3/4}, dk_perp = dk_par / gamma_s.
EstimateValue stationary_phase_estimate(double t, const lorentz::Vec3& x,
                                        const WavePacketSpec& spec);

struct DecaySample {
    double t = 0.0;
    std::complex<double> phi;
    double abs_phi = 0.0;
    double estimate = 0.0;  // |stationary phase estimate|
    double ratio = 0.0;
};

struct DecayFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
    bool stderr_flag = false;  // fit too noisy to trust (pre-asymptotic window)
    std::vector<DecaySample> samples;
};

/// Least-squares slope of log|phi| against log|t| along x = v_s t xhat.
/// t_values must span at least one decade and the trajectory momentum
/// m v_s/sqrt(|v_s^2-1|) must lie inside the bump support.
DecayFit decay_exponent_fit(const WavePacketSpec& spec, double v_s,
                            const std::vector<double>& t_values);

enum class NormClass { Finite, Divergent };

struct NormTraceRow {
    double R = 0.0;
    double partial_l2 = 0.0;  // int_{|k|<R} |f~|^2/w d3k
    double partial_l1 = 0.0;  // int_{|k|<R} |f~|/w d3k
};

struct NormAnalysis {
    NormClass l2_weighted = NormClass::Finite;
    NormClass l1_weighted = NormClass::Finite;
    double l2_increment_slope = 0.0;  // power-law exponent of the shell increments
    double l1_increment_slope = 0.0;
    std::vector<NormTraceRow> trace;
};

/// Classifies int |f~|^2/w and int |f~|/w over nested balls R = m 2^j by the
/// growth of the partial integrals (power_tail family).
NormAnalysis norm_analysis(const WavePacketSpec& spec);

}  // namespace tachyon::wavepacket

#endif
