#include "tachyon/fields.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tachyon/numeric.hpp"

namespace tachyon::fields {

namespace {

constexpr double kPi = std::numbers::pi;

struct RadialSpec {
    double dt = 0.0;
    double r = 0.0;
    double m = 1.0;
    bool tachyonic = true;  // w = sqrt(k^2 - m^2) on |k| > m, else sqrt(k^2 + m^2) on all k
};

/// One damped cosine component of the radial mode integral in the k variable:
///   T_s = int (k/(2w)) cos(w dt - s k r) e^{-eta k} dk,  s = +-1.
/// The tachyonic branch substitutes k = m cosh(u) which removes the threshold
/// singularity; segments follow half-periods of the asymptotic frequency
/// |dt - s r| and the partial sums are Wynn-accelerated.
double damped_component_k(const RadialSpec& spec, int s, double eta, double tol, double* err) {
    const double freq = std::max(std::abs(spec.dt - s * spec.r), 0.02);
    const double h = kPi / freq;
    const double m = spec.m;
    if (spec.tachyonic) {
        auto segment = [&](double klo, double khi) {
            const double ulo = std::acosh(klo / m), uhi = std::acosh(khi / m);
            return numeric::gk_integrate(
                [&](double u) {
                    const double k = m * std::cosh(u), w = m * std::sinh(u);
                    return 0.5 * m * std::cosh(u) * std::cos(w * spec.dt - s * k * spec.r) *
                           std::exp(-eta * k);
                },
                ulo, uhi, 1e-12, nullptr, 6);
        };
        return numeric::oscillatory_sum(segment, m, h, tol, 600, err);
    }
    auto segment = [&](double klo, double khi) {
        return numeric::gk_integrate(
            [&](double k) {
                const double w = std::sqrt(k * k + m * m);
                return (k / (2.0 * w)) * std::cos(w * spec.dt - s * k * spec.r) *
                       std::exp(-eta * k);
            },
            klo, khi, 1e-12, nullptr, 6);
    };
    return numeric::oscillatory_sum(segment, 0.0, h, tol, 600, err);
}

/// Same integral in the frequency variable (the independent second route):
/// tachyonic  J = int_0^inf (1/2) sin(w dt) sin(r sqrt(w^2+m^2)) e^{-eta w} dw,
/// subluminal J = int_m^inf (1/2) sin(w dt) sin(r sqrt(w^2-m^2)) e^{-eta w} dw.
double damped_component_w(const RadialSpec& spec, int s, double eta, double tol, double* err) {
    const double freq = std::max(std::abs(spec.dt - s * spec.r), 0.02);
    const double h = kPi / freq;
    const double m = spec.m;
    if (spec.tachyonic) {
        auto segment = [&](double wlo, double whi) {
            return numeric::gk_integrate(
                [&](double w) {
                    const double k = std::sqrt(w * w + m * m);
                    return 0.5 * std::cos(w * spec.dt - s * k * spec.r) * std::exp(-eta * w);
                },
                wlo, whi, 1e-12, nullptr, 6);
        };
        return numeric::oscillatory_sum(segment, 0.0, h, tol, 600, err);
    }
    auto segment = [&](double wlo, double whi) {
        const double ulo = std::acosh(wlo / m), uhi = std::acosh(whi / m);
        return numeric::gk_integrate(
            [&](double u) {
                const double w = m * std::cosh(u), k = m * std::sinh(u);
                return 0.5 * m * std::sinh(u) * std::cos(w * spec.dt - s * k * spec.r) *
                       std::exp(-eta * w);
            },
            ulo, uhi, 1e-12, nullptr, 6);
    };
    return numeric::oscillatory_sum(segment, m, h, tol, 600, err);
}

/// J(eta) = int (k/(2w)) sin(w dt) sin(k r) e^{-eta k} dk over the support,
/// via sin A sin B = (cos(A-B) - cos(A+B))/2. r = 0 uses the limiting kernel
/// (k^2/(2w)) sin(w dt) (the 1/r of the angular reduction already divided out).
double radial_J(const RadialSpec& spec, double eta, bool omega_variable, double* err) {
    double e1 = 0.0, e2 = 0.0;
    if (spec.r < 1e-12) {
        // single-frequency limit kernel: int (k^2/(2w)) sin(w dt) e^{-eta .} dk
        const double freq = std::max(std::abs(spec.dt), 0.02);
        const double h = kPi / freq;
        const double m = spec.m;
        double v;
        if (spec.tachyonic && !omega_variable) {
            auto segment = [&](double klo, double khi) {
                const double ulo = std::acosh(klo / m), uhi = std::acosh(khi / m);
                return numeric::gk_integrate(
                    [&](double u) {
                        const double k = m * std::cosh(u), w = m * std::sinh(u);
                        return 0.5 * k * std::cosh(u) * std::sin(w * spec.dt) *
                               std::exp(-eta * k);
                    },
                    ulo, uhi, 1e-12, nullptr, 6);
            };
            v = numeric::oscillatory_sum(segment, m, h, 1e-13, 600, &e1);
        } else if (spec.tachyonic) {
            // omega route: (k^2/(2w)) dk = (k/2) dw with k = sqrt(w^2+m^2)
            auto segment = [&](double wlo, double whi) {
                return numeric::gk_integrate(
                    [&](double w) {
                        return 0.5 * std::sqrt(w * w + m * m) * std::sin(w * spec.dt) *
                               std::exp(-eta * w);
                    },
                    wlo, whi, 1e-12, nullptr, 6);
            };
            v = numeric::oscillatory_sum(segment, 0.0, h, 1e-13, 600, &e1);
        } else {
            auto segment = [&](double klo, double khi) {
                return numeric::gk_integrate(
                    [&](double k) {
                        const double w = std::sqrt(k * k + m * m);
                        return (k * k / (2.0 * w)) * std::sin(w * spec.dt) *
                               std::exp(-eta * k);
                    },
                    klo, khi, 1e-12, nullptr, 6);
            };
            v = numeric::oscillatory_sum(segment, 0.0, h, 1e-13, 600, &e1);
        }
        if (err) *err = e1;
        return v;
    }
    auto component = omega_variable ? damped_component_w : damped_component_k;
    const double tp = component(spec, +1, eta, 1e-13, &e1);
    const double tm = component(spec, -1, eta, 1e-13, &e2);
    if (err) *err = e1 + e2;
    return 0.5 * (tp - tm);
}

/// eta -> 0 extrapolation of the damped radial integral; returns the
/// c-number commutator C = -i J / (pi^2 r) (or its r -> 0 limit).
CommutatorValue commutator_pipeline(const SpacetimeSeparation& sep, const CommutatorKernel& k,
                                    bool tachyonic, bool omega_variable) {
    if (sep.r < 0.0) throw std::domain_error("commutator: need r >= 0");
    RadialSpec spec{sep.dt, sep.r, k.m, tachyonic};
    const double eta0 = (k.eta > 0.0) ? k.eta : 0.12;
    const int levels = std::max(3, k.richardson_levels);
    double inner_err = 0.0;
    double extrap_err = 0.0;
    const double J = numeric::extrapolate_to_zero(
        [&](double eta) {
            double e = 0.0;
            const double v = radial_J(spec, eta, omega_variable, &e);
            inner_err = std::max(inner_err, e);
            return v;
        },
        eta0, levels, &extrap_err);
    CommutatorValue out;
    const double scale = (sep.r < 1e-12) ? (1.0 / (kPi * kPi))
                                         : (1.0 / (kPi * kPi * sep.r));
    out.value = std::complex<double>(0.0, -J * scale);
    out.error_estimate = (10.0 * extrap_err + inner_err + 1e-15 * std::abs(J)) * scale;
    if (out.error_estimate > 1e-6) {
        std::ostringstream os;
        os << "commutator pipeline failed to converge at dt=" << sep.dt << " r=" << sep.r
           << " (estimate " << out.error_estimate << ")";
        throw numeric::ConvergenceError(os.str());
    }
    return out;
}

void require_variant(const CommutatorKernel& k, Variant v, const char* who) {
    if (k.variant != v) {
        throw std::invalid_argument(std::string(who) + ": kernel variant mismatch");
    }
}

double gaussian_overlap(double rho, double sigma) {
    const double s2 = sigma * sigma;
    return std::pow(4.0 * kPi * s2, -1.5) * std::exp(-rho * rho / (4.0 * s2));
}

/// Momentum route of the smeared equal-time derivative commutator over
/// [klo, inf): (1/(2 pi^2 rho)) int k sin(k rho) e^{-k^2 sigma^2} dk.
double smeared_momentum_route(double rho, double sigma, double klo, double* err) {
    const double kmax = klo + 14.0 / sigma;
    if (rho < 1e-12) {
        return numeric::gk_integrate(
                   [&](double k) { return k * k * std::exp(-k * k * sigma * sigma); }, klo,
                   kmax, 1e-14, err) /
               (2.0 * kPi * kPi);
    }
    return numeric::gk_integrate(
               [&](double k) { return k * std::sin(k * rho) * std::exp(-k * k * sigma * sigma); },
               klo, kmax, 1e-14, err) /
           (2.0 * kPi * kPi * rho);
}

/// Position route for the smoothed |k| < m part: the closed-form smooth
/// kernel S convolved with the correlation of the two Gaussian smearings.
double smeared_smooth_route(double rho, double sigma, double m, double* err) {
    const double s2 = sigma * sigma;
    const double umax = rho + 30.0 * sigma;
    if (rho < 1e-12) {
        return numeric::gk_integrate(
            [&](double u) {
                return 4.0 * kPi * u * u * equal_time_smooth_part_closed(u, m) *
                       std::pow(4.0 * kPi * s2, -1.5) * std::exp(-u * u / (4.0 * s2));
            },
            0.0, umax, 1e-14, err);
    }
    const double pref = std::pow(4.0 * kPi * s2, -0.5) / rho;
    return pref * numeric::gk_integrate(
                      [&](double u) {
                          const double em = std::exp(-(u - rho) * (u - rho) / (4.0 * s2));
                          const double ep = std::exp(-(u + rho) * (u + rho) / (4.0 * s2));
                          return u * equal_time_smooth_part_closed(u, m) * (em - ep);
                      },
                      0.0, umax, 1e-14, err);
}

}  // namespace

CommutatorValue phi1_commutator(const SpacetimeSeparation& sep, const CommutatorKernel& k) {
    require_variant(k, Variant::Phi1, "phi1_commutator");
    const CommutatorValue ck = commutator_pipeline(sep, k, true, false);
    const CommutatorValue cw = commutator_pipeline(sep, k, true, true);
    CommutatorValue out;
    out.value = ck.value - cw.value;  // C - C*, star acting as the identity
    out.error_estimate = ck.error_estimate + cw.error_estimate;
    return out;
}

CommutatorValue phi2_commutator(const SpacetimeSeparation& sep, const CommutatorKernel& k) {
    require_variant(k, Variant::Phi2, "phi2_commutator");
    return commutator_pipeline(sep, k, true, false);
}

CommutatorValue subluminal_commutator(const SpacetimeSeparation& sep,
                                      const CommutatorKernel& k) {
    require_variant(k, Variant::SubluminalReference, "subluminal_commutator");
    return commutator_pipeline(sep, k, false, false);
}

double equal_time_smooth_part_closed(double r, double m) {
    if (r < 0.0) throw std::domain_error("equal_time_smooth_part_closed: need r >= 0");
    if (m == 0.0) return 0.0;
    const double x = m * r;
    if (x < 0.5) {
        // (sin x - x cos x)/x^3 = sum_{n>=1} (-1)^{n+1} x^{2n-2} 2n/(2n+1)!
        double sum = 0.0, pow = 1.0;
        double fact = 6.0;  // (2n+1)! at n=1
        for (int n = 1; n < 20; ++n) {
            const double term = pow * (2.0 * n) / fact;
            sum += (n % 2 == 1) ? term : -term;
            if (term < 1e-19) break;
            pow *= x * x;
            fact *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
        }
        return m * m * m * sum / (2.0 * kPi * kPi);
    }
    return (std::sin(x) - x * std::cos(x)) / (2.0 * kPi * kPi * r * r * r);
}

QuadratureValue equal_time_smooth_part_quadrature(double r, double m) {
    if (!(r > 0.0)) throw std::domain_error("equal_time_smooth_part_quadrature: need r > 0");
    QuadratureValue out;
    if (m == 0.0) return out;  // empty mode ball
    double err = 0.0;
    out.value = numeric::gk_integrate([&](double k) { return k * std::sin(k * r); }, 0.0, m,
                                      1e-13, &err) /
                (2.0 * kPi * kPi * r);
    out.error_estimate = err / (2.0 * kPi * kPi * r);
    return out;
}

BoostProbe boost_invariance_probe(const SpacetimeSeparation& sep, double rapidity,
                                  const CommutatorKernel& k) {
    if (!(sep.r > std::abs(sep.dt))) {
        throw std::domain_error("boost_invariance_probe: separation must be spacelike");
    }
    auto eval = [&](const SpacetimeSeparation& s) {
        switch (k.variant) {
            case Variant::Phi1: return phi1_commutator(s, k);
            case Variant::Phi2: return phi2_commutator(s, k);
            case Variant::SubluminalReference: return subluminal_commutator(s, k);
        }
        throw std::logic_error("boost_invariance_probe: bad variant");
    };
    const double ch = std::cosh(rapidity), sh = std::sinh(rapidity);
    const SpacetimeSeparation boosted{sep.dt * ch - sep.r * sh,
                                      std::abs(sep.r * ch - sep.dt * sh)};
    BoostProbe probe;
    const CommutatorValue a = eval(sep);
    const CommutatorValue b = eval(boosted);
    probe.value_original = a.value;
    probe.value_boosted = b.value;
    probe.difference = b.value - a.value;
    probe.error_estimate = a.error_estimate + b.error_estimate;
    return probe;
}

SmearedCcrResult smeared_ccr(double rho, double sigma, const CommutatorKernel& k) {
    if (!(sigma > 0.0) || rho < 0.0) {
        throw std::domain_error("smeared_ccr: need sigma > 0 and rho >= 0");
    }
    SmearedCcrResult out;
    const double overlap = gaussian_overlap(rho, sigma);
    out.delta_term = std::complex<double>(0.0, overlap);
    double e1 = 0.0, e2 = 0.0;
    if (k.variant == Variant::Phi1) {
        // two independent routes for the same tachyon-support integral:
        // momentum space over |k| > m vs overlap minus the |k| < m smooth part
        const double ka = smeared_momentum_route(rho, sigma, k.m, &e1);
        const double kb = overlap - smeared_smooth_route(rho, sigma, k.m, &e2);
        out.value = std::complex<double>(0.0, 0.25 * (ka - kb));
        out.residual = std::abs(out.value);  // analytic twin value is exactly 0
    } else if (k.variant == Variant::SubluminalReference) {
        const double kr = smeared_momentum_route(rho, sigma, 0.0, &e1);
        out.value = std::complex<double>(0.0, kr);
        out.residual = std::abs(out.value - out.delta_term);
    } else {
        throw std::invalid_argument("smeared_ccr: variant must be Phi1 or SubluminalReference");
    }
    out.error_estimate = e1 + e2;
    return out;
}

}  // namespace tachyon::fields
