#include "tachyon/loopint.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tachyon/numeric.hpp"

namespace tachyon::loopint {

namespace {

constexpr double kBoundaryTol = 1e-12;

/// b^2 - 4ac with fma error compensation; plain double evaluation loses all
/// accuracy near a double root (threshold kinematics) and misplaces the
/// quadrature breakpoints by orders of magnitude.
double compensated_discriminant(double a, double b, double c) {
    const double bb = b * b;
    const double bb_err = std::fma(b, b, -bb);
    const double ac = 4.0 * a * c;
    const double ac_err = std::fma(4.0 * a, c, -ac);
    return (bb - ac) + (bb_err - ac_err);
}

/// All real roots of Delta(x) = a x^2 + b x + c, ascending (possibly empty).
/// Stable quadratic solve (Citardauq for the small root).
std::vector<double> real_roots(double a, double b, double c) {
    std::vector<double> roots;
    if (std::abs(a) < 1e-300) {
        if (std::abs(b) > 1e-300) roots.push_back(-c / b);
    } else {
        const double disc = compensated_discriminant(a, b, c);
        if (disc > 0.0) {
            const double sq = std::sqrt(disc);
            const double q = -0.5 * (b + (b >= 0.0 ? sq : -sq));
            roots.push_back(q / a);
            if (q != 0.0) roots.push_back(c / q);
        } else if (disc == 0.0) {
            roots.push_back(-b / (2.0 * a));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<double> restrict_to_unit(const std::vector<double>& roots) {
    std::vector<double> out;
    for (const double r : roots) {
        if (r > 0.0 && r < 1.0) out.push_back(r);
    }
    return out;
}

struct Quadratic {
    double a, b, c;  // Delta(x) = a x^2 + b x + c
};

Quadratic delta_coeffs(const SelfEnergyParams& p) {
    return {p.p2, -(p.p2 + p.m0sq - p.m1sq), p.m0sq};
}

}  // namespace

double feynman_delta(double x, const SelfEnergyParams& p) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("feynman_delta: x outside [0,1]");
    return -x * (1.0 - x) * p.p2 + (1.0 - x) * p.m0sq + x * p.m1sq;
}

std::pair<std::complex<double>, std::complex<double>> roots_xpm(const SelfEnergyParams& p) {
    if (p.p2 == 0.0) throw std::domain_error("roots_xpm: p2 = 0 has no quadratic roots");
    if (p.eps_ir == 0.0) throw std::domain_error("roots_xpm: eps_ir must be nonzero");
    const std::complex<double> B(1.0 + (p.m0sq - p.m1sq) / p.p2, 0.0);
    const std::complex<double> m0_shifted(p.m0sq, -p.eps_ir);
    const std::complex<double> disc = B * B - 4.0 * m0_shifted / p.p2;
    const std::complex<double> sq = std::sqrt(disc);
    return {0.5 * (B + sq), 0.5 * (B - sq)};
}

std::complex<double> log_minus_ieps(double a, double eps) {
    return std::log(std::complex<double>(a, -eps));
}

std::complex<double> xlogx(const std::complex<double>& z) {
    if (std::abs(z) < 1e-300) return {0.0, 0.0};
    return z * std::log(z);
}

ComplexResult I_closed(const SelfEnergyParams& p) {
    if (p.p2 == 0.0) throw std::domain_error("I_closed: p2 = 0 (quadrature covers this point)");
    const auto [xp, xm] = roots_xpm(p);
    ComplexResult res;
    res.method = Method::ClosedForm;
    for (const auto& x : {xp, xm}) {
        if (std::abs(x) < kBoundaryTol || std::abs(x - 1.0) < kBoundaryTol) {
            res.boundary_root = true;  // x log x continues to 0 there
        }
    }
    const std::complex<double> one(1.0, 0.0);
    res.value = log_minus_ieps(p.p2, p.eps_ir) + xlogx(one - xp) + xlogx(one - xm) - 2.0 -
                xlogx(-xp) - xlogx(-xm);
    res.error_estimate = 1e-14 * (1.0 + std::abs(res.value));
    return res;
}

ComplexResult I_quadrature(const SelfEnergyParams& p) {
    const auto [a, b, c] = delta_coeffs(p);
    const std::vector<double> roots = real_roots(a, b, c);
    std::vector<double> pts = restrict_to_unit(roots);
    pts.insert(pts.begin(), 0.0);
    pts.push_back(1.0);

    // near the roots the expanded quadratic cancels catastrophically; the
    // factored form against the compensated roots stays accurate there
    const bool factored = roots.size() == 2 && std::abs(a) > 1e-300;
    auto delta_at = [&](double x) {
        if (factored) return a * (x - roots[0]) * (x - roots[1]);
        return a * x * x + b * x + c;
    };

    const double eps = (p.eps_ir == 0.0) ? 1e-30 : p.eps_ir;
    ComplexResult res;
    res.method = Method::Quadrature;
    double err2 = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        if (hi - lo < 1e-15) continue;
        double ere = 0.0, eim = 0.0;
        const double re = numeric::ts_integrate(
            [&](double x) {
                const double d = delta_at(x);
                return 0.5 * std::log(d * d + eps * eps);
            },
            lo, hi, 1e-13, &ere);
        const double im = numeric::ts_integrate(
            [&](double x) {
                const double d = delta_at(x);
                return std::arg(std::complex<double>(d, -eps));
            },
            lo, hi, 1e-13, &eim);
        res.value += std::complex<double>(re, im);
        err2 += ere * ere + eim * eim;
    }
    res.error_estimate = std::sqrt(err2);
    return res;
}

double im_measure(const SelfEnergyParams& p) {
    const auto [a, b, c] = delta_coeffs(p);
    std::vector<double> pts = restrict_to_unit(real_roots(a, b, c));
    pts.insert(pts.begin(), 0.0);
    pts.push_back(1.0);
    double measure = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double mid = 0.5 * (pts[i] + pts[i + 1]);
        if (a * mid * mid + b * mid + c < 0.0) measure += pts[i + 1] - pts[i];
    }
    return -std::numbers::pi * measure;
}

ThresholdResult threshold_analysis(double m0sq, double m1sq) {
    if (!(m1sq > 0.0)) throw std::domain_error("threshold_analysis: need m1sq > 0");
    ThresholdResult out;
    if (m0sq >= 0.0) {
        out.has_zero_region = true;
        const double th = std::sqrt(m0sq) + std::sqrt(m1sq);
        out.upper = th * th;
    }
    return out;  // m0sq < 0: Delta(0) < 0 at every p2, no zero region
}

std::complex<double> amplitude(const SelfEnergyParams& p, double d_eps) {
    if (!(d_eps > 0.0)) throw std::domain_error("amplitude: need d_eps > 0");
    constexpr double gamma_e = 0.57721566490153286;
    const double uv = 1.0 / d_eps - gamma_e +
                      std::log(4.0 * std::numbers::pi * p.mu * p.mu);
    const std::complex<double> I =
        (p.p2 != 0.0) ? I_closed(p).value : I_quadrature(p).value;
    const double pref = p.kappa * p.kappa / (16.0 * std::numbers::pi * std::numbers::pi);
    return pref * (I - uv);
}

std::vector<Fig2Row> figure2_dataset(double m0sq, double m1sq,
                                     const std::vector<double>& p2_grid) {
    std::vector<Fig2Row> rows;
    rows.reserve(p2_grid.size());
    for (const double p2 : p2_grid) {
        SelfEnergyParams p;
        p.p2 = p2;
        p.m0sq = m0sq;
        p.m1sq = m1sq;
        const ComplexResult quad = I_quadrature(p);
        Fig2Row row;
        row.p2 = p2;
        row.reI_err = quad.error_estimate;
        row.imI_err = quad.error_estimate;
        if (p2 != 0.0) {
            const ComplexResult closed = I_closed(p);
            row.reI = closed.value.real();
            row.imI = closed.value.imag();
            row.method_agreement = std::abs(closed.value - quad.value);
            const double tol =
                std::max(1e-8 * std::abs(closed.value), 1e-10);
            if (row.method_agreement > tol) {
                std::ostringstream os;
                os << "figure2_dataset: closed form and quadrature disagree at p2=" << p2
                   << " by " << row.method_agreement;
                throw numeric::ConvergenceError(os.str());
            }
        } else {
            row.reI = quad.value.real();
            row.imI = quad.value.imag();
            row.method_agreement = 0.0;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace tachyon::loopint
