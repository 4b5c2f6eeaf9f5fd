#include "tachyon/wavepacket.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "tachyon/numeric.hpp"

namespace tachyon::wavepacket {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Legendre nodes on [-1,1]
constexpr double kX8[8] = {-0.96028985649753618, -0.79666647741362673, -0.52553240991632899,
                           -0.18343464249564978, 0.18343464249564978,  0.52553240991632899,
                           0.79666647741362673,  0.96028985649753618};
constexpr double kW8[8] = {0.10122853629037669, 0.22238103445337434, 0.31370664587788705,
                           0.36268378337836177, 0.36268378337836177, 0.31370664587788705,
                           0.22238103445337434, 0.10122853629037669};
constexpr double kX16[16] = {
    -0.98940093499164994, -0.9445750230732326,   -0.86563120238783176, -0.755404408355003,
    -0.61787624440264377, -0.45801677765722737,  -0.28160355077925892, -0.095012509837637454,
    0.095012509837637454, 0.28160355077925892,   0.45801677765722737,  0.61787624440264377,
    0.755404408355003,    0.86563120238783176,   0.9445750230732326,   0.98940093499164994};
constexpr double kW16[16] = {
    0.027152459411754037, 0.062253523938647706, 0.095158511682492591, 0.12462897125553403,
    0.14959598881657676,  0.16915651939500262,  0.18260341504492361,  0.18945061045506859,
    0.18945061045506859,  0.18260341504492361,  0.16915651939500262,  0.14959598881657676,
    0.12462897125553403,  0.095158511682492591, 0.062253523938647706, 0.027152459411754037};

struct Cell {
    double a1, b1;  // k_par range
    double a2, b2;  // k_perp range
    int depth;
};

}  // namespace

WavePacketSpec WavePacketSpec::bump_packet(double k0mag, double width, double m, Dispersion d) {
    WavePacketSpec spec;
    spec.m = m;
    spec.dispersion = d;
    spec.bump = BumpProfile{k0mag, width};
    spec.validate();
    return spec;
}

WavePacketSpec WavePacketSpec::power_tail_packet(double beta, double m) {
    WavePacketSpec spec;
    spec.m = m;
    spec.power_tail = PowerTail{beta};
    spec.validate();
    return spec;
}

double WavePacketSpec::omega(double ksq) const {
    const double m2 = m * m;
    return std::sqrt(dispersion == Dispersion::Tachyonic ? ksq - m2 : ksq + m2);
}

double WavePacketSpec::group_velocity() const {
    if (!bump) throw std::logic_error("group_velocity: bump family only");
    const double k0 = bump->k0mag;
    return k0 / omega(k0 * k0);
}

double WavePacketSpec::profile(double kpar, double kperp) const {
    if (bump) {
        const double dx = kpar - bump->k0mag;
        const double s2 = (dx * dx + kperp * kperp) / (bump->width * bump->width);
        if (s2 >= 1.0) return 0.0;
        return normalization * std::exp(-1.0 / (1.0 - s2));
    }
    const double kmag = std::sqrt(kpar * kpar + kperp * kperp);
    if (kmag <= m) return 0.0;
    return normalization * std::pow(m / kmag, power_tail->beta);
}

void WavePacketSpec::validate() const {
    if (!(m > 0.0)) throw std::domain_error("WavePacketSpec: need m > 0");
    if (bump.has_value() == power_tail.has_value()) {
        throw std::invalid_argument("WavePacketSpec: exactly one profile family");
    }
    if (bump) {
        if (!(bump->width > 0.0)) throw std::domain_error("WavePacketSpec: need width > 0");
        if (dispersion == Dispersion::Tachyonic && !(bump->k0mag - bump->width > m)) {
            throw std::domain_error(
                "WavePacketSpec: bump support must satisfy |k0| - width > m");
        }
        if (!(bump->k0mag - bump->width > 0.0)) {
            throw std::domain_error("WavePacketSpec: bump support must exclude k = 0");
        }
    }
    if (power_tail && !(power_tail->beta > 0.0)) {
        throw std::domain_error("WavePacketSpec: need beta > 0");
    }
}

namespace {

/// Integrand of the axial reduction: the measure already carries k_perp and
/// the azimuthal 2pi has been divided into the 1/(4 pi^2) prefactor.
std::complex<double> integrand(const WavePacketSpec& spec, double t, double x, double kpar,
                               double kperp) {
    const double f = spec.profile(kpar, kperp);
    if (f == 0.0) return {0.0, 0.0};
    const double w = spec.omega(kpar * kpar + kperp * kperp);
    const double phase = kpar * x - w * t;
    return kperp * f / (2.0 * w) * std::complex<double>(std::cos(phase), std::sin(phase));
}

std::complex<double> cell_gl(const WavePacketSpec& spec, double t, double x, const Cell& c,
                             const double* xs, const double* ws, int n) {
    const double c1 = 0.5 * (c.a1 + c.b1), h1 = 0.5 * (c.b1 - c.a1);
    const double c2 = 0.5 * (c.a2 + c.b2), h2 = 0.5 * (c.b2 - c.a2);
    std::complex<double> sum{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double kpar = c1 + h1 * xs[i];
        std::complex<double> inner{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            inner += ws[j] * integrand(spec, t, x, kpar, c2 + h2 * xs[j]);
        }
        sum += ws[i] * inner;
    }
    return sum * (h1 * h2);
}

double phase_at(const WavePacketSpec& spec, double t, double x, double kpar, double kperp) {
    return kpar * x - spec.omega(kpar * kpar + kperp * kperp) * t;
}

/// Per-axis spread of the oscillation phase over a cell, probed on a 3x3
/// stencil; drives the anisotropic subdivision.
struct PhaseSpread {
    double along_par = 0.0;
    double along_perp = 0.0;
    double total() const { return along_par + along_perp; }
};

PhaseSpread phase_spread(const WavePacketSpec& spec, double t, double x, const Cell& c) {
    double p[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double kpar = c.a1 + 0.5 * i * (c.b1 - c.a1);
            const double kperp = c.a2 + 0.5 * j * (c.b2 - c.a2);
            p[i][j] = phase_at(spec, t, x, kpar, kperp);
        }
    }
    PhaseSpread s;
    for (int j = 0; j < 3; ++j) {
        const double lo = std::min({p[0][j], p[1][j], p[2][j]});
        const double hi = std::max({p[0][j], p[1][j], p[2][j]});
        s.along_par = std::max(s.along_par, hi - lo);
    }
    for (int i = 0; i < 3; ++i) {
        const double lo = std::min({p[i][0], p[i][1], p[i][2]});
        const double hi = std::max({p[i][0], p[i][1], p[i][2]});
        s.along_perp = std::max(s.along_perp, hi - lo);
    }
    return s;
}

}  // namespace

FieldValue packet_field_numeric(double t, const lorentz::Vec3& x, const WavePacketSpec& spec) {
    spec.validate();
    if (!spec.bump) {
        throw std::invalid_argument("packet_field_numeric: bump family required");
    }
    const double xmag = x.norm();
    double xcoord = 0.0;
    if (xmag > 0.0) {
        // axial reduction: x must lie along the packet axis (the bump center)
        const lorentz::Vec3 axis{1.0, 0.0, 0.0};
        if (x.cross(axis).norm() > 1e-12 * xmag) {
            throw std::invalid_argument(
                "packet_field_numeric: x must be parallel to the packet center axis (+x)");
        }
        xcoord = x.x;
    }

    const double k0 = spec.bump->k0mag, w = spec.bump->width;
    const Cell root{k0 - w, k0 + w, 0.0, w, 0};

    // absolute tolerance from the phaseless mass of the integrand
    const double scale =
        std::abs(cell_gl(spec, 0.0, 0.0, root, kX16, kW16, 16)) / (4.0 * kPi * kPi);
    const double tol_abs = std::max(3e-11 * scale, 1e-22);

    std::deque<Cell> work{root};
    const double total_area = (root.b1 - root.a1) * (root.b2 - root.a2);
    std::complex<double> total{0.0, 0.0};
    double err = 0.0;
    std::size_t cells = 0;
    constexpr std::size_t kMaxCells = 4'000'000;
    constexpr double kPhasePerCell = 2.0 * kPi;  // GL16 resolves this comfortably
    auto bisect = [&work](const Cell& c, bool along_par) {
        if (along_par) {
            const double mid = 0.5 * (c.a1 + c.b1);
            work.push_back({c.a1, mid, c.a2, c.b2, c.depth + 1});
            work.push_back({mid, c.b1, c.a2, c.b2, c.depth + 1});
        } else {
            const double mid = 0.5 * (c.a2 + c.b2);
            work.push_back({c.a1, c.b1, c.a2, mid, c.depth + 1});
            work.push_back({c.a1, c.b1, mid, c.b2, c.depth + 1});
        }
    };
    while (!work.empty()) {
        const Cell c = work.front();
        work.pop_front();
        if (++cells > kMaxCells) {
            std::ostringstream os;
            os << "packet_field_numeric: cell budget exhausted at t=" << t
               << " (phase variation too steep; root spread "
               << phase_spread(spec, t, xcoord, root).total() << " rad)";
            throw numeric::ConvergenceError(os.str());
        }
        const bool splittable = c.depth < 48;
        const PhaseSpread ps = phase_spread(spec, t, xcoord, c);
        if (splittable && std::max(ps.along_par, ps.along_perp) > kPhasePerCell) {
            bisect(c, ps.along_par >= ps.along_perp);
            continue;
        }
        const std::complex<double> v16 = cell_gl(spec, t, xcoord, c, kX16, kW16, 16);
        const std::complex<double> v8 = cell_gl(spec, t, xcoord, c, kX8, kW8, 8);
        const double cell_err = std::abs(v16 - v8) / (4.0 * kPi * kPi);
        const double budget = tol_abs * ((c.b1 - c.a1) * (c.b2 - c.a2) / total_area);
        if (splittable && cell_err > budget) {
            const bool oscillation_driven = std::max(ps.along_par, ps.along_perp) > 0.5;
            const bool par = oscillation_driven ? (ps.along_par >= ps.along_perp)
                                                : (c.b1 - c.a1) >= (c.b2 - c.a2);
            bisect(c, par);
            continue;
        }
        total += v16;
        err += cell_err;
    }
    return {total / (4.0 * kPi * kPi), err};
}

StationaryPoint stationary_point(double t, const lorentz::Vec3& x, double m) {
    StationaryPoint sp;
    const double xmag = x.norm();
    if (!(xmag > std::abs(t))) return sp;  // valid=false outside the spacelike reach
    const double lam = std::sqrt(xmag * xmag - t * t);
    const double sgn_t = (t >= 0.0) ? 1.0 : -1.0;
    sp.k_s = x * (m * sgn_t / lam);
    sp.omega_s = m * std::abs(t) / lam;
    const double v = (sp.omega_s > 0.0) ? sp.k_s.norm() / sp.omega_s : HUGE_VAL;
    sp.gamma_s = (v > 1.0 && std::isfinite(v)) ? 1.0 / std::sqrt(v * v - 1.0) : 0.0;
    sp.valid = true;
    return sp;
}

StationaryPoint stationary_point(double t, const lorentz::Vec3& x, const WavePacketSpec& spec) {
    if (spec.dispersion == Dispersion::Tachyonic) return stationary_point(t, x, spec.m);
    StationaryPoint sp;
    const double xmag = x.norm();
    if (!(std::abs(t) > xmag)) return sp;  // subluminal packets live inside the cone
    const double lam = std::sqrt(t * t - xmag * xmag);
    const double sgn_t = (t >= 0.0) ? 1.0 : -1.0;
    sp.k_s = x * (spec.m * sgn_t / lam);
    sp.omega_s = spec.m * std::abs(t) / lam;
    const double v = sp.k_s.norm() / sp.omega_s;
    sp.gamma_s = 1.0 / std::sqrt(1.0 - v * v);
    sp.valid = true;
    return sp;
}

EstimateValue stationary_phase_estimate(double t, const lorentz::Vec3& x,
                                        const WavePacketSpec& spec) {
    spec.validate();
    if (!spec.bump) {
        throw std::invalid_argument("stationary_phase_estimate: bump family required");
    }
    const StationaryPoint sp = stationary_point(t, x, spec);
    if (!sp.valid) {
        throw std::domain_error("stationary_phase_estimate: no stationary point here");
    }
    EstimateValue out;
    const double kpar = sp.k_s.x;  // axial geometry
    const double f = spec.profile(kpar, std::hypot(sp.k_s.y, sp.k_s.z));
    if (f == 0.0) {
        out.inside_support = false;
        out.value = {0.0, 0.0};
        return out;
    }
    const double xmag = x.norm();
    const double lam2 = std::abs(xmag * xmag - t * t);
    const double dk_par = std::sqrt(2.0 * spec.m) * std::abs(t) / std::pow(lam2, 0.75);
    const double dk_perp = dk_par / sp.gamma_s;
    const double sgn_t = (t >= 0.0) ? 1.0 : -1.0;
    const double sgn_cone = (xmag > std::abs(t)) ? 1.0 : -1.0;  // subluminal mirror
    const double phase = sgn_t * sgn_cone * spec.m * std::sqrt(lam2);
    const double amp = dk_par * dk_perp * dk_perp /
                       (std::pow(2.0 * kPi, 3.0) * 2.0 * sp.omega_s) * f;
    out.value = amp * std::complex<double>(std::cos(phase), std::sin(phase));
    return out;
}

DecayFit decay_exponent_fit(const WavePacketSpec& spec, double v_s,
                            const std::vector<double>& t_values) {
    spec.validate();
    if (!spec.bump) throw std::invalid_argument("decay_exponent_fit: bump family required");
    if (t_values.size() < 3) throw std::invalid_argument("decay_exponent_fit: need >= 3 points");
    const auto [tmin, tmax] = std::minmax_element(t_values.begin(), t_values.end());
    if (!(*tmin > 0.0) || *tmax / *tmin < 10.0) {
        throw std::invalid_argument("decay_exponent_fit: t_values must span >= one decade");
    }
    const double k_traj = spec.m * v_s / std::sqrt(std::abs(v_s * v_s - 1.0));
    if (std::abs(k_traj - spec.bump->k0mag) >= spec.bump->width) {
        throw std::invalid_argument(
            "decay_exponent_fit: trajectory momentum outside the bump support");
    }

    DecayFit fit;
    std::vector<double> lx, ly;
    for (const double t : t_values) {
        const lorentz::Vec3 x{v_s * t, 0.0, 0.0};
        const FieldValue phi = packet_field_numeric(t, x, spec);
        if (!(std::abs(phi.value) > 10.0 * phi.error_estimate)) {
            std::ostringstream os;
            os << "decay_exponent_fit: field value at t=" << t
               << " not resolved above quadrature error";
            throw numeric::ConvergenceError(os.str());
        }
        const EstimateValue est = stationary_phase_estimate(t, x, spec);
        DecaySample s;
        s.t = t;
        s.phi = phi.value;
        s.abs_phi = std::abs(phi.value);
        s.estimate = std::abs(est.value);
        s.ratio = (s.estimate > 0.0) ? s.abs_phi / s.estimate : 0.0;
        fit.samples.push_back(s);
        lx.push_back(std::log(t));
        ly.push_back(std::log(s.abs_phi));
    }
    const numeric::LinearFit lf = numeric::fit_line(lx, ly);
    fit.slope = lf.slope;
    fit.stderr_slope = lf.slope_stderr;
    fit.stderr_flag = lf.slope_stderr > 0.05;
    return fit;
}

NormAnalysis norm_analysis(const WavePacketSpec& spec) {
    spec.validate();
    if (!spec.power_tail) throw std::invalid_argument("norm_analysis: power_tail family required");
    const double beta = spec.power_tail->beta;
    const double m = spec.m;

    // shells R_j = m 2^j; the threshold integrand is regularized exactly by
    // k = m cosh(u):  int k^2 f/w dk = m^2 int cosh(u)^2 f du
    NormAnalysis out;
    const int jmax = 14;
    double l2 = 0.0, l1 = 0.0;
    std::vector<double> inc2, inc1, radii;
    double uprev = 0.0;
    for (int j = 1; j <= jmax; ++j) {
        const double R = m * std::pow(2.0, j);
        const double u = std::acosh(R / m);
        const double d2 = 4.0 * kPi * m * m *
                          numeric::gk_integrate(
                              [&](double s) {
                                  const double ch = std::cosh(s);
                                  return ch * ch * std::pow(ch, -2.0 * beta);
                              },
                              uprev, u, 1e-12);
        const double d1 = 4.0 * kPi * m * m *
                          numeric::gk_integrate(
                              [&](double s) {
                                  const double ch = std::cosh(s);
                                  return ch * ch * std::pow(ch, -beta);
                              },
                              uprev, u, 1e-12);
        l2 += d2;
        l1 += d1;
        out.trace.push_back({R, l2, l1});
        inc2.push_back(std::log(d2));
        inc1.push_back(std::log(d1));
        radii.push_back(std::log(R));
        uprev = u;
    }
    // power-law fit of the shell increments over the asymptotic tail
    const std::size_t tail = 6;
    std::vector<double> xs(radii.end() - tail, radii.end());
    const numeric::LinearFit f2 =
        numeric::fit_line(xs, std::vector<double>(inc2.end() - tail, inc2.end()));
    const numeric::LinearFit f1 =
        numeric::fit_line(xs, std::vector<double>(inc1.end() - tail, inc1.end()));
    out.l2_increment_slope = f2.slope;
    out.l1_increment_slope = f1.slope;
    // increments ~ R^(2-2beta) resp. R^(2-beta): divergent iff the exponent >= 0
    const double boundary = -0.125;
    out.l2_weighted = (f2.slope > boundary) ? NormClass::Divergent : NormClass::Finite;
    out.l1_weighted = (f1.slope > boundary) ? NormClass::Divergent : NormClass::Finite;
    return out;
}

}  // namespace tachyon::wavepacket
