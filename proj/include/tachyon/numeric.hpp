#ifndef TACHYON_NUMERIC_HPP
#define TACHYON_NUMERIC_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace tachyon::numeric {

/// Thrown when an adaptive scheme cannot reach its target tolerance.
/// what() carries a diagnostic of the offending integral.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Kronrod on [a,b]. Returns the integral, writes an error
/// estimate if err is non-null.
template <class F>
double gk_integrate(F f, double a, double b, double tol = 1e-12, double* err = nullptr,
                    unsigned max_depth = 15) {
    double e = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth,
                                                                             tol, &e);
    if (err) *err = e;
    return v;
}

/// tanh-sinh rule on [a,b]; tolerates integrable endpoint singularities
/// (used for the log-singular Feynman-parameter integrand).
template <class F>
double ts_integrate(F f, double a, double b, double tol = 1e-12, double* err = nullptr) {
    boost::math::quadrature::tanh_sinh<double> rule;
    double e = 0.0, l1 = 0.0;
    std::size_t levels = 0;
    double v = rule.integrate(f, a, b, tol, &e, &l1, &levels);
    if (err) *err = e * l1;
    return v;
}

/// Fixed-order Gauss-Legendre (no error estimate); works for complex-valued f.
template <class F>
auto gauss15(F f, double a, double b) {
    return boost::math::quadrature::gauss<double, 15>::integrate(f, a, b);
}

/// Wynn epsilon acceleration of a partial-sum sequence. Returns the best
/// even-column extrapolant; *err receives the spread of the last estimates.
double wynn_epsilon(const std::vector<double>& sums, double* err = nullptr);

/// Sum int_a^inf split into consecutive segments [a+n*h, a+(n+1)*h] handed to
/// `segment`, with Wynn acceleration of the partial sums (sliding window over
/// the tail). Intended for damped oscillatory tails where segments alternate
/// in sign; stops once successive extrapolants stabilize within tol.
template <class Segment>
double oscillatory_sum(Segment segment, double a, double h, double tol, int max_segments,
                       double* err = nullptr) {
    std::vector<double> sums;
    sums.reserve(128);
    double acc = 0.0;
    double best = 0.0, best_err = HUGE_VAL;
    double prev_est = HUGE_VAL;
    int stable = 0;
    for (int n = 0; n < max_segments; ++n) {
        const double seg = segment(a + n * h, a + (n + 1) * h);
        acc += seg;
        sums.push_back(acc);
        // plain convergence (strongly damped tail)
        if (n >= 2 && std::abs(seg) < 0.05 * tol &&
            std::abs(sums[n] - sums[n - 1]) < 0.05 * tol) {
            if (best_err > std::abs(seg)) {
                best = acc;
                best_err = std::abs(seg);
            }
            break;
        }
        if (sums.size() < 8 || n % 4 != 2) continue;
        const std::size_t win = std::min<std::size_t>(sums.size(), 36);
        const std::vector<double> tail(sums.end() - win, sums.end());
        double e = 0.0;
        const double v = wynn_epsilon(tail, &e);
        const double step = std::abs(v - prev_est);
        if (e + step < best_err) {
            best = v;
            best_err = e + step;
        }
        stable = (step < tol) ? stable + 1 : 0;
        prev_est = v;
        if (stable >= 2) break;
    }
    if (err) *err = best_err;
    return best;
}

/// Neville extrapolation of g(eta) to eta -> 0 from nodes eta0 / 2^j.
template <class G>
double extrapolate_to_zero(G g, double eta0, int levels, double* err = nullptr) {
    std::vector<double> x(levels), p(levels);
    for (int j = 0; j < levels; ++j) {
        x[j] = eta0 / double(1 << j);
        p[j] = g(x[j]);
    }
    double prev = p[levels - 1];
    for (int k = 1; k < levels; ++k) {
        for (int j = levels - 1; j >= k; --j) {
            p[j] = p[j] + (p[j] - p[j - 1]) * x[j] / (x[j - k] - x[j]);
        }
        if (k == levels - 2) prev = p[levels - 1];
    }
    if (err) *err = std::abs(p[levels - 1] - prev);
    return p[levels - 1];
}

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

/// Unweighted least squares y = slope*x + intercept.
LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace tachyon::numeric

#endif
