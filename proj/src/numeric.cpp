#include "tachyon/numeric.hpp"

#include <cmath>

namespace tachyon::numeric {

double wynn_epsilon(const std::vector<double>& sums, double* err) {
    const std::size_t n = sums.size();
    if (n == 1) {
        if (err) *err = HUGE_VAL;
        return sums[0];
    }
    // eps table, current and previous columns
    std::vector<double> cur = sums, prev(n, 0.0), older;
    double best = sums.back();
    double best_err = std::abs(sums[n - 1] - sums[n - 2]);
    for (std::size_t k = 1; k < n; ++k) {
        older = prev;
        prev = cur;
        cur.assign(n - k, 0.0);
        for (std::size_t j = 0; j + k < n; ++j) {
            const double d = prev[j + 1] - prev[j];
            if (d == 0.0) {
                // exact convergence of the previous column
                if (err) *err = 0.0;
                return prev[j + 1];
            }
            const double base = (k == 1) ? 0.0 : older[j + 1];
            cur[j] = base + 1.0 / d;
        }
        if (k % 2 == 0 && cur.size() >= 2) {
            const double e = std::abs(cur.back() - cur[cur.size() - 2]);
            if (e < best_err) {
                best_err = e;
                best = cur.back();
            }
        }
    }
    if (err) *err = best_err;
    return best;
}

LinearFit fit_line(const std::vector<double>& xs, const std::vector<double>& ys) {
    const std::size_t n = xs.size();
    if (n < 2 || ys.size() != n) throw std::invalid_argument("fit_line: need >= 2 paired points");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / double(n), my = sy / double(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line: degenerate abscissas");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ss += r * r;
    }
    fit.slope_stderr = (n > 2) ? std::sqrt(ss / double(n - 2) / sxx) : 0.0;
    return fit;
}

}  // namespace tachyon::numeric
