#pragma once

#include <cmath>

namespace locc::detail {

struct BisectResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Bisection for a decreasing f with f(lo) >= 0 >= f(hi).  Stops when
// |f(mid)| <= f_tol or the bracket narrows below x_tol, whichever first;
// pass f_tol = 0 to drive purely on the bracket.  converged stays false if
// the iteration budget runs out first.
template <typename F>
BisectResult bisect_decreasing(F&& f, double lo, double hi, double f_tol,
                               double x_tol, int max_iters) {
    BisectResult r;
    for (int it = 0; it < max_iters; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        r.x = mid;
        r.fx = fm;
        r.iterations = it + 1;
        if ((f_tol > 0.0 && std::abs(fm) <= f_tol) || (hi - lo) < x_tol) {
            r.converged = true;
            return r;
        }
        if (fm > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return r;
}

} // namespace locc::detail
