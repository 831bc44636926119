#include "wqed/core/hfunc.hpp"

#include <cmath>

namespace wqed {

double h(double t) { return -(2.0 * std::exp(-t) + t - 2.0); }

double h_prime(double t) { return 2.0 * std::exp(-t) - 1.0; }

namespace {

double compute_tsp() {
    // h(1) > 0 > h(2); bisect to a narrow bracket, then polish with Newton.
    double lo = 1.0, hi = 2.0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (h(mid) > 0.0 ? lo : hi) = mid;
    }
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 50; ++it) {
        const double step = h(t) / h_prime(t);
        t -= step;
        if (std::abs(step) < 1e-13) break;
    }
    return t;
}

}  // namespace

double special_time_tsp() {
    static const double tsp = compute_tsp();
    return tsp;
}

double peak_rate_time() { return std::log(2.0); }

}  // namespace wqed
