#pragma once

// Internal solver helpers shared by the library implementation.
// Not installed, not part of the public surface.

#include "bjnear/types.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace bjnear::detail {

/// Golden-section minimization of a unimodal function on [lo, hi].
/// Returns (argmin, min). Deterministic, fixed iteration count.
inline std::pair<double, double> golden_min(const std::function<double(double)>& f, double lo,
                                            double hi, int iters = 80) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int k = 0; k < iters; ++k) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return (f1 <= f2) ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

inline std::pair<double, double> golden_max(const std::function<double(double)>& f, double lo,
                                            double hi, int iters = 80) {
    auto [x, fneg] = golden_min([&](double t) { return -f(t); }, lo, hi, iters);
    return {x, -fneg};
}

/// Euclidean projection of a real vector onto the probability simplex
/// { p : p_i >= 0, sum p_i = 1 }.
inline RealVec project_simplex(const RealVec& v) {
    const int n = static_cast<int>(v.size());
    std::vector<double> u(v.data(), v.data() + n);
    std::sort(u.begin(), u.end(), std::greater<double>());
    double cssv = 0.0;
    double tau = 0.0;
    int rho = 0;
    for (int j = 0; j < n; ++j) {
        cssv += u[static_cast<std::size_t>(j)];
        const double t = (cssv - 1.0) / (j + 1);
        if (u[static_cast<std::size_t>(j)] - t > 0) {
            rho = j + 1;
            tau = t;
        }
    }
    RealVec p(n);
    for (int i = 0; i < n; ++i) p[i] = std::max(v[i] - tau, 0.0);
    return p;
}

/// Adaptive level control for Polyak-type subgradient steps when the optimal
/// value is unknown: the step targets best-so-far minus `level`, and the
/// level halves whenever a window of iterations fails to realize enough of
/// the promised decrease.
struct PolyakLevel {
    double level;
    double floor_level;
    int window;
    int since_check = 0;
    double best_at_window_start;

    PolyakLevel(double initial, double floor_value, int window_size, double current_best)
        : level(std::max(initial, floor_value)),
          floor_level(floor_value),
          window(window_size),
          best_at_window_start(current_best) {}

    double target(double best) const { return best - level; }

    /// Advance one iteration; returns false once the level has collapsed to
    /// the floor (no further meaningful progress is expected).
    bool step(double best) {
        if (++since_check >= window) {
            since_check = 0;
            if (best_at_window_start - best < 0.25 * level) level = 0.5 * level;
            best_at_window_start = best;
        }
        return level > floor_level;
    }
};

}  // namespace bjnear::detail
