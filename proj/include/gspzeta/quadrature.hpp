#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "gspzeta/errors.hpp"

namespace gspzeta {

template <class T>
struct QuadratureResult {
    T value{};
    double error_estimate = 0.0;
    int levels = 0;
};

struct ExpSinhOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    int max_levels = 10;
};

/// Integrates f over [a, inf) with the exp-sinh rule
///   x = a + exp(pi/2 sinh t),  dx = (pi/2) cosh t exp(pi/2 sinh t) dt,
/// halving the step until two successive levels agree. Handles integrable
/// endpoint singularities at a and exponential decay at infinity.
template <class F>
auto exp_sinh_integrate(F&& f, double a, const ExpSinhOptions& opts = {})
    -> QuadratureResult<decltype(f(a))> {
    using T = decltype(f(a));
    constexpr double half_pi = std::numbers::pi / 2;
    // exp(pi/2 sinh t) stays within [1e-300, 1e300] on this window.
    constexpr double t_lo = -6.75;
    constexpr double t_hi = 6.75;

    auto sweep = [&](double h) {
        T sum{};
        for (int dir : {+1, -1}) {
            int quiet = 0;
            for (int k = (dir > 0 ? 0 : 1);; ++k) {
                const double t = dir * k * h;
                if (t < t_lo || t > t_hi) break;
                const double e = std::exp(half_pi * std::sinh(t));
                const double w = half_pi * std::cosh(t) * e;
                const double x = a + e;
                const T term = f(x) * w;
                if (!std::isfinite(std::abs(term))) {
                    std::ostringstream os;
                    os << "non-finite integrand at x = " << x;
                    throw QuadratureError(os.str());
                }
                sum += term;
                // Stop once the tail is negligible; both tails decay double-exponentially.
                if (std::abs(term) <= 1e-20 * std::abs(sum)) {
                    if (++quiet >= 3 && k > 4) break;
                } else {
                    quiet = 0;
                }
            }
        }
        return sum * h;
    };

    QuadratureResult<T> result;
    T previous = sweep(1.0);
    for (int level = 1; level <= opts.max_levels; ++level) {
        const double h = std::ldexp(1.0, -level);
        const T current = sweep(h);
        const double diff = std::abs(current - previous);
        result.value = current;
        result.error_estimate = diff;
        result.levels = level;
        if (level >= 3 && (diff <= opts.rel_tol * std::abs(current) || diff <= opts.abs_tol)) return result;
        previous = current;
    }
    std::ostringstream os;
    os << "exp-sinh quadrature did not converge (last difference " << result.error_estimate << ")";
    throw QuadratureError(os.str());
}

}  // namespace gspzeta
