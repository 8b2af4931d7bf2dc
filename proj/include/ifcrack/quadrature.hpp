#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "ifcrack/error.hpp"

namespace ifcrack {

struct RombergOptions {
    double rel_tol = 1e-13;
    double abs_tol = 1e-14;
    int max_levels = 22;
};

/// Romberg extrapolation over composite midpoint sums. Midpoints keep the
/// integrand away from the endpoints, which matters for the paired PV form.
inline double romberg_midpoint(const std::function<double(double)>& g, double a, double b,
                               const RombergOptions& opt = {}) {
    if (a == b) return 0.0;
    std::vector<double> prev, cur;
    long panels = 1;
    for (int level = 0; level < opt.max_levels; ++level, panels *= 2) {
        const double h = (b - a) / static_cast<double>(panels);
        double m = 0.0;
        for (long i = 0; i < panels; ++i) m += g(a + (static_cast<double>(i) + 0.5) * h);
        cur.assign(1, m * h);
        double f = 4.0;
        for (int j = 1; j <= level; ++j, f *= 4.0) cur.push_back(cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (f - 1.0));
        if (level >= 3) {
            const double diff = std::abs(cur.back() - prev.back());
            if (diff <= std::max(opt.abs_tol, opt.rel_tol * std::abs(cur.back()))) return cur.back();
        }
        prev.swap(cur);
    }
    throw NonConvergence("Romberg refinement stalled");
}

/// Principal value of int_a^b f(r)/(r - x) dr for smooth f and a < x < b.
/// The symmetric part around x is folded into the regular integrand
/// (f(x+t) - f(x-t))/t; the rest is integrated on panels that double in
/// width away from x.
inline double pv_quadrature_oracle(const std::function<double(double)>& f, double a, double b, double x,
                                   const RombergOptions& opt = {}) {
    if (!(a < x && x < b)) throw DomainError("singular point must be interior to the interval");
    const double d = std::min(x - a, b - x);
    double total = romberg_midpoint([&](double t) { return (f(x + t) - f(x - t)) / t; }, 0.0, d, opt);

    auto graded = [&](double from, double to) {
        // from is at distance d from x; march outward with doubling panels
        const double dir = to > from ? 1.0 : -1.0;
        double s = 0.0, lo = from, w = d;
        while (dir * (to - lo) > 0.0) {
            const double hi = dir > 0 ? std::min(lo + w, to) : std::max(lo - w, to);
            s += romberg_midpoint([&](double r) { return f(r) / (r - x); }, std::min(lo, hi), std::max(lo, hi), opt);
            lo = hi;
            w *= 2.0;
        }
        return s;
    };
    if (x + d < b) total += graded(x + d, b);
    if (x - d > a) total += graded(x - d, a);
    return total;
}

}  // namespace ifcrack
