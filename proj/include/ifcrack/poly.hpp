#pragma once

#include <cmath>
#include <vector>

namespace ifcrack::poly {

/// d-th derivative of sum_k c[k] x^k at x (Horner on the differentiated coefficients).
inline double eval(const std::vector<double>& c, double x, int d = 0) {
    double s = 0.0;
    for (std::size_t i = c.size(); i-- > static_cast<std::size_t>(d);) {
        double f = 1.0;
        for (int m = 0; m < d; ++m) f *= static_cast<double>(i - m);
        s = s * x + f * c[i];
    }
    return s;
}

/// int_a^b sum_k c[k] t^k dt
inline double integrate(const std::vector<double>& c, double a, double b) {
    double sa = 0.0, sb = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        const double w = c[i] / static_cast<double>(i + 1);
        sa = sa * a + w;
        sb = sb * b + w;
    }
    return sb * b - sa * a;
}

/// d-th derivative of sum_{k>=1} c[k-1] x^-k at x.
inline double eval_inverse(const std::vector<double>& c, double x, int d = 0) {
    const double inv = 1.0 / x;
    double s = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        double f = (d % 2 == 0) ? 1.0 : -1.0;
        for (int m = 0; m < d; ++m) f *= static_cast<double>(k + m);
        s += f * c[i] * std::pow(inv, k + d);
    }
    return s;
}

}  // namespace ifcrack::poly
