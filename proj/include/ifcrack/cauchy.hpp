#pragma once

#include <cmath>
#include <string>

#include "ifcrack/error.hpp"

namespace ifcrack {

/// Principal-value integrals of monomials against the Cauchy kernel 1/(r - x).
/// The first word names the integration domain (inner: |r| < l, outer: |r| > l),
/// the second the location of x. Inner integrands are r^k, outer ones r^-k.
enum class CauchyKind { inner_inner, outer_inner, inner_outer, outer_outer };

inline constexpr int kMaxTruncation = 2000;

namespace series {

inline double odd_gap(long n) { return (n % 2 != 0) ? 2.0 : 0.0; }  // 1 - (-1)^n

// Each coefficient multiplies x^m (point inside) or x^-m (point outside).
// j is the monomial power of the integrand, m the power of the result.

/// int_{|r|<l} r^j / (r - x) dr, coefficient of x^m, |x| < l.
inline double c_in(int j, int m, double l) {
    if (j == m) return 0.0;
    return -odd_gap(m - j) / (m - j) * std::pow(l, j - m);
}

/// int_{|r|>l} r^-j / (r - x) dr, coefficient of x^m, |x| < l.
inline double c_out(int j, int m, double l) { return odd_gap(j + m) / (j + m) * std::pow(l, -j - m); }

/// int_{|r|<l} r^j / (r - x) dr, coefficient of x^-m, |x| > l.
inline double d_in(int j, int m, double l) { return -odd_gap(j + m) / (j + m) * std::pow(l, j + m); }

/// int_{|r|>l} r^-j / (r - x) dr, coefficient of x^-m, |x| > l.
inline double d_out(int j, int m, double l) {
    if (j == m) return 0.0;
    return odd_gap(m - j) / (m - j) * std::pow(l, m - j);
}

}  // namespace series

/// Smallest J with q^J < 1e-12, shifted by the monomial power.
inline int required_truncation(double q, int k) {
    if (q == 0.0) return k + 2;
    const double j = std::ceil(std::log(1e-12) / std::log(q));
    if (!(j + k + 1 <= kMaxTruncation))
        throw TruncationError("series needs more than " + std::to_string(kMaxTruncation) +
                              " terms at |x|/l ratio " + std::to_string(q));
    return static_cast<int>(j) + k + 1;
}

/// Truncated series value. `J <= 0` picks the order adaptively.
inline double cauchy_monomial_integral(CauchyKind kind, int k, double x, double l, int J = 0) {
    if (k < 0) throw DomainError("monomial power must be nonnegative");
    const bool point_inside = kind == CauchyKind::inner_inner || kind == CauchyKind::outer_inner;
    const bool outer_integrand = kind == CauchyKind::outer_inner || kind == CauchyKind::outer_outer;
    const double ax = std::abs(x);
    if (point_inside && !(ax < l)) throw DomainError("point must satisfy |x| < l");
    if (!point_inside && !(ax > l)) throw DomainError("point must satisfy |x| > l");
    if (outer_integrand && k < 1) throw DomainError("outer integrand needs k >= 1");

    const double q = point_inside ? ax / l : l / ax;
    if (J <= 0) J = required_truncation(q, k);
    else if (J > kMaxTruncation) throw TruncationError("requested truncation exceeds cap");

    // Work in the scaled variable s = x/l (or l/x) so powers of l factor out.
    const double s = point_inside ? x / l : l / x;
    double sum = 0.0;
    switch (kind) {
    case CauchyKind::inner_inner: {
        // l^k * sum_m -(1-(-1)^(m-k))/(m-k) s^m
        double p = 1.0;
        for (int m = 0; m <= J; ++m, p *= s)
            if ((m - k) % 2 != 0) sum -= 2.0 / (m - k) * p;
        return std::pow(l, k) * sum;
    }
    case CauchyKind::outer_inner: {
        double p = 1.0;
        for (int m = 0; m <= J; ++m, p *= s)
            if ((m + k) % 2 != 0) sum += 2.0 / (m + k) * p;
        return std::pow(l, -k) * sum;
    }
    case CauchyKind::inner_outer: {
        double p = s;
        for (int m = 1; m <= J; ++m, p *= s)
            if ((m + k) % 2 != 0) sum -= 2.0 / (m + k) * p;
        return std::pow(l, k) * sum;
    }
    case CauchyKind::outer_outer: {
        double p = s;
        for (int m = 1; m <= J; ++m, p *= s)
            if ((m - k) % 2 != 0) sum += 2.0 / (m - k) * p;
        return std::pow(l, -k) * sum;
    }
    }
    return sum;
}

/// sum_j c[j] * cauchy_monomial_integral(kind, j + first, x, l).
template <class Vec>
double cauchy_series_sum(CauchyKind kind, const Vec& c, int first, double x, double l) {
    double s = 0.0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(c.size()); ++i)
        if (c[i] != 0.0) s += c[i] * cauchy_monomial_integral(kind, static_cast<int>(i) + first, x, l);
    return s;
}

}  // namespace ifcrack
