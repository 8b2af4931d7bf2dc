#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ifcrack/cauchy.hpp"
#include "ifcrack/quadrature.hpp"

using namespace ifcrack;
using K = CauchyKind;

namespace {

// PV int_{-l}^{l} r^k/(r - x) dr: closed form on the crack, direct quadrature
// of the regular integrand off it (the closed form cancels badly for large x).
double inner_closed(int k, double x, double l) {
    if (std::abs(x) > l) return romberg_midpoint([&](double r) { return std::pow(r, k) / (r - x); }, -l, l);
    double v = std::pow(x, k) * std::log(std::abs((l - x) / (l + x)));
    for (int m = 0; m < k; ++m)
        if ((m + 1) % 2 == 1) v += std::pow(x, k - 1 - m) * 2.0 * std::pow(l, m + 1) / (m + 1);
    return v;
}

// int_{|r|>l} r^-k/(r - x) dr. Outside the crack: inversion r = l^2/s, which
// maps it to an inner integral of s^(k-1) with the singular point at l^2/x.
// Inside, the folded integrand is regular and the closed form cancels badly
// for small x, so integrate it directly.
double outer_closed(int k, double x, double l) {
    if (std::abs(x) < l)
        return romberg_midpoint(
            [&](double s) { return std::pow(l, 2 - 2 * k) * std::pow(s, k - 1) / (l * l - x * s); }, -l, l);
    return -std::pow(l, 2 - 2 * k) / x * inner_closed(k - 1, l * l / x, l);
}

}  // namespace

TEST(CauchyMonomial, SpecExamples) {
    EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, 0, 0.0, 1.0), 0.0, 1e-15);
    EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, 0, 0.5, 1.0), std::log(1.0 / 3.0), 1e-12);
    EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, 0, 0.5, 1.0), -1.09861, 1e-5);
    EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, 1, 0.5, 1.0), 2.0 + 0.5 * std::log(1.0 / 3.0), 1e-12);
    EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, 1, 0.5, 1.0), 1.45069, 1e-5);
    EXPECT_NEAR(cauchy_monomial_integral(K::outer_inner, 1, 0.0, 1.0), 2.0, 1e-15);
}

TEST(CauchyMonomial, AgreesWithClosedFormsAllKinds) {
    std::mt19937_64 rng(2024);
    for (double l : {1.0, 0.7, 2.5}) {
        std::uniform_real_distribution<double> in(-0.97 * l, 0.97 * l);
        std::uniform_real_distribution<double> out(1.03 * l, 8.0 * l);
        for (int trial = 0; trial < 25; ++trial) {
            const double xi = in(rng);
            const double xo = (trial % 2 ? 1.0 : -1.0) * out(rng);
            for (int k = 0; k <= 6; ++k) {
                const double a = inner_closed(k, xi, l);
                EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, k, xi, l), a, 1e-10 * std::max(1.0, std::abs(a)));
                const double b = inner_closed(k, xo, l);
                EXPECT_NEAR(cauchy_monomial_integral(K::inner_outer, k, xo, l), b, 1e-10 * std::max(1.0, std::abs(b)));
                if (k == 0) continue;
                const double c = outer_closed(k, xi, l);
                EXPECT_NEAR(cauchy_monomial_integral(K::outer_inner, k, xi, l), c, 1e-10 * std::max(1.0, std::abs(c)));
                const double d = outer_closed(k, xo, l);
                EXPECT_NEAR(cauchy_monomial_integral(K::outer_outer, k, xo, l), d, 1e-10 * std::max(1.0, std::abs(d)));
            }
        }
    }
}

TEST(CauchyMonomial, MatchesQuadratureOracle) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> in(-0.95, 0.95);
    for (int i = 0; i < 20; ++i) {
        const double x = in(rng);
        for (int k = 0; k <= 6; ++k) {
            const double q = pv_quadrature_oracle([k](double r) { return std::pow(r, k); }, -1.0, 1.0, x);
            EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, k, x, 1.0), q, 1e-8);
        }
    }
}

TEST(CauchyMonomial, LogDualityProperty) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> in(-0.98, 0.98);
    for (int i = 0; i < 200; ++i) {
        const double x = in(rng) * 1.7;
        EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, 0, x, 1.7), std::log(std::abs((1.7 - x) / (1.7 + x))),
                    1e-10);
    }
}

TEST(CauchyMonomial, DomainErrors) {
    EXPECT_THROW(cauchy_monomial_integral(K::inner_inner, 0, 1.0, 1.0), DomainError);
    EXPECT_THROW(cauchy_monomial_integral(K::inner_inner, 0, 1.5, 1.0), DomainError);
    EXPECT_THROW(cauchy_monomial_integral(K::outer_inner, 2, -1.0, 1.0), DomainError);
    EXPECT_THROW(cauchy_monomial_integral(K::inner_outer, 2, 0.5, 1.0), DomainError);
    EXPECT_THROW(cauchy_monomial_integral(K::outer_outer, 2, 1.0, 1.0), DomainError);
    EXPECT_THROW(cauchy_monomial_integral(K::outer_inner, 0, 0.5, 1.0), DomainError);
    EXPECT_THROW(cauchy_monomial_integral(K::outer_outer, 0, 2.0, 1.0), DomainError);
}

TEST(CauchyMonomial, TruncationCap) {
    EXPECT_THROW(cauchy_monomial_integral(K::inner_inner, 1, 0.9999, 1.0), TruncationError);
    EXPECT_THROW(cauchy_monomial_integral(K::outer_outer, 1, 1.0001, 1.0), TruncationError);
    EXPECT_THROW(cauchy_monomial_integral(K::inner_inner, 1, 0.5, 1.0, kMaxTruncation + 1), TruncationError);
    EXPECT_NO_THROW(cauchy_monomial_integral(K::inner_inner, 1, 0.98, 1.0));
    // explicit orders converge to the adaptive value
    const double a = cauchy_monomial_integral(K::inner_inner, 3, 0.6, 1.0);
    EXPECT_NEAR(cauchy_monomial_integral(K::inner_inner, 3, 0.6, 1.0, 200), a, 1e-14);
    EXPECT_GT(std::abs(cauchy_monomial_integral(K::inner_inner, 3, 0.6, 1.0, 4) - a), 1e-4);
}

TEST(CauchySeriesCoefficients, MatchSeriesEvaluation) {
    // the coefficient helpers used in assembly reproduce the series sums
    const double l = 1.3, x = 0.4;
    for (int j = 0; j <= 4; ++j) {
        double s = 0.0;
        for (int m = 0; m < 400; ++m) s += series::c_in(j, m, l) * std::pow(x, m);
        EXPECT_NEAR(s, inner_closed(j, x, l), 1e-12);
    }
    const double X = 3.1;
    for (int j = 1; j <= 4; ++j) {
        double s = 0.0;
        for (int m = 1; m < 400; ++m) s += series::d_out(j, m, l) * std::pow(X, -m);
        EXPECT_NEAR(s, outer_closed(j, X, l), 1e-12);
        double t = 0.0;
        for (int m = 0; m < 400; ++m) t += series::c_out(j, m, l) * std::pow(x, m);
        EXPECT_NEAR(t, outer_closed(j, x, l), 1e-12);
    }
    for (int j = 0; j <= 4; ++j) {
        double s = 0.0;
        for (int m = 1; m < 400; ++m) s += series::d_in(j, m, l) * std::pow(X, -m);
        EXPECT_NEAR(s, inner_closed(j, X, l), 1e-12);
    }
}

TEST(PvQuadrature, Examples) {
    auto one = [](double) { return 1.0; };
    EXPECT_NEAR(pv_quadrature_oracle(one, -1.0, 1.0, 0.0), 0.0, 1e-14);
    EXPECT_NEAR(pv_quadrature_oracle(one, -1.0, 1.0, 0.5), std::log(1.0 / 3.0), 1e-12);
    EXPECT_NEAR(pv_quadrature_oracle([](double r) { return r * r; }, -1.0, 1.0, 0.0), 0.0, 1e-14);
}

TEST(PvQuadrature, PolynomialsToDegreeEight) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> c(-1.0, 1.0), in(-0.999, 0.999);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<double> coef(9);
        for (double& v : coef) v = c(rng);
        const double x = in(rng);
        auto f = [&](double r) {
            double s = 0.0;
            for (int k = 8; k >= 0; --k) s = s * r + coef[k];
            return s;
        };
        double exact = 0.0;
        for (int k = 0; k <= 8; ++k) exact += coef[k] * inner_closed(k, x, 1.0);
        EXPECT_NEAR(pv_quadrature_oracle(f, -1.0, 1.0, x), exact, 1e-10);
    }
}

TEST(PvQuadrature, RejectsEndpointSingularity) {
    EXPECT_THROW(pv_quadrature_oracle([](double) { return 1.0; }, -1.0, 1.0, 1.0), DomainError);
}
