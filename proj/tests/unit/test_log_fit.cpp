#include <gtest/gtest.h>

#include <cmath>

#include "ifcrack/log_fit.hpp"

using namespace ifcrack;

namespace {
std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> t;
    for (int i = 0; i < n; ++i) t.push_back(a * std::pow(b / a, static_cast<double>(i) / (n - 1)));
    return t;
}
}  // namespace

TEST(LogFit, Constant) {
    const auto t = logspace(1e-3, 1e-1, 12);
    const auto f = fit_log_basis(t, std::vector<double>(t.size(), 5.0));
    EXPECT_NEAR(f.c0, 5.0, 1e-12);
    EXPECT_NEAR(f.c1, 0.0, 1e-12);
    EXPECT_NEAR(f.c2, 0.0, 1e-12);
    EXPECT_LT(f.rms, 1e-12);
}

TEST(LogFit, ExactBasisRecovery) {
    const auto t = logspace(1e-4, 0.5, 10);
    std::vector<double> v;
    for (double x : t) v.push_back(3 * std::log(x) * std::log(x) - 2 * std::log(x) + 1);
    const auto f = fit_log_basis(t, v);
    EXPECT_NEAR(f.c0, 1.0, 1e-10);
    EXPECT_NEAR(f.c1, -2.0, 1e-10);
    EXPECT_NEAR(f.c2, 3.0, 1e-10);
}

TEST(LogFit, LeadingCoefficientConvergesAsWindowShrinks) {
    double prev_err = INFINITY;
    for (double w : {1e-1, 1e-2, 1e-3, 1e-4}) {
        const auto t = logspace(w * 1e-3, w, 30);
        std::vector<double> v;
        for (double x : t) v.push_back(std::log(x) * std::log(x) + x);
        const double err = std::abs(fit_log_basis(t, v).c2 - 1.0);
        EXPECT_LT(err, prev_err);
        prev_err = err;
    }
    EXPECT_LT(prev_err, 1e-4);
}

TEST(LogFit, ZeroDataGivesExactZeros) {
    const auto t = logspace(1e-3, 1e-1, 40);
    const auto f = fit_log_basis(t, std::vector<double>(t.size(), 0.0));
    EXPECT_EQ(f.c0, 0.0);
    EXPECT_EQ(f.c1, 0.0);
    EXPECT_EQ(f.c2, 0.0);
}

TEST(LogFit, Preconditions) {
    EXPECT_THROW(fit_log_basis({0.1, 0.2, 0.3, 0.4, 0.5}, {1, 1, 1, 1, 1}), PreconditionViolation);
    EXPECT_THROW(fit_log_basis({0.1, 0.2, 0.0, 0.4, 0.5, 0.6}, {1, 1, 1, 1, 1, 1}), PreconditionViolation);
    EXPECT_THROW(fit_log_basis({0.1, 0.1, 0.1, 0.2, 0.2, 0.2}, {1, 1, 1, 1, 1, 1}), RankDeficient);
    EXPECT_NO_THROW(fit_log_basis({0.1, 0.1, 0.3, 0.2, 0.2, 0.2}, {1, 2, 1, 1, 1, 1}));
}
