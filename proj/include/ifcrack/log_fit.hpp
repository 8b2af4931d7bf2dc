#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "ifcrack/error.hpp"

namespace ifcrack {

/// value(t) ~ c0 + c1 ln t + c2 ln^2 t
struct LogFit {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double rms = 0.0;
};

inline LogFit fit_log_basis(const std::vector<double>& t, const std::vector<double>& v) {
    if (t.size() != v.size()) throw DimensionMismatch("sample abscissae and values differ in length");
    if (t.size() < 6) throw PreconditionViolation("log fit needs at least 6 samples");
    for (double ti : t)
        if (!(ti > 0.0) || !std::isfinite(ti)) throw PreconditionViolation("log fit needs t > 0");
    std::vector<double> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() < 3)
        throw RankDeficient("log fit needs at least 3 distinct t");

    const auto n = static_cast<Eigen::Index>(t.size());
    Eigen::MatrixXd B(n, 3);
    Eigen::VectorXd y(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double L = std::log(t[i]);
        B(i, 0) = 1.0;
        B(i, 1) = L;
        B(i, 2) = L * L;
        y(i) = v[i];
    }
    const Eigen::Vector3d c = B.colPivHouseholderQr().solve(y);
    LogFit out{c(0), c(1), c(2), 0.0};
    out.rms = std::sqrt((B * c - y).squaredNorm() / static_cast<double>(n));
    return out;
}

}  // namespace ifcrack
