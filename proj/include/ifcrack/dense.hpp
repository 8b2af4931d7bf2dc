#pragma once

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "ifcrack/error.hpp"

namespace ifcrack {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

struct LinearSystem {
    Eigen::Index dimension = 0;
    Matrix matrix;
    Vector rhs;

    LinearSystem() = default;
    explicit LinearSystem(Eigen::Index n) : dimension(n), matrix(Matrix::Zero(n, n)), rhs(Vector::Zero(n)) {}
};

struct SolveReport {
    Vector solution;
    double condition_estimate = 0.0;  // 1-norm estimate after row equilibration
    double residual_norm = 0.0;       // max |A x - b| on the original system
};

struct SolveOptions {
    double max_condition = 1e12;
    int refinement_steps = 2;
};

/// Rows are scaled to unit max-norm before an LU with partial pivoting; the
/// condition estimate and the rejection threshold refer to the scaled matrix.
inline SolveReport solve_dense(const LinearSystem& sys, const SolveOptions& opt = {}) {
    const auto n = sys.dimension;
    if (n <= 0 || sys.matrix.rows() != n || sys.matrix.cols() != n || sys.rhs.size() != n)
        throw DimensionMismatch("linear system shape does not match its dimension");

    Vector scale(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double m = sys.matrix.row(i).cwiseAbs().maxCoeff();
        if (!(m > 0.0) || !std::isfinite(m)) throw SingularMatrix("row " + std::to_string(i) + " is zero or not finite");
        scale(i) = 1.0 / m;
    }
    const Matrix scaled = scale.asDiagonal() * sys.matrix;
    const Vector scaled_rhs = scale.asDiagonal() * sys.rhs;

    Eigen::PartialPivLU<Matrix> lu(scaled);
    const auto& U = lu.matrixLU();
    for (Eigen::Index i = 0; i < n; ++i)
        if (U(i, i) == 0.0 || !std::isfinite(U(i, i))) throw SingularMatrix("zero pivot in LU factorization");

    SolveReport rep;
    const double rcond = lu.rcond();
    rep.condition_estimate = rcond > 0.0 ? 1.0 / rcond : INFINITY;
    if (!(rep.condition_estimate <= opt.max_condition))
        throw IllConditioned("condition estimate " + std::to_string(rep.condition_estimate) + " exceeds " +
                                 std::to_string(opt.max_condition),
                             rep.condition_estimate);

    rep.solution = lu.solve(scaled_rhs);
    for (int k = 0; k < opt.refinement_steps; ++k) {
        const Vector r = scaled_rhs - scaled * rep.solution;
        if (r.cwiseAbs().maxCoeff() == 0.0) break;
        rep.solution += lu.solve(r);
    }
    rep.residual_norm = n ? (sys.matrix * rep.solution - sys.rhs).cwiseAbs().maxCoeff() : 0.0;

    const double bound = 1e-9 * sys.matrix.cwiseAbs().maxCoeff() * rep.solution.cwiseAbs().maxCoeff();
    if (rep.residual_norm > bound && rep.residual_norm > 0.0)
        throw NumericalError("solve residual " + std::to_string(rep.residual_norm) + " above bound " +
                             std::to_string(bound));
    return rep;
}

}  // namespace ifcrack
