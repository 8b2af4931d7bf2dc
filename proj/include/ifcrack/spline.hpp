#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "ifcrack/dense.hpp"
#include "ifcrack/model.hpp"
#include "ifcrack/taylor.hpp"

namespace ifcrack {

struct SplineGrid {
    int N = 0;
    double l = 1.0;
    double h = 1.0;
    std::vector<double> nodes;      // 2N+1
    std::vector<double> midpoints;  // 2N, midpoints[m-1] is the midpoint of piece m

    SplineGrid() = default;
    SplineGrid(int n, double half_length) : N(n), l(half_length), h(half_length / n) {
        for (int j = 0; j <= 2 * N; ++j) nodes.push_back(-l + j * h);
        nodes[N] = 0.0;
        nodes[2 * N] = l;
        for (int j = 1; j <= 2 * N; ++j) midpoints.push_back(-l + (j - 0.5) * h);
    }

    /// Piece index m in 1..2N containing x (clamped).
    int piece(double x) const {
        const int m = static_cast<int>(std::floor((x + l) / h)) + 1;
        return std::clamp(m, 1, 2 * N);
    }
};

/// Kernels and substitution terms of the finite-interval form, where the
/// interface functions are pulled back to the crack by x -> l^2/x.
struct FiniteKernels {
    double l = 1.0;

    static double cauchy(double r, double x) { return 1.0 / (r - x); }
    double inversion(double r, double x) const { return 1.0 / (r * x - l * l); }

    template <class F>
    double pull_back(const F& f, double x) const {
        return l * l / x * f(l * l / x);
    }

    /// Bending term of the interface shear equation in terms of psi0.
    double bending(double x, double psi0, double dpsi0, double ddpsi0) const {
        return (2 * x * x * psi0 + 4 * x * x * x * dpsi0 + x * x * x * x * ddpsi0) / std::pow(l, 4);
    }
    /// Tension term of the interface normal equation in terms of psi0.
    double tension(double x, double psi0, double dpsi0) const { return (x * psi0 + x * x * dpsi0) / (l * l); }
};

inline FiniteKernels transform_to_finite(const Problem& p) { return FiniteKernels{p.half_length}; }

/// nu_m(d, a) = PV int_{-a}^{a} u^m/(u - d) du for m = 0..3.
inline std::array<double, 4> piece_moments(double d, double a) {
    std::array<double, 4> out{};
    if (std::abs(d) >= 4 * a) {
        for (int m = 0; m < 4; ++m) {
            double s = 0.0, dn = d;  // d^(n+1)
            for (int n = 0; n < 200; ++n, dn *= d) {
                if ((m + n) % 2 != 0) continue;
                const double t = -2.0 * std::pow(a, m + n + 1) / (m + n + 1) / dn;
                s += t;
                if (std::abs(t) < 1e-18 * std::max(1.0, std::abs(s))) break;
            }
            out[m] = s;
        }
        return out;
    }
    const double L = d == 0.0 ? 0.0 : std::log(std::abs((a - d) / (-a - d)));
    const double p = a - d, q = -a - d;
    static constexpr int binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    for (int m = 0; m < 4; ++m) {
        double v = std::pow(d, m) * L;
        for (int i = 1; i <= m; ++i) v += binom[m][i] * std::pow(d, m - i) * (std::pow(p, i) - std::pow(q, i)) / i;
        out[m] = v;
    }
    return out;
}

struct SplineSolution {
    SplineGrid grid;
    std::vector<double> w0, w1, w2;  // linear splines (phi0, phi1, phi2)
    std::vector<double> y0, y1, y2;  // cubic spline values (psi0, psi1, psi2)
    std::vector<double> z0, z1, z2;  // cubic spline second derivatives
    double condition_estimate = 0.0;
    double solve_residual = 0.0;
};

namespace spline_detail {

// Local coordinate on piece m: u in [-h/2, h/2], s = u + h/2, t = h/2 - u.
// Basis polynomials in u (ascending coefficients) for the nodal parameters.
struct Basis {
    std::array<double, 4> wR, wL, yR, yL, zR, zL;
};

inline Basis make_basis(double h) {
    const double a = h / 2;
    Basis b{};
    b.wR = {0.5, 1 / h, 0, 0};
    b.wL = {0.5, -1 / h, 0, 0};
    b.yR = {a / h, 1 / h, 0, 0};
    b.yL = {a / h, -1 / h, 0, 0};
    // s^3/(6h) - h s/6 and t^3/(6h) - h t/6
    b.zR = {a * a * a / (6 * h) - h * a / 6, 3 * a * a / (6 * h) - h / 6, 3 * a / (6 * h), 1 / (6 * h)};
    b.zL = {a * a * a / (6 * h) - h * a / 6, -(3 * a * a / (6 * h) - h / 6), 3 * a / (6 * h), -1 / (6 * h)};
    return b;
}

inline double dot(const std::array<double, 4>& c, const std::array<double, 4>& m) {
    return c[0] * m[0] + c[1] * m[1] + c[2] * m[2] + c[3] * m[3];
}

/// Unknown indices for the nine nodal families; -1 marks pinned entries.
struct Layout {
    enum Family { w1, w2, w0, y1, z1, y2, z2, y0, z0, count };
    std::array<std::vector<int>, count> idx;
    int dimension = 0;

    explicit Layout(int N) {
        const int M = 2 * N + 1;
        int cur = 0;
        for (int f = 0; f < count; ++f) {
            idx[f].assign(M, -1);
            for (int j = 0; j < M; ++j) {
                if ((f == w0 || f == y0) && j == N) continue;
                idx[f][j] = cur++;
            }
        }
        dimension = cur;
    }
    int at(int f, int j) const {
        if (j < 0 || j >= static_cast<int>(idx[f].size())) return -1;
        return idx[f][j];
    }
};

inline double eval_cubic(double yL, double yR, double zL, double zR, double h, double s) {
    const double t = h - s;
    return zR * s * s * s / (6 * h) + zL * t * t * t / (6 * h) + (yR / h - h * zR / 6) * s + (yL / h - h * zL / 6) * t;
}

inline double eval_cubic_d1(double yL, double yR, double zL, double zR, double h, double s) {
    const double t = h - s;
    return zR * s * s / (2 * h) - zL * t * t / (2 * h) + (yR / h - h * zR / 6) - (yL / h - h * zL / 6);
}

inline double eval_cubic_d2(double zL, double zR, double h, double s) { return (zR * s + zL * (h - s)) / h; }

/// int_0^s of the cubic piece.
inline double integrate_cubic(double yL, double yR, double zL, double zR, double h, double s) {
    const double t = h - s;
    return zR * std::pow(s, 4) / (24 * h) + zL * (std::pow(h, 4) - std::pow(t, 4)) / (24 * h) +
           (yR / h - h * zR / 6) * s * s / 2 + (yL / h - h * zL / 6) * (h * s - s * s / 2);
}

}  // namespace spline_detail

inline LinearSystem assemble_spline_system(const Problem& p, int N) {
    using namespace spline_detail;
    if (N < 4) throw PreconditionViolation("spline half-count must be at least 4");
    const auto c1 = derive_material_constants(p.mat1);
    const auto c2 = derive_material_constants(p.mat2);
    const double al1 = c1.alpha, be1 = c1.beta, al2 = c2.alpha, be2 = c2.beta;
    const auto& st = p.st;
    const double l = p.half_length;
    const auto load = p.load.padded(std::max<std::size_t>(p.load.degree_bound(), 1));
    const SplineGrid g(N, l);
    const double h = g.h, a = h / 2;
    const Layout lay(N);
    const Basis B = make_basis(h);
    const int M = 2 * N + 1;

    LinearSystem sys(lay.dimension);
    auto& A = sys.matrix;
    auto put = [&](int row, int fam, int j, double v) {
        const int c = lay.at(fam, j);
        if (c >= 0) A(row, c) += v;
    };
    using F = Layout::Family;

    std::vector<std::array<double, 4>> cauchy(2 * N + 1), inversion(2 * N + 1);
    auto lin_int = [&](int row, int fam, const std::vector<std::array<double, 4>>& mom, double sc) {
        for (int q = 1; q <= 2 * N; ++q) {
            put(row, fam, q, sc * dot(B.wR, mom[q]));
            put(row, fam, q - 1, sc * dot(B.wL, mom[q]));
        }
    };
    auto cub_int = [&](int row, int fy, int fz, const std::vector<std::array<double, 4>>& mom, double sc) {
        for (int q = 1; q <= 2 * N; ++q) {
            put(row, fy, q, sc * dot(B.yR, mom[q]));
            put(row, fy, q - 1, sc * dot(B.yL, mom[q]));
            put(row, fz, q, sc * dot(B.zR, mom[q]));
            put(row, fz, q - 1, sc * dot(B.zL, mom[q]));
        }
    };
    // value / first / second derivative of a cubic piece at its midpoint
    auto cub_at = [&](int row, int fy, int fz, int m, double sc, int der) {
        if (der == 0) {
            put(row, fy, m, sc * 0.5);
            put(row, fy, m - 1, sc * 0.5);
            put(row, fz, m, -sc * h * h / 16);
            put(row, fz, m - 1, -sc * h * h / 16);
        } else if (der == 1) {
            put(row, fy, m, sc / h);
            put(row, fy, m - 1, -sc / h);
            put(row, fz, m, -sc * h / 24);
            put(row, fz, m - 1, sc * h / 24);
        } else {
            put(row, fz, m, sc * 0.5);
            put(row, fz, m - 1, sc * 0.5);
        }
    };
    auto lin_at = [&](int row, int fam, int m, double sc) {
        put(row, fam, m, sc * 0.5);
        put(row, fam, m - 1, sc * 0.5);
    };

    int row = 0;
    for (int m = 1; m <= 2 * N; ++m) {
        const double x = g.midpoints[m - 1];
        for (int q = 1; q <= 2 * N; ++q) {
            const double c = g.midpoints[q - 1];
            cauchy[q] = piece_moments(x - c, a);
            // 1/(r x - l^2) = (1/x) / (r - l^2/x)
            inversion[q] = piece_moments(l * l / x - c, a);
            for (double& v : inversion[q]) v /= x;
        }
        const int r1 = row, r2 = row + 1, r3 = row + 2, r4 = row + 3, r5 = row + 4, r6 = row + 5;

        cub_at(r1, F::y1, F::z1, m, al1, 0);
        lin_int(r1, F::w1, cauchy, be1);
        lin_int(r1, F::w0, inversion, -be1);
        cub_at(r1, F::y1, F::z1, m, -st.g1_plus, 2);
        sys.rhs(r1) = poly::eval(load.f_plus, x) - p.far.tau;

        lin_at(r2, F::w1, m, -al1);
        cub_int(r2, F::y1, F::z1, cauchy, be1);
        cub_int(r2, F::y0, F::z0, inversion, -be1);
        cub_at(r2, F::y1, F::z1, m, st.g0_plus, 1);
        sys.rhs(r2) = poly::eval(load.g_plus, x) - p.far.sigma;

        cub_at(r3, F::y2, F::z2, m, al2, 0);
        lin_int(r3, F::w2, cauchy, -be2);
        lin_int(r3, F::w0, inversion, be2);
        cub_at(r3, F::y2, F::z2, m, st.g1_minus, 2);
        sys.rhs(r3) = poly::eval(load.f_minus, x) - p.far.tau;

        lin_at(r4, F::w2, m, -al2);
        cub_int(r4, F::y2, F::z2, cauchy, -be2);
        cub_int(r4, F::y0, F::z0, inversion, be2);
        cub_at(r4, F::y2, F::z2, m, -st.g0_minus, 1);
        sys.rhs(r4) = poly::eval(load.g_minus, x) - p.far.sigma;

        const double l2 = l * l, l4 = l2 * l2;
        cub_at(r5, F::y0, F::z0, m, al1 - al2, 0);
        lin_int(r5, F::w1, inversion, be1 * l2);
        lin_int(r5, F::w2, inversion, be2 * l2);
        lin_int(r5, F::w0, cauchy, -(be1 + be2));
        cub_at(r5, F::y0, F::z0, m, -st.g1_int * 2 * x * x / l4, 0);
        cub_at(r5, F::y0, F::z0, m, -st.g1_int * 4 * x * x * x / l4, 1);
        cub_at(r5, F::y0, F::z0, m, -st.g1_int * x * x * x * x / l4, 2);

        lin_at(r6, F::w0, m, -(al1 - al2));
        cub_int(r6, F::y1, F::z1, inversion, be1 * l2);
        cub_int(r6, F::y2, F::z2, inversion, be2 * l2);
        cub_int(r6, F::y0, F::z0, cauchy, -(be1 + be2));
        cub_at(r6, F::y0, F::z0, m, -st.g0_int * x / l2, 0);
        cub_at(r6, F::y0, F::z0, m, -st.g0_int * x * x / l2, 1);
        row += 6;
    }

    const double c6 = 6.0 / (h * h);
    for (auto [fy, fz] : {std::pair{F::y1, F::z1}, std::pair{F::y2, F::z2}, std::pair{F::y0, F::z0}}) {
        for (int j = 0; j < M; ++j, ++row) {
            put(row, fz, j - 1, 1.0);
            put(row, fz, j, 4.0);
            put(row, fz, j + 1, 1.0);
            put(row, fy, j - 1, -c6);
            put(row, fy, j, 2 * c6);
            put(row, fy, j + 1, -c6);
        }
    }

    const double g_net = integrate_symmetric(load.g_plus, l) - integrate_symmetric(load.g_minus, l);
    const double f_net = integrate_symmetric(load.f_plus, l) - integrate_symmetric(load.f_minus, l);
    put(row, F::y1, 2 * N, st.g0_plus);
    put(row, F::y1, 0, -st.g0_plus);
    put(row, F::y2, 2 * N, st.g0_minus);
    put(row, F::y2, 0, -st.g0_minus);
    sys.rhs(row++) = g_net;
    for (int q = 1; q < M; ++q) {
        for (auto [fz, gm] : {std::pair{F::z1, st.g1_plus}, std::pair{F::z2, st.g1_minus}}) {
            put(row, fz, q, gm * h / 2);
            put(row, fz, q - 1, gm * h / 2);
        }
    }
    sys.rhs(row++) = -f_net;
    for (int q = 1; q < M; ++q) {
        put(row, F::w1, q, h / 2);
        put(row, F::w1, q - 1, h / 2);
        put(row, F::w2, q, -h / 2);
        put(row, F::w2, q - 1, -h / 2);
    }
    ++row;
    for (int q = 1; q < M; ++q) {
        for (auto [fy, fz, sg] : {std::tuple{F::y1, F::z1, 1.0}, std::tuple{F::y2, F::z2, -1.0}}) {
            put(row, fy, q, sg * h / 2);
            put(row, fy, q - 1, sg * h / 2);
            put(row, fz, q, -sg * h * h * h / 24);
            put(row, fz, q - 1, -sg * h * h * h / 24);
        }
    }
    ++row;
    if (row != lay.dimension) throw DimensionMismatch("spline system row count mismatch");
    return sys;
}

inline SplineSolution solve_spline(const Problem& p, int N, const SolveOptions& opt = {}) {
    validate(p);
    const auto rep = solve_dense(assemble_spline_system(p, N), opt);
    const spline_detail::Layout lay(N);
    SplineSolution s;
    s.grid = SplineGrid(N, p.half_length);
    s.condition_estimate = rep.condition_estimate;
    s.solve_residual = rep.residual_norm;
    using F = spline_detail::Layout::Family;
    auto get = [&](int fam) {
        std::vector<double> v(2 * N + 1, 0.0);
        for (int j = 0; j <= 2 * N; ++j) {
            const int c = lay.at(fam, j);
            if (c >= 0) v[j] = rep.solution(c);
        }
        return v;
    };
    s.w1 = get(F::w1);
    s.w2 = get(F::w2);
    s.w0 = get(F::w0);
    s.y1 = get(F::y1);
    s.z1 = get(F::z1);
    s.y2 = get(F::y2);
    s.z2 = get(F::z2);
    s.y0 = get(F::y0);
    s.z0 = get(F::z0);
    return s;
}

/// Cubic spline through (y, z) evaluated at x (d-th derivative, d <= 2).
inline double spline_value(const SplineGrid& g, const std::vector<double>& y, const std::vector<double>& z, double x,
                           int d = 0) {
    const int m = g.piece(x);
    const double s = x - g.nodes[m - 1];
    using namespace spline_detail;
    if (d == 0) return eval_cubic(y[m - 1], y[m], z[m - 1], z[m], g.h, s);
    if (d == 1) return eval_cubic_d1(y[m - 1], y[m], z[m - 1], z[m], g.h, s);
    return eval_cubic_d2(z[m - 1], z[m], g.h, s);
}

inline double linear_value(const SplineGrid& g, const std::vector<double>& w, double x) {
    const int m = g.piece(x);
    const double s = (x - g.nodes[m - 1]) / g.h;
    return w[m - 1] * (1 - s) + w[m] * s;
}

/// int_{-l}^{x} of the cubic spline.
inline double spline_integral(const SplineGrid& g, const std::vector<double>& y, const std::vector<double>& z,
                              double x) {
    using namespace spline_detail;
    const int m = g.piece(x);
    double s = 0.0;
    for (int q = 1; q < m; ++q) s += integrate_cubic(y[q - 1], y[q], z[q - 1], z[q], g.h, g.h);
    return s + integrate_cubic(y[m - 1], y[m], z[m - 1], z[m], g.h, x - g.nodes[m - 1]);
}

struct SplineOpening {
    double u2_plus;
    double u2_minus;
};

inline SplineOpening spline_opening(const SplineSolution& s, double x) {
    return {spline_integral(s.grid, s.y1, s.z1, x), spline_integral(s.grid, s.y2, s.z2, x)};
}

struct Discrepancy {
    double max_rel = 0.0;
    double l2_rel = 0.0;
};

inline Discrepancy relative_discrepancy(const std::vector<double>& ref, const std::vector<double>& other) {
    double dmax = 0.0, rmax = 0.0, d2 = 0.0, r2 = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const double d = other[i] - ref[i];
        dmax = std::max(dmax, std::abs(d));
        rmax = std::max(rmax, std::abs(ref[i]));
        d2 += d * d;
        r2 += ref[i] * ref[i];
    }
    Discrepancy out;
    if (dmax == 0.0) return out;
    out.max_rel = rmax > 0.0 ? dmax / rmax : INFINITY;
    out.l2_rel = r2 > 0.0 ? std::sqrt(d2 / r2) : INFINITY;
    return out;
}

struct ComparisonReport {
    Discrepancy psi1, psi2, opening;
};

inline std::vector<double> crack_shape_vector(const TaylorSolution& t, const std::vector<double>& xs);

/// Discrepancies of the spline solution relative to the Taylor one. The
/// opening metric covers both face displacements (the plotted crack shape).
inline ComparisonReport compare(const TaylorSolution& t, const SplineSolution& s, const std::vector<double>& xs) {
    std::vector<double> p1t, p1s, p2t, p2s, ut, us;
    for (double x : xs) {
        p1t.push_back(t.psi1(x));
        p1s.push_back(spline_value(s.grid, s.y1, s.z1, x));
        p2t.push_back(t.psi2(x));
        p2s.push_back(spline_value(s.grid, s.y2, s.z2, x));
        const auto o = spline_opening(s, x);
        us.push_back(o.u2_plus);
        us.push_back(o.u2_minus);
    }
    ut = crack_shape_vector(t, xs);
    return {relative_discrepancy(p1t, p1s), relative_discrepancy(p2t, p2s), relative_discrepancy(ut, us)};
}

/// Face displacements u2+ and u2- interleaved, anchored at the left tip.
inline std::vector<double> crack_shape_vector(const TaylorSolution& t, const std::vector<double>& xs) {
    std::vector<double> v;
    const double l = t.half_length;
    for (double x : xs) {
        v.push_back(poly::integrate(t.b1, -l, x));
        v.push_back(poly::integrate(t.b2, -l, x));
    }
    return v;
}

inline Discrepancy compare_taylor(const TaylorSolution& ref, const TaylorSolution& other,
                                  const std::vector<double>& xs) {
    return relative_discrepancy(crack_shape_vector(ref, xs), crack_shape_vector(other, xs));
}

/// Equally spaced interior points x_i = -l + 2 l i / (n + 1), i = 1..n.
inline std::vector<double> interior_points(double l, int n = 11) {
    std::vector<double> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(-l + 2.0 * l * i / (n + 1));
    return xs;
}

}  // namespace ifcrack
