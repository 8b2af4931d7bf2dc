#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "ifcrack/cauchy.hpp"
#include "ifcrack/dense.hpp"
#include "ifcrack/model.hpp"
#include "ifcrack/poly.hpp"

namespace ifcrack {

/// Unknown ordering (a1, a2, a3, b1, b2, b3):
///   a1, a2  powers 0..N      (phi1, phi2 on the crack faces)
///   a3      powers -1..-(N+1) (phi on the interface)
///   b1, b2  powers 0..N+2    (psi1, psi2 on the crack faces)
///   b3      powers -1..-(N+1) (psi on the interface)
struct TaylorLayout {
    int N = 0;

    explicit TaylorLayout(int order) : N(order) {}

    int a1() const { return 0; }
    int a2() const { return N + 1; }
    int a3() const { return 2 * (N + 1); }
    int b1() const { return 3 * (N + 1); }
    int b2() const { return b1() + N + 3; }
    int b3() const { return b2() + N + 3; }
    int dimension() const { return 6 * N + 10; }
};

struct TaylorSolution {
    int order = 0;
    double half_length = 1.0;
    std::vector<double> a1, a2, a3, b1, b2, b3;
    double condition_estimate = 0.0;
    double solve_residual = 0.0;

    double phi1(double x, int d = 0) const { return poly::eval(a1, x, d); }
    double phi2(double x, int d = 0) const { return poly::eval(a2, x, d); }
    double psi1(double x, int d = 0) const { return poly::eval(b1, x, d); }
    double psi2(double x, int d = 0) const { return poly::eval(b2, x, d); }
    double phi(double x, int d = 0) const { return poly::eval_inverse(a3, x, d); }
    double psi(double x, int d = 0) const { return poly::eval_inverse(b3, x, d); }
};

inline LinearSystem assemble(const Problem& p, int N) {
    if (N < 2) throw PreconditionViolation("Taylor order must be at least 2");
    const CrackLoad load = p.load.padded(static_cast<std::size_t>(N) + 1);
    const auto c1 = derive_material_constants(p.mat1);
    const auto c2 = derive_material_constants(p.mat2);
    const double a1 = c1.alpha, be1 = c1.beta, a2 = c2.alpha, be2 = c2.beta;
    const auto& st = p.st;
    const double l = p.half_length;
    using namespace series;

    const TaylorLayout L(N);
    LinearSystem sys(L.dimension());
    auto& A = sys.matrix;
    auto& r = sys.rhs;
    int row = 0;
    const int A1 = L.a1(), A2 = L.a2(), A3 = L.a3(), B1 = L.b1(), B2 = L.b2(), B3 = L.b3();

    for (int k = 0; k <= N; ++k, ++row) {
        A(row, B1 + k) += a1;
        for (int j = 0; j <= N; ++j) A(row, A1 + j) += be1 * c_in(j, k, l);
        for (int j = 1; j <= N + 1; ++j) A(row, A3 + j - 1) += be1 * c_out(j, k, l);
        A(row, B1 + k + 2) -= st.g1_plus * (k + 2) * (k + 1);
        r(row) = load.f_plus[k] - (k == 0 ? p.far.tau : 0.0);
    }
    for (int k = 0; k <= N; ++k, ++row) {
        A(row, A1 + k) -= a1;
        for (int j = 0; j <= N + 2; ++j) A(row, B1 + j) += be1 * c_in(j, k, l);
        for (int j = 1; j <= N + 1; ++j) A(row, B3 + j - 1) += be1 * c_out(j, k, l);
        A(row, B1 + k + 1) += st.g0_plus * (k + 1);
        r(row) = load.g_plus[k] - (k == 0 ? p.far.sigma : 0.0);
    }
    for (int k = 0; k <= N; ++k, ++row) {
        A(row, B2 + k) += a2;
        for (int j = 0; j <= N; ++j) A(row, A2 + j) -= be2 * c_in(j, k, l);
        for (int j = 1; j <= N + 1; ++j) A(row, A3 + j - 1) -= be2 * c_out(j, k, l);
        A(row, B2 + k + 2) += st.g1_minus * (k + 2) * (k + 1);
        r(row) = load.f_minus[k] - (k == 0 ? p.far.tau : 0.0);
    }
    for (int k = 0; k <= N; ++k, ++row) {
        A(row, A2 + k) -= a2;
        for (int j = 0; j <= N + 2; ++j) A(row, B2 + j) -= be2 * c_in(j, k, l);
        for (int j = 1; j <= N + 1; ++j) A(row, B3 + j - 1) -= be2 * c_out(j, k, l);
        A(row, B2 + k + 1) -= st.g0_minus * (k + 1);
        r(row) = load.g_minus[k] - (k == 0 ? p.far.sigma : 0.0);
    }
    // interface blocks, coefficient of x^-k
    for (int k = 1; k <= N + 1; ++k, ++row) {
        A(row, B3 + k - 1) += a1 - a2;
        for (int j = 1; j <= N + 1; ++j) A(row, A3 + j - 1) += (be1 + be2) * d_out(j, k, l);
        for (int j = 0; j <= N; ++j) {
            A(row, A1 + j) += be1 * d_in(j, k, l);
            A(row, A2 + j) += be2 * d_in(j, k, l);
        }
        if (k >= 3) A(row, B3 + k - 3) -= st.g1_int * (k - 2) * (k - 1);
    }
    for (int k = 1; k <= N + 1; ++k, ++row) {
        A(row, A3 + k - 1) -= a1 - a2;
        for (int j = 1; j <= N + 1; ++j) A(row, B3 + j - 1) += (be1 + be2) * d_out(j, k, l);
        for (int j = 0; j <= N + 2; ++j) {
            A(row, B1 + j) += be1 * d_in(j, k, l);
            A(row, B2 + j) += be2 * d_in(j, k, l);
        }
        if (k >= 2) A(row, B3 + k - 2) -= st.g0_int * (k - 1);
    }

    const double g_net = integrate_symmetric(load.g_plus, l) - integrate_symmetric(load.g_minus, l);
    const double f_net = integrate_symmetric(load.f_plus, l) - integrate_symmetric(load.f_minus, l);
    // zero net normal traction: jump of psi across the crack
    for (int k = 0; k <= N + 2; ++k) {
        const double e = std::pow(l, k) * series::odd_gap(k);
        A(row, B1 + k) += st.g0_plus * e;
        A(row, B2 + k) += st.g0_minus * e;
    }
    r(row++) = g_net;
    // zero net shear traction: jump of psi'
    for (int k = 1; k <= N + 2; ++k) {
        const double e = k * std::pow(l, k - 1) * series::odd_gap(k - 1);
        A(row, B1 + k) += st.g1_plus * e;
        A(row, B2 + k) += st.g1_minus * e;
    }
    r(row++) = -f_net;
    for (int k = 0; k <= N; ++k) {
        const double e = std::pow(l, k + 1) * series::odd_gap(k + 1) / (k + 1);
        A(row, A1 + k) += e;
        A(row, A2 + k) -= e;
    }
    ++row;
    for (int k = 0; k <= N + 2; ++k) {
        const double e = std::pow(l, k + 1) * series::odd_gap(k + 1) / (k + 1);
        A(row, B1 + k) += e;
        A(row, B2 + k) -= e;
    }
    ++row;
    return sys;
}

inline TaylorSolution unpack_taylor(const Vector& x, int N, double l) {
    const TaylorLayout L(N);
    if (x.size() != L.dimension()) throw DimensionMismatch("solution vector has wrong length");
    auto slice = [&](int off, int n) { return std::vector<double>(x.data() + off, x.data() + off + n); };
    TaylorSolution s;
    s.order = N;
    s.half_length = l;
    s.a1 = slice(L.a1(), N + 1);
    s.a2 = slice(L.a2(), N + 1);
    s.a3 = slice(L.a3(), N + 1);
    s.b1 = slice(L.b1(), N + 3);
    s.b2 = slice(L.b2(), N + 3);
    s.b3 = slice(L.b3(), N + 1);
    return s;
}

inline TaylorSolution solve(const Problem& p, int N, const SolveOptions& opt = {}) {
    validate(p);
    const auto rep = solve_dense(assemble(p, N), opt);
    auto s = unpack_taylor(rep.solution, N, p.half_length);
    s.condition_estimate = rep.condition_estimate;
    s.solve_residual = rep.residual_norm;
    return s;
}

struct ResidualReport {
    std::array<double, 6> equation{};    // max |residual| of each equation over the samples
    std::array<double, 4> constraint{};  // net normal, net shear, phi single-valuedness, psi single-valuedness
    std::array<double, 4> constraint_scale{};
    double net_shear_bc = 0.0;   // from the face boundary conditions
    double net_shear_dtn = 0.0;  // same integral through the half-plane DtN maps

    double max_equation() const { return *std::max_element(equation.begin(), equation.end()); }
    double relative_constraint(int i) const {
        return constraint[i] == 0.0 ? 0.0 : constraint[i] / std::max(constraint_scale[i], 1e-300);
    }
};

/// Fixed crack and interface sample points (in units of l) away from the tips.
inline std::vector<double> default_crack_samples(double l) {
    std::vector<double> xs;
    for (double t : {0.013, 0.157, 0.331, 0.509, 0.683, 0.827, 0.919, 0.971}) {
        xs.push_back(t * l);
        xs.push_back(-t * l);
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

inline std::vector<double> default_interface_samples(double l) {
    std::vector<double> xs;
    for (double t : {1.029, 1.083, 1.21, 1.5, 2.3, 4.1, 7.7}) {
        xs.push_back(t * l);
        xs.push_back(-t * l);
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

namespace detail {

/// int_{-l}^{l} PV int_{|r|<l} r^j/(r-x) dr dx
inline double inner_kernel_mass(int j, double l) {
    if (j % 2 == 0) return 0.0;
    double h = 0.0;
    for (int m = 1; m <= j; m += 2) h += 1.0 / m;
    return 4.0 / (j + 1) * h * std::pow(l, j + 1);
}

/// int_{-l}^{l} int_{|r|>l} r^-j/(r-x) dr dx, j >= 1
inline double outer_kernel_mass(int j, double l) {
    if (j % 2 == 0) return 0.0;
    if (j == 1) return std::numbers::pi * std::numbers::pi / 2.0;
    double h = 0.0;
    for (int m = 1; m <= j - 2; m += 2) h += 1.0 / m;
    return 4.0 / (j - 1) * h * std::pow(l, 1 - j);
}

}  // namespace detail

inline ResidualReport residual(const Problem& p, const TaylorSolution& s, const std::vector<double>& crack_xs,
                               const std::vector<double>& interface_xs) {
    const auto c1 = derive_material_constants(p.mat1);
    const auto c2 = derive_material_constants(p.mat2);
    const double l = p.half_length;
    const auto& st = p.st;
    const auto load = p.load.padded(std::max<std::size_t>(p.load.degree_bound(), 1));
    using K = CauchyKind;
    ResidualReport rep;

    for (double x : crack_xs) {
        if (!(std::abs(x) < l)) throw DomainError("crack sample outside the crack");
        const double fp = poly::eval(load.f_plus, x), fm = poly::eval(load.f_minus, x);
        const double gp = poly::eval(load.g_plus, x), gm = poly::eval(load.g_minus, x);
        const double Ia1 = cauchy_series_sum(K::inner_inner, s.a1, 0, x, l);
        const double Ia2 = cauchy_series_sum(K::inner_inner, s.a2, 0, x, l);
        const double Ib1 = cauchy_series_sum(K::inner_inner, s.b1, 0, x, l);
        const double Ib2 = cauchy_series_sum(K::inner_inner, s.b2, 0, x, l);
        const double Ia3 = cauchy_series_sum(K::outer_inner, s.a3, 1, x, l);
        const double Ib3 = cauchy_series_sum(K::outer_inner, s.b3, 1, x, l);
        const std::array<double, 4> e{
            c1.alpha * s.psi1(x) + c1.beta * (Ia1 + Ia3) - st.g1_plus * s.psi1(x, 2) - (fp - p.far.tau),
            -c1.alpha * s.phi1(x) + c1.beta * (Ib1 + Ib3) + st.g0_plus * s.psi1(x, 1) - (gp - p.far.sigma),
            c2.alpha * s.psi2(x) - c2.beta * (Ia2 + Ia3) + st.g1_minus * s.psi2(x, 2) - (fm - p.far.tau),
            -c2.alpha * s.phi2(x) - c2.beta * (Ib2 + Ib3) - st.g0_minus * s.psi2(x, 1) - (gm - p.far.sigma)};
        for (int i = 0; i < 4; ++i) rep.equation[i] = std::max(rep.equation[i], std::abs(e[i]));
    }
    for (double x : interface_xs) {
        if (!(std::abs(x) > l)) throw DomainError("interface sample inside the crack");
        const double da = c1.alpha - c2.alpha;
        const double e5 = da * s.psi(x) + (c1.beta + c2.beta) * cauchy_series_sum(K::outer_outer, s.a3, 1, x, l) +
                          c1.beta * cauchy_series_sum(K::inner_outer, s.a1, 0, x, l) +
                          c2.beta * cauchy_series_sum(K::inner_outer, s.a2, 0, x, l) - st.g1_int * s.psi(x, 2);
        const double e6 = -da * s.phi(x) + (c1.beta + c2.beta) * cauchy_series_sum(K::outer_outer, s.b3, 1, x, l) +
                          c1.beta * cauchy_series_sum(K::inner_outer, s.b1, 0, x, l) +
                          c2.beta * cauchy_series_sum(K::inner_outer, s.b2, 0, x, l) + st.g0_int * s.psi(x, 1);
        rep.equation[4] = std::max(rep.equation[4], std::abs(e5));
        rep.equation[5] = std::max(rep.equation[5], std::abs(e6));
    }

    const double jp1 = s.psi1(l) - s.psi1(-l), jp2 = s.psi2(l) - s.psi2(-l);
    const double jd1 = s.psi1(l, 1) - s.psi1(-l, 1), jd2 = s.psi2(l, 1) - s.psi2(-l, 1);
    const double gpi = integrate_symmetric(load.g_plus, l), gmi = integrate_symmetric(load.g_minus, l);
    const double fpi = integrate_symmetric(load.f_plus, l), fmi = integrate_symmetric(load.f_minus, l);
    const double ph1 = poly::integrate(s.a1, -l, l), ph2 = poly::integrate(s.a2, -l, l);
    const double ps1 = poly::integrate(s.b1, -l, l), ps2 = poly::integrate(s.b2, -l, l);

    rep.constraint[0] = std::abs(st.g0_plus * jp1 + st.g0_minus * jp2 - (gpi - gmi));
    rep.constraint_scale[0] = std::abs(st.g0_plus * jp1) + std::abs(st.g0_minus * jp2) + std::abs(gpi) + std::abs(gmi);
    rep.constraint[1] = std::abs(st.g1_plus * jd1 + st.g1_minus * jd2 + (fpi - fmi));
    rep.constraint_scale[1] = std::abs(st.g1_plus * jd1) + std::abs(st.g1_minus * jd2) + std::abs(fpi) + std::abs(fmi);
    rep.constraint[2] = std::abs(ph1 - ph2);
    rep.constraint_scale[2] = std::abs(ph1) + std::abs(ph2);
    rep.constraint[3] = std::abs(ps1 - ps2);
    rep.constraint_scale[3] = std::abs(ps1) + std::abs(ps2);

    rep.net_shear_bc = st.g1_plus * jd1 + st.g1_minus * jd2 + fpi - fmi;
    double dtn = c1.alpha * ps1 - c2.alpha * ps2;
    for (std::size_t j = 0; j < s.a1.size(); ++j)
        dtn += (c1.beta * s.a1[j] + c2.beta * s.a2[j]) * detail::inner_kernel_mass(static_cast<int>(j), l);
    for (std::size_t j = 0; j < s.a3.size(); ++j)
        dtn += (c1.beta + c2.beta) * s.a3[j] * detail::outer_kernel_mass(static_cast<int>(j) + 1, l);
    rep.net_shear_dtn = dtn;
    return rep;
}

inline ResidualReport residual(const Problem& p, const TaylorSolution& s) {
    return residual(p, s, default_crack_samples(p.half_length), default_interface_samples(p.half_length));
}

}  // namespace ifcrack
