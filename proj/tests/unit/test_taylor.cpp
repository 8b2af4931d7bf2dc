#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "ifcrack/taylor.hpp"
#include "oracles.hpp"

using namespace ifcrack;

namespace {

Problem loaded() {
    Problem p = fixture::shear();
    p.far.sigma = 0.4;
    p.load.f_plus = {0.3, -0.2, 0.1};
    p.load.f_minus = {0.3, 0.5, 0.1};
    p.load.g_plus = {-1.0, 0.0, 0.6};
    p.load.g_minus = {-1.0, 0.7, 0.6};
    p.half_length = 1.2;
    return p;
}

}  // namespace

TEST(TaylorAssembly, Dimension) {
    EXPECT_EQ(assemble(fixture::tension(), 30).dimension, 190);
    EXPECT_EQ(TaylorLayout(30).dimension(), 190);
    EXPECT_THROW(assemble(fixture::tension(), 1), PreconditionViolation);
}

TEST(TaylorAssembly, FirstRowEntries) {
    const Problem p = fixture::tension();
    const auto sys = assemble(p, 10);
    const TaylorLayout L(10);
    const auto c1 = derive_material_constants(p.mat1);
    // c_in(j, 0) vanishes for even j
    EXPECT_NEAR(sys.matrix(0, L.b1()), c1.alpha, 1e-14);
    EXPECT_NEAR(sys.matrix(0, L.b1() + 2), -2.0 * p.st.g1_plus, 1e-14);
    EXPECT_EQ(sys.rhs(0), -p.far.tau);
    EXPECT_EQ(sys.rhs(L.dimension() - 1), 0.0);
}

TEST(TaylorAssembly, RowsAreTaylorCoefficientsOfTheEquations) {
    const Problem p = loaded();
    const int N = 12;
    const double l = p.half_length;
    const auto sys = assemble(p, N);
    const TaylorLayout L(N);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector v(L.dimension());
    for (int i = 0; i < L.dimension(); ++i) v(i) = u(rng);
    // coefficient size decays with the power so the series truncation is negligible
    auto damp = [&](int off, int n) {
        for (int i = 0; i < n; ++i) v(off + i) *= std::pow(0.6, i);
    };
    damp(L.a1(), N + 1), damp(L.a2(), N + 1), damp(L.a3(), N + 1);
    damp(L.b1(), N + 3), damp(L.b2(), N + 3), damp(L.b3(), N + 1);
    const Vector e = sys.matrix * v - sys.rhs;
    const auto s = unpack_taylor(v, N, l);

    for (double x : {0.0, 0.1, -0.15}) {
        const auto ref = oracle::equations(p, s, x);
        for (int b = 0; b < 4; ++b) {
            double sum = 0.0;
            for (int k = 0; k <= N; ++k) sum += e(b * (N + 1) + k) * std::pow(x, k);
            EXPECT_NEAR(sum, ref[b], 1e-8 * std::max(1.0, std::abs(ref[b]))) << "block " << b + 1 << " x=" << x;
        }
    }
    for (double X : {6.0, -8.0}) {
        const auto ref = oracle::equations(p, s, X);
        for (int b = 4; b < 6; ++b) {
            double sum = 0.0;
            for (int k = 1; k <= N + 1; ++k) sum += e(4 * (N + 1) + (b - 4) * (N + 1) + k - 1) * std::pow(X, -k);
            EXPECT_NEAR(sum, ref[b], 1e-8 * std::max(1.0, std::abs(ref[b]))) << "block " << b + 1 << " X=" << X;
        }
    }

    // constraint rows
    const int c = 6 * (N + 1);
    const double gp = integrate_symmetric(p.load.g_plus, l), gm = integrate_symmetric(p.load.g_minus, l);
    const double fp = integrate_symmetric(p.load.f_plus, l), fm = integrate_symmetric(p.load.f_minus, l);
    const double n0 = p.st.g0_plus * (s.psi1(l) - s.psi1(-l)) + p.st.g0_minus * (s.psi2(l) - s.psi2(-l)) - (gp - gm);
    const double n1 =
        p.st.g1_plus * (s.psi1(l, 1) - s.psi1(-l, 1)) + p.st.g1_minus * (s.psi2(l, 1) - s.psi2(-l, 1)) + (fp - fm);
    EXPECT_NEAR(e(c), n0, 1e-12);
    EXPECT_NEAR(e(c + 1), n1, 1e-12);
    EXPECT_NEAR(e(c + 2), poly::integrate(s.a1, -l, l) - poly::integrate(s.a2, -l, l), 1e-12);
    EXPECT_NEAR(e(c + 3), poly::integrate(s.b1, -l, l) - poly::integrate(s.b2, -l, l), 1e-12);
}

TEST(TaylorSolve, ZeroLoadGivesZeroSolution) {
    Problem p = fixture::tension();
    p.far.sigma = 0.0;
    const auto sys = assemble(p, 30);
    EXPECT_EQ(sys.rhs.cwiseAbs().maxCoeff(), 0.0);
    const auto s = solve(p, 30);
    for (double v : s.b1) EXPECT_EQ(v, 0.0);
    for (double v : s.a3) EXPECT_EQ(v, 0.0);
    const auto r = residual(p, s);
    EXPECT_EQ(r.max_equation(), 0.0);
}

TEST(TaylorSolve, ConstraintsHold) {
    for (const Problem& p : {fixture::tension(), fixture::shear(), loaded()}) {
        const auto s = solve(p, 30);
        const auto r = residual(p, s);
        for (int i = 0; i < 4; ++i) EXPECT_LT(r.constraint[i], 1e-10 * std::max(1.0, r.constraint_scale[i])) << i;
    }
}

TEST(TaylorSolve, Linearity) {
    const Problem p = loaded();
    const auto s1 = solve(p, 20);
    Problem q = p;
    q.load = p.load.scaled(-2.5);
    q.far.sigma *= -2.5;
    q.far.tau *= -2.5;
    const auto s2 = solve(q, 20);
    for (std::size_t i = 0; i < s1.b1.size(); ++i) EXPECT_NEAR(s2.b1[i], -2.5 * s1.b1[i], 1e-12 * std::max(1.0, std::abs(s2.b1[i])));
    for (std::size_t i = 0; i < s1.a3.size(); ++i) EXPECT_NEAR(s2.a3[i], -2.5 * s1.a3[i], 1e-12 * std::max(1.0, std::abs(s2.a3[i])));
}

TEST(TaylorSolve, SymmetricTensionParity) {
    const auto s = solve(fixture::tension(), 30);
    auto peak = [](const std::vector<double>& c) {
        double m = 0.0;
        for (double v : c) m = std::max(m, std::abs(v));
        return m;
    };
    const double sb = peak(s.b1), sa = std::max(peak(s.a1), 1e-300), s3 = std::max(peak(s.a3), peak(s.b3));
    ASSERT_GT(sb, 0.0);
    for (std::size_t k = 0; k < s.b1.size(); k += 2) {
        EXPECT_LT(std::abs(s.b1[k]), 1e-8 * sb) << k;
        EXPECT_LT(std::abs(s.b2[k]), 1e-8 * sb) << k;
    }
    for (std::size_t k = 1; k < s.a1.size(); k += 2) {
        EXPECT_LT(std::abs(s.a1[k]), 1e-8 * sa) << k;
        EXPECT_LT(std::abs(s.a2[k]), 1e-8 * sa) << k;
    }
    // a3[i], b3[i] multiply x^-(i+1): phi odd in x, psi even
    for (std::size_t i = 0; i < s.a3.size(); ++i) {
        if ((i + 1) % 2 == 1) EXPECT_LT(std::abs(s.a3[i]), 1e-8 * s3) << i;
        else EXPECT_LT(std::abs(s.b3[i]), 1e-8 * s3) << i;
    }
}

TEST(TaylorResidual, DecreasesWithOrder) {
    const Problem p = fixture::tension();
    const double r20 = residual(p, solve(p, 20)).max_equation();
    const double r40 = residual(p, solve(p, 40)).max_equation();
    EXPECT_LT(r40, r20);
}

TEST(TaylorResidual, DetectsPerturbedCoefficients) {
    const Problem p = fixture::tension();
    auto s = solve(p, 30);
    // mid-crack samples, where the solved residual is small
    const std::vector<double> xs{-0.5, -0.25, 0.0, 0.25, 0.5};
    const auto base = residual(p, s, xs, {2.0});
    std::size_t big = 0;
    for (std::size_t k = 0; k < s.b1.size(); ++k)
        if (std::abs(s.b1[k]) > std::abs(s.b1[big])) big = k;
    s.b1[big] *= 1.1;
    const auto bumped = residual(p, s, xs, {2.0});
    EXPECT_GT(bumped.equation[0], base.equation[0]);
    EXPECT_GT(bumped.equation[0], 1e3 * base.equation[0]);
}

TEST(TaylorResidual, MatchesQuadratureOracle) {
    const Problem p = loaded();
    const auto s = solve(p, 16);
    const auto r = residual(p, s, {0.37}, {2.9});
    const auto in = oracle::equations(p, s, 0.37);
    const auto out = oracle::equations(p, s, 2.9);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(r.equation[i], std::abs(in[i]), 1e-8);
    for (int i = 4; i < 6; ++i) EXPECT_NEAR(r.equation[i], std::abs(out[i]), 1e-8);
}

TEST(TaylorErrors, LoadDegreeAboveOrder) {
    Problem p = fixture::tension();
    p.load.f_plus = std::vector<double>(8, 0.0);
    p.load.f_plus[7] = 1.0;
    p.load.f_minus = p.load.f_plus;
    EXPECT_THROW(assemble(p, 5), DimensionMismatch);
    EXPECT_NO_THROW(assemble(p, 7));
}

TEST(TaylorErrors, DomainOfResidualSamples) {
    const Problem p = fixture::tension();
    const auto s = solve(p, 10);
    EXPECT_THROW(residual(p, s, {1.0}, {}), DomainError);
    EXPECT_THROW(residual(p, s, {}, {0.5}), DomainError);
}
