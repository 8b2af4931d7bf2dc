#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "ifcrack/cauchy.hpp"
#include "ifcrack/log_fit.hpp"
#include "ifcrack/model.hpp"
#include "ifcrack/taylor.hpp"

namespace ifcrack {

enum class Region { crack, interface };

/// Slopes phi = u1,1 and psi = u2,1. On the crack the face values
/// (phi1, psi1 upper; phi2, psi2 lower) are set; on the interface phi, psi.
struct FieldSample {
    double x = 0.0;
    Region region = Region::crack;
    double phi1 = 0.0, phi2 = 0.0, psi1 = 0.0, psi2 = 0.0;
    double phi = 0.0, psi = 0.0;
    double u2_plus = 0.0, u2_minus = 0.0;
    double s12_plus = 0.0, s12_minus = 0.0, s22_plus = 0.0, s22_minus = 0.0;
};

inline void check_off_tip(double x, double l) {
    if (std::abs(x) == l) throw DomainError("evaluation at a crack tip");
}

inline FieldSample evaluate_slopes(const TaylorSolution& s, double x) {
    const double l = s.half_length;
    check_off_tip(x, l);
    FieldSample f;
    f.x = x;
    if (std::abs(x) < l) {
        f.phi1 = s.phi1(x);
        f.phi2 = s.phi2(x);
        f.psi1 = s.psi1(x);
        f.psi2 = s.psi2(x);
    } else {
        f.region = Region::interface;
        f.phi = s.phi(x);
        f.psi = s.psi(x);
    }
    return f;
}

struct Opening {
    double u2_plus = 0.0;
    double u2_minus = 0.0;
};

/// Perturbation displacements of the faces, anchored at the left tip.
inline Opening crack_opening(const TaylorSolution& s, double x) {
    const double l = s.half_length;
    if (std::abs(x) > l) throw DomainError("crack opening is defined on [-l, l]");
    return {poly::integrate(s.b1, -l, x), poly::integrate(s.b2, -l, x)};
}

struct Stresses {
    double s12_plus = 0.0, s12_minus = 0.0, s22_plus = 0.0, s22_minus = 0.0;
};

/// Total stresses on y = 0. On the crack they come from the face boundary
/// conditions; on the interface from the half-plane DtN maps plus the far field
/// (plus: upper half-plane side, minus: lower).
inline Stresses boundary_stresses(const Problem& p, const TaylorSolution& s, double x) {
    const double l = p.half_length;
    check_off_tip(x, l);
    const auto& st = p.st;
    Stresses out;
    if (std::abs(x) < l) {
        out.s12_plus = st.g1_plus * s.psi1(x, 2) + poly::eval(p.load.f_plus, x);
        out.s12_minus = -st.g1_minus * s.psi2(x, 2) + poly::eval(p.load.f_minus, x);
        out.s22_plus = -st.g0_plus * s.psi1(x, 1) + poly::eval(p.load.g_plus, x);
        out.s22_minus = st.g0_minus * s.psi2(x, 1) + poly::eval(p.load.g_minus, x);
        return out;
    }
    const auto c1 = derive_material_constants(p.mat1);
    const auto c2 = derive_material_constants(p.mat2);
    using K = CauchyKind;
    const double Ia3 = cauchy_series_sum(K::outer_outer, s.a3, 1, x, l);
    const double Ib3 = cauchy_series_sum(K::outer_outer, s.b3, 1, x, l);
    const double Ia1 = cauchy_series_sum(K::inner_outer, s.a1, 0, x, l);
    const double Ia2 = cauchy_series_sum(K::inner_outer, s.a2, 0, x, l);
    const double Ib1 = cauchy_series_sum(K::inner_outer, s.b1, 0, x, l);
    const double Ib2 = cauchy_series_sum(K::inner_outer, s.b2, 0, x, l);
    out.s12_plus = c1.alpha * s.psi(x) + c1.beta * (Ia1 + Ia3) + p.far.tau;
    out.s22_plus = -c1.alpha * s.phi(x) + c1.beta * (Ib1 + Ib3) + p.far.sigma;
    out.s12_minus = c2.alpha * s.psi(x) - c2.beta * (Ia2 + Ia3) + p.far.tau;
    out.s22_minus = -c2.alpha * s.phi(x) - c2.beta * (Ib2 + Ib3) + p.far.sigma;
    return out;
}

inline FieldSample sample_field(const Problem& p, const TaylorSolution& s, double x) {
    FieldSample f = evaluate_slopes(s, x);
    if (f.region == Region::crack) {
        const auto o = crack_opening(s, x);
        f.u2_plus = o.u2_plus;
        f.u2_minus = o.u2_minus;
    }
    const auto st = boundary_stresses(p, s, x);
    f.s12_plus = st.s12_plus;
    f.s12_minus = st.s12_minus;
    f.s22_plus = st.s22_plus;
    f.s22_minus = st.s22_minus;
    return f;
}

struct FitWindow {
    double t_min = 1e-3;
    double t_max = 1e-1;
};

/// Coefficients of c0 + c1 ln t + c2 ln^2 t for the four face stresses, with t
/// the distance to the tip in units of l. k1, k2 are the ln^2 coefficients of
/// s12+ and s12-.
struct SingularityFit {
    double tip = 1.0;
    FitWindow window;
    double k1 = 0.0, k2 = 0.0;
    LogFit s12_plus, s12_minus, s22_plus, s22_minus;
    double fit_residual = 0.0;
    double k1_half = 0.0, k2_half = 0.0;  // refit on (t_min, t_max/2)
    bool s22_bounded = true;

    double k_scale() const { return std::max(std::abs(k1), std::abs(k2)); }
    double s22_log2_ratio() const {
        const double c = std::max(std::abs(s22_plus.c2), std::abs(s22_minus.c2));
        if (c == 0.0) return 0.0;
        return k_scale() > 0.0 ? c / k_scale() : INFINITY;
    }
    double window_change() const {
        const double d = std::max(std::abs(k1_half - k1), std::abs(k2_half - k2));
        if (d == 0.0) return 0.0;
        return k_scale() > 0.0 ? d / k_scale() : INFINITY;
    }
};

struct FitOptions {
    FitWindow window;
    int samples = 40;
    double s22_ratio_limit = 0.05;
};

namespace post_detail {

struct WindowFits {
    LogFit s12p, s12m, s22p, s22m;
};

inline WindowFits fit_window(const Problem& p, const TaylorSolution& s, double tip, FitWindow w, int n) {
    const double l = p.half_length;
    std::vector<double> t, a, b, c, d;
    const double r = std::log(w.t_max / w.t_min);
    for (int i = 0; i < n; ++i) {
        const double ti = w.t_min * std::exp(r * i / (n - 1));
        const double x = tip > 0 ? l - ti * l : -l + ti * l;
        const auto st = boundary_stresses(p, s, x);
        t.push_back(ti);
        a.push_back(st.s12_plus);
        b.push_back(st.s12_minus);
        c.push_back(st.s22_plus);
        d.push_back(st.s22_minus);
    }
    return {fit_log_basis(t, a), fit_log_basis(t, b), fit_log_basis(t, c), fit_log_basis(t, d)};
}

}  // namespace post_detail

inline SingularityFit fit_singularity(const Problem& p, const TaylorSolution& s, double tip,
                                      const FitOptions& opt = {}) {
    if (p.st.g1_plus == 0.0 || p.st.g1_minus == 0.0)
        throw PreconditionViolation("singularity fit needs nonzero g1_plus and g1_minus");
    const auto& w = opt.window;
    if (!(0.0 < w.t_min && w.t_min < w.t_max && w.t_max < 1.0))
        throw PreconditionViolation("fit window must satisfy 0 < t_min < t_max < 1");
    if (opt.samples < 20) throw PreconditionViolation("singularity fit needs at least 20 samples");
    if (std::abs(tip) != 1.0) throw PreconditionViolation("tip must be +1 or -1 (right or left)");

    SingularityFit f;
    f.tip = tip * p.half_length;
    f.window = w;
    const auto full = post_detail::fit_window(p, s, tip, w, opt.samples);
    const auto half = post_detail::fit_window(p, s, tip, {w.t_min, w.t_max / 2}, opt.samples);
    f.s12_plus = full.s12p;
    f.s12_minus = full.s12m;
    f.s22_plus = full.s22p;
    f.s22_minus = full.s22m;
    f.k1 = full.s12p.c2;
    f.k2 = full.s12m.c2;
    f.k1_half = half.s12p.c2;
    f.k2_half = half.s12m.c2;
    f.fit_residual = std::max({full.s12p.rms, full.s12m.rms, full.s22p.rms, full.s22m.rms});
    f.s22_bounded = f.s22_log2_ratio() < opt.s22_ratio_limit;
    return f;
}

struct EnglandReference {
    double alpha_e = 1.0;
    double gamma_e = 0.0;
    double amp_plus = 0.0;
    double amp_minus = 0.0;
    double l = 1.0;

    double shape(double x) const {
        if (std::abs(x) >= l) return 0.0;
        return std::sqrt(l * l - x * x) * std::cos(gamma_e * std::log(std::abs((l + x) / (l - x))));
    }
    double u2_plus(double x) const { return amp_plus * shape(x); }
    double u2_minus(double x) const { return -amp_minus * shape(x); }
};

/// Classical pressurised interface crack, with the bimaterial ratio as printed
/// (kappa1 in numerator and denominator).
inline EnglandReference england_reference(const Material& m1, const Material& m2, double T, double l) {
    const auto c1 = derive_material_constants(m1);
    const auto c2 = derive_material_constants(m2);
    EnglandReference e;
    e.l = l;
    e.alpha_e = (m1.mu + m2.mu * c1.kappa) / (m2.mu + m1.mu * c1.kappa);
    e.gamma_e = std::log(e.alpha_e) / (2.0 * std::numbers::pi);
    const double sa = std::sqrt(e.alpha_e);
    e.amp_plus = T * (1.0 + c1.kappa) * sa / (2.0 * m1.mu * (1.0 + e.alpha_e));
    e.amp_minus = T * (1.0 + c2.kappa) * sa / (2.0 * m2.mu * (1.0 + e.alpha_e));
    return e;
}

inline Opening england_reference(const Material& m1, const Material& m2, double T, double l, double x) {
    if (!(std::abs(x) < l)) throw DomainError("England displacements need |x| < l");
    const auto e = england_reference(m1, m2, T, l);
    return {e.u2_plus(x), e.u2_minus(x)};
}

struct StressMax {
    double value = 0.0;
    double x = 0.0;
};

struct StressMaxima {
    StressMax s22_plus, s22_minus, s12_plus, s12_minus;
};

/// Uniform interior grid merged with geometric refinement toward both tips
/// down to t = 1e-6 l.
inline std::vector<double> tip_refined_grid(double l, int uniform = 401, int per_tip = 60) {
    std::vector<double> xs;
    for (int i = 1; i < uniform - 1; ++i) xs.push_back(-l + 2.0 * l * i / (uniform - 1));
    const double lo = std::log(1e-6), hi = std::log(0.02);
    for (int i = 0; i < per_tip; ++i) {
        const double t = std::exp(lo + (hi - lo) * i / (per_tip - 1)) * l;
        xs.push_back(l - t);
        xs.push_back(-l + t);
    }
    std::sort(xs.begin(), xs.end());
    return xs;
}

inline StressMaxima max_stress_scan(const Problem& p, const TaylorSolution& s) {
    StressMaxima m;
    auto upd = [](StressMax& cur, double v, double x) {
        if (std::abs(v) > cur.value) cur = {std::abs(v), x};
    };
    for (double x : tip_refined_grid(p.half_length)) {
        const auto st = boundary_stresses(p, s, x);
        upd(m.s22_plus, st.s22_plus, x);
        upd(m.s22_minus, st.s22_minus, x);
        upd(m.s12_plus, st.s12_plus, x);
        upd(m.s12_minus, st.s12_minus, x);
    }
    return m;
}

}  // namespace ifcrack
