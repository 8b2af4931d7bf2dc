#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ifcrack/error.hpp"

namespace ifcrack {

struct Material {
    double mu = 0.0;
    double nu = 0.0;
};

struct MaterialConstants {
    double lambda = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double kappa = 0.0;  // plane strain: 3 - 4 nu
};

/// Crack faces carry g0_plus/g1_plus (upper) and g0_minus/g1_minus (lower);
/// the bonded interface carries g0_int/g1_int.
struct SurfaceTension {
    double g0_plus = 0.0;
    double g0_minus = 0.0;
    double g1_plus = 0.0;
    double g1_minus = 0.0;
    double g0_int = 0.0;
    double g1_int = 0.0;
};

struct FarField {
    double sigma = 0.0;
    double tau = 0.0;
    std::optional<double> sigma_x1;
    std::optional<double> sigma_x2;
    std::optional<double> omega1;
    std::optional<double> omega2;
};

/// Face tractions as ascending polynomial coefficients in x.
struct CrackLoad {
    std::vector<double> f_plus;
    std::vector<double> f_minus;
    std::vector<double> g_plus;
    std::vector<double> g_minus;

    std::size_t degree_bound() const {
        return std::max({f_plus.size(), f_minus.size(), g_plus.size(), g_minus.size()});
    }

    /// Zero-pad all four vectors to `n` entries. Throws if any is longer.
    CrackLoad padded(std::size_t n) const {
        if (degree_bound() > n) {
            throw DimensionMismatch("crack load has degree " + std::to_string(degree_bound() - 1) +
                                    ", exceeds " + std::to_string(static_cast<long>(n) - 1));
        }
        CrackLoad out = *this;
        for (auto* v : {&out.f_plus, &out.f_minus, &out.g_plus, &out.g_minus}) v->resize(n, 0.0);
        return out;
    }

    CrackLoad scaled(double s) const {
        CrackLoad out = *this;
        for (auto* v : {&out.f_plus, &out.f_minus, &out.g_plus, &out.g_minus})
            for (double& c : *v) c *= s;
        return out;
    }
};

struct Problem {
    Material mat1;
    Material mat2;
    SurfaceTension st;
    FarField far;
    CrackLoad load;
    double half_length = 1.0;

    /// Same problem with every load (far field and faces) multiplied by s.
    Problem scaled_loads(double s) const {
        Problem p = *this;
        p.far.sigma *= s;
        p.far.tau *= s;
        p.load = load.scaled(s);
        return p;
    }
};

inline void check_material(const Material& m) {
    if (!std::isfinite(m.mu) || m.mu <= 0.0)
        throw InvalidMaterial("shear modulus must be positive, got " + std::to_string(m.mu));
    if (!std::isfinite(m.nu) || m.nu <= -1.0 || m.nu >= 0.5)
        throw InvalidMaterial("Poisson ratio must lie in (-1, 0.5), got " + std::to_string(m.nu));
}

inline MaterialConstants derive_material_constants(const Material& m) {
    check_material(m);
    MaterialConstants c;
    c.lambda = 2.0 * m.mu * m.nu / (1.0 - 2.0 * m.nu);
    const double d = c.lambda + 3.0 * m.mu;
    c.alpha = 2.0 * m.mu * m.mu / d;
    c.beta = 2.0 * m.mu * (c.lambda + 2.0 * m.mu) / (d * std::numbers::pi);
    c.kappa = 3.0 - 4.0 * m.nu;
    return c;
}

struct CompatibilityReport {
    std::optional<double> sigma_x2;        // compatible value, when sigma_x1 is given
    double rotation_mismatch = 0.0;        // required omega2 - omega1
    bool sigma_ok = true;
    bool rotation_ok = true;
    std::vector<std::string> failures;

    bool ok() const { return sigma_ok && rotation_ok; }
};

namespace detail {
inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}
}  // namespace detail

inline CompatibilityReport check_farfield_compatibility(const FarField& far, const MaterialConstants& c1,
                                                        const MaterialConstants& c2, double mu1, double mu2) {
    constexpr double tol = 1e-12;
    CompatibilityReport r;
    r.rotation_mismatch = (mu2 - mu1) / (2.0 * mu1 * mu2) * far.tau;
    if (far.sigma_x1) {
        const double rhs = ((3.0 - c1.kappa) / mu1 - (3.0 - c2.kappa) / mu2) * far.sigma;
        const double sx2 = ((1.0 + c1.kappa) / mu1 * *far.sigma_x1 - rhs) / ((1.0 + c2.kappa) / mu2);
        r.sigma_x2 = sx2;
        if (far.sigma_x2 && !detail::close_rel(*far.sigma_x2, sx2, tol)) {
            r.sigma_ok = false;
            r.failures.push_back("sigma_x2 = " + std::to_string(*far.sigma_x2) + " but compatibility requires " +
                                 std::to_string(sx2));
        }
    }
    if (far.omega1 && far.omega2 && !detail::close_rel(*far.omega2 - *far.omega1, r.rotation_mismatch, tol)) {
        r.rotation_ok = false;
        r.failures.push_back("omega2 - omega1 must equal " + std::to_string(r.rotation_mismatch));
    }
    return r;
}

/// Exact integral of a polynomial over [-l, l].
inline double integrate_symmetric(const std::vector<double>& c, double l) {
    double s = 0.0;
    double lp = l;  // l^(k+1)
    for (std::size_t k = 0; k < c.size(); ++k, lp *= l)
        if (k % 2 == 0) s += c[k] * 2.0 * lp / static_cast<double>(k + 1);
    return s;
}

struct EquilibriumReport {
    double shear_imbalance = 0.0;   // integral of f+ - f-
    double normal_imbalance = 0.0;  // integral of g+ - g-
    double tolerance = 0.0;
    bool ok = true;
};

inline EquilibriumReport check_load_equilibrium(const CrackLoad& load, double l) {
    EquilibriumReport r;
    r.shear_imbalance = integrate_symmetric(load.f_plus, l) - integrate_symmetric(load.f_minus, l);
    r.normal_imbalance = integrate_symmetric(load.g_plus, l) - integrate_symmetric(load.g_minus, l);
    double scale = 0.0;
    for (const auto* v : {&load.f_plus, &load.f_minus, &load.g_plus, &load.g_minus})
        scale = std::max(scale, std::abs(integrate_symmetric(*v, l)));
    for (const auto* v : {&load.f_plus, &load.f_minus, &load.g_plus, &load.g_minus})
        for (double c : *v) scale = std::max(scale, std::abs(c));
    r.tolerance = 1e-12 * std::max(1.0, scale);
    r.ok = std::abs(r.shear_imbalance) <= r.tolerance && std::abs(r.normal_imbalance) <= r.tolerance;
    return r;
}

/// Full physical validation. Hard failures throw; soft issues come back as warnings.
inline std::vector<std::string> validate(const Problem& p) {
    std::vector<std::string> warnings;
    const auto c1 = derive_material_constants(p.mat1);
    const auto c2 = derive_material_constants(p.mat2);
    if (!std::isfinite(p.half_length) || p.half_length <= 0.0)
        throw PreconditionViolation("half_length must be positive");
    const auto& s = p.st;
    for (double g : {s.g0_plus, s.g0_minus, s.g1_plus, s.g1_minus, s.g0_int, s.g1_int})
        if (!std::isfinite(g)) throw PreconditionViolation("surface tension constants must be finite");
    if (s.g1_plus == 0.0 || s.g1_minus == 0.0 || s.g1_int == 0.0)
        warnings.emplace_back("a g1 constant is zero; tip singularities are then not of logarithmic type");
    const auto eq = check_load_equilibrium(p.load, p.half_length);
    if (!eq.ok)
        throw PreconditionViolation("crack-face loads are not in equilibrium (shear " +
                                    std::to_string(eq.shear_imbalance) + ", normal " +
                                    std::to_string(eq.normal_imbalance) + ")");
    const auto cr = check_farfield_compatibility(p.far, c1, c2, p.mat1.mu, p.mat2.mu);
    if (!cr.ok()) throw PreconditionViolation("far field incompatible: " + cr.failures.front());
    return warnings;
}

}  // namespace ifcrack
