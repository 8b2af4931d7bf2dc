#pragma once

#include "ifcrack/model.hpp"

namespace fixture {

using ifcrack::Problem;

/// Identical aluminium halves under remote tension.
inline Problem tension() {
    Problem p;
    p.mat1 = p.mat2 = {70.0, 0.3};
    p.st = {0.01, 0.01, 0.01, 0.01, 0.005, 0.005};
    p.far.sigma = 1.0;
    return p;
}

/// Dissimilar halves under remote shear.
inline Problem shear() {
    Problem p;
    p.mat1 = {70.0, 0.3};
    p.mat2 = {80.0, 0.35};
    p.st = {0.01, 0.02, 0.02, 0.01, -0.01, 0.01};
    p.far.tau = 1.0;
    return p;
}

/// Identical halves, every surface constant equal to g, uniform face pressure T.
inline Problem pressurised(double g, double T = 1.0) {
    Problem p;
    p.mat1 = p.mat2 = {70.0, 0.3};
    p.st = {g, g, g, g, g, g};
    p.load.g_plus = {-T};
    p.load.g_minus = {-T};
    return p;
}

}  // namespace fixture
