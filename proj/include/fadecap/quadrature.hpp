// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <vector>

namespace fadecap {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] (Golub-Welsch from the Jacobi matrix).
GaussRule gauss_legendre(int n);

/// Gauss-Hermite rule for weight exp(-x^2) on (-inf, inf).
GaussRule gauss_hermite(int n);

/// Gauss-Laguerre rule for weight exp(-x) on [0, inf).
GaussRule gauss_laguerre(int n);

struct QuadOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    int max_depth = 44;
};

/// Adaptive bisection with a 15-point Gauss-Legendre panel rule.
/// Throws numeric_error if the tolerance cannot be met within max_depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

/// Iterated 2D integral over [ax,bx] x [ay,by]; the inner integral is solved
/// adaptively at a tighter tolerance than the outer one.
double integrate2d(const std::function<double(double, double)>& f, double ax,
                   double bx, double ay, double by, const QuadOptions& opt = {});

} // namespace fadecap
