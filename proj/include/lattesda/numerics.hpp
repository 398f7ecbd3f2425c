#pragma once

// Root-finding helpers shared by the surgery and repeller modules.

#include "lattesda/vec2.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattesda {

struct NewtonDiverged : std::runtime_error {
    std::vector<double> residual_trace;
    NewtonDiverged(const std::string& what, std::vector<double> trace)
        : std::runtime_error(what), residual_trace(std::move(trace)) {}
};

// Central-difference Jacobian of F at x.
Mat2d fd_jacobian(const std::function<Vec2(const Vec2&)>& F, const Vec2& x, double step);

struct NewtonResult {
    Vec2 x;
    double residual;
    int iterations;
};

// 2D Newton on F(x) = 0 with finite-difference Jacobians.
// Throws NewtonDiverged (with the residual trace) on failure.
NewtonResult newton2d(const std::function<Vec2(const Vec2&)>& F, Vec2 x0, double tol = 1e-10,
                      int max_iter = 50, double fd_step = 1e-7);

// Bisection on [lo, hi]; requires a sign change. Throws std::invalid_argument
// if the bracket fails.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12,
              int max_iter = 200);

}  // namespace lattesda
