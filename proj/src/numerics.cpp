#include "lattesda/numerics.hpp"

#include <cmath>

namespace lattesda {

Mat2d fd_jacobian(const std::function<Vec2(const Vec2&)>& F, const Vec2& x, double step) {
    Vec2 fx_p = F({x.x + step, x.y});
    Vec2 fx_m = F({x.x - step, x.y});
    Vec2 fy_p = F({x.x, x.y + step});
    Vec2 fy_m = F({x.x, x.y - step});
    double inv = 1.0 / (2.0 * step);
    return {(fx_p.x - fx_m.x) * inv, (fy_p.x - fy_m.x) * inv,
            (fx_p.y - fx_m.y) * inv, (fy_p.y - fy_m.y) * inv};
}

NewtonResult newton2d(const std::function<Vec2(const Vec2&)>& F, Vec2 x0, double tol,
                      int max_iter, double fd_step) {
    std::vector<double> trace;
    Vec2 x = x0;
    for (int it = 0; it < max_iter; ++it) {
        Vec2 r = F(x);
        double rn = r.norm();
        trace.push_back(rn);
        if (rn < tol) return {x, rn, it};
        Mat2d J = fd_jacobian(F, x, fd_step);
        double det = J.det();
        if (std::fabs(det) < 1e-14)
            throw NewtonDiverged("newton2d: singular Jacobian", std::move(trace));
        Vec2 delta = J.inverse() * r;
        x = x - delta;
    }
    double rn = F(x).norm();
    trace.push_back(rn);
    if (rn < tol) return {x, rn, max_iter};
    throw NewtonDiverged("newton2d: no convergence after " + std::to_string(max_iter) +
                             " iterations (residual " + std::to_string(rn) + ")",
                         std::move(trace));
}

double bisect(const std::function<double(double)>& f, double lo, double hi, double tol,
              int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0) == (fhi > 0))
        throw std::invalid_argument("bisect: no sign change on the bracket");
    for (int it = 0; it < max_iter && (hi - lo) > tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace lattesda
