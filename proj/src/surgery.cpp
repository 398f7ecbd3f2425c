#include "lattesda/surgery.hpp"

#include <cmath>

namespace lattesda {

SurgeryProfile::SurgeryProfile(double r_, double mu_) : r(r_), mu(mu_) {
    if (!(mu > 0.0 && mu < 1.0))
        throw std::invalid_argument("SurgeryProfile: mu must lie in (0,1), got " +
                                    std::to_string(mu_));
    // r <= 0.3 keeps the supports around Z^2 U ((1/2,1/2)+Z^2) disjoint
    // (center spacing sqrt(2)/2). r = 0 disables the surgery.
    if (!(r >= 0.0 && r <= 0.3))
        throw std::invalid_argument("SurgeryProfile: r must lie in [0, 0.3], got " +
                                    std::to_string(r_));
}

double bump(double t, const SurgeryProfile& profile) {
    if (t < 0.0) throw std::invalid_argument("bump: negative squared distance");
    double r2 = profile.r * profile.r;
    if (!profile.enabled() || t >= r2) return 0.0;
    double w = 1.0 - t / r2;
    return w * w;
}

PerturbedMap::PerturbedMap(const IntMatrix2& M, const SurgeryProfile& profile)
    : matrix_(M), frame_(eigenframe(M)), profile_(profile) {
    linear_ = {M.a.convert_to<double>(), M.b.convert_to<double>(),
               M.c.convert_to<double>(), M.d.convert_to<double>()};
    strength_ = frame_.lambda_u - profile_.mu;
    if (profile_.enabled()) {
        double ratio = (frame_.lambda_u - 1.0) / strength_;
        if (!(ratio > 0.0 && ratio < 1.0))
            throw std::invalid_argument(
                "PerturbedMap: (lambda_u - 1)/s outside (0,1); no saddle on the unstable axis");
        // Both perturbation centers must be fixed classes of the matrix.
        if (mod_floor(M.a + M.b, 2) != 1 || mod_floor(M.c + M.d, 2) != 1)
            throw std::invalid_argument(
                "PerturbedMap: (1/2,1/2) is not fixed by " + M.to_string() +
                "; the surgery centers must be fixed (a+b and c+d odd)");
    }
    // P_u = V diag(1,0) V^{-1} with V = [e_u e_s].
    Mat2d V{frame_.e_u.x, frame_.e_s.x, frame_.e_u.y, frame_.e_s.y};
    Mat2d Vinv = V.inverse();
    proj_u_ = Mat2d{frame_.e_u.x * Vinv.a, frame_.e_u.x * Vinv.b,
                    frame_.e_u.y * Vinv.a, frame_.e_u.y * Vinv.b};
}

Vec2 PerturbedMap::nearest_center(const Vec2& x) const {
    Vec2 c1{std::round(x.x), std::round(x.y)};
    Vec2 c2{std::round(x.x - 0.5) + 0.5, std::round(x.y - 0.5) + 0.5};
    double d1 = (x - c1).norm2();
    double d2 = (x - c2).norm2();
    return d2 < d1 ? c2 : c1;
}

Vec2 PerturbedMap::lift_apply(const Vec2& x) const {
    Vec2 ax = linear_ * x;
    if (!profile_.enabled()) return ax;
    Vec2 c = nearest_center(x);
    Vec2 v = x - c;
    double t = v.norm2();
    double r2 = profile_.r * profile_.r;
    if (t >= r2) return ax;
    double h = 1.0 - t / r2;
    h *= h;
    Vec2 pu = proj_u_ * v;
    return ax - pu * (strength_ * h);
}

Vec2 PerturbedMap::torus_apply(const Vec2& x) const { return wrap_unit(lift_apply(x)); }

Vec2 PerturbedMap::sphere_apply_numeric(const Vec2& canon) const {
    return canonical_rep(lift_apply(canon));
}

SpherePoint PerturbedMap::sphere_apply(const SpherePoint& s) const {
    return SpherePoint::numeric(lift_apply(s.numeric_rep()));
}

namespace {

FixedPointInfo fixed_point_info(const PerturbedMap& P, const Vec2& x, double residual) {
    FixedPointInfo info;
    info.point = SpherePoint::numeric(x);
    info.residual = residual;
    Mat2d J = fd_jacobian([&P](const Vec2& p) { return P.lift_apply(p); }, x, 1e-5);
    if (auto ev = real_eigenvalues(J)) {
        info.multipliers = *ev;
    } else {
        double m = spectral_radius(J);
        info.multipliers = {m, m};
    }
    return info;
}

}  // namespace

SurgeryReport find_saddles(const PerturbedMap& P) {
    if (!P.surgery_enabled())
        throw SaddleNotFound("find_saddles: surgery disabled (r = 0), no saddles exist");

    const double lambda_u = P.frame().lambda_u;
    const double s = P.strength();
    const SurgeryProfile& prof = P.profile();

    // On the unstable axis through a center the map is u -> (lambda_u - s h(u^2)) u;
    // the nonzero fixed offset solves lambda_u - s h(u^2) = 1.
    auto psi = [&](double u) { return lambda_u - s * bump(u * u, prof) - 1.0; };
    if (!(psi(0.0) < 0.0 && psi(prof.r) > 0.0))
        throw SaddleNotFound("find_saddles: no bracket on (0, r); profile violates the "
                             "derived-strength invariant");
    double u_star = bisect(psi, 0.0, prof.r, 1e-14);

    SurgeryReport report;
    report.unstable_axis_offset = u_star;

    auto centers = P.attractor_centers();
    for (int i = 0; i < 2; ++i) {
        Vec2 c = centers[static_cast<std::size_t>(i)];
        double res = wrap_half(P.lift_apply(c) - c).norm();
        report.attractors[static_cast<std::size_t>(i)] = fixed_point_info(P, c, res);

        Vec2 seed = c + P.frame().e_u * u_star;
        auto fixed_residual = [&P](const Vec2& x) { return wrap_half(P.lift_apply(x) - x); };
        NewtonResult nr = newton2d(fixed_residual, seed, 1e-10, 50, 1e-7);
        report.saddles[static_cast<std::size_t>(i)] = fixed_point_info(P, nr.x, nr.residual);
    }
    return report;
}

std::vector<PreimageBranch> preimages_perturbed(const PerturbedMap& P, const Vec2& y_canonical) {
    const IntMatrix2& M = P.matrix();
    Mat2d Ainv = Mat2d{M.a.convert_to<double>(), M.b.convert_to<double>(),
                       M.c.convert_to<double>(), M.d.convert_to<double>()}
                     .inverse();

    std::vector<PreimageBranch> branches;
    for (const auto& [k1, k2] : coset_representatives(M)) {
        Vec2 target = y_canonical + Vec2{k1.convert_to<double>(), k2.convert_to<double>()};
        Vec2 seed = wrap_unit(Ainv * target);
        PreimageBranch branch;
        auto residual = [&](const Vec2& x) { return wrap_half(P.lift_apply(x) - y_canonical); };
        try {
            NewtonResult nr = newton2d(residual, seed, 1e-10, 50, 1e-7);
            branch.point = canonical_rep(nr.x);
            branch.residual = nr.residual;
            branch.converged = true;
        } catch (const NewtonDiverged& e) {
            branch.point = canonical_rep(seed);
            branch.residual = e.residual_trace.empty() ? -1.0 : e.residual_trace.back();
            branch.converged = false;
            branch.message = e.what();
        }
        branches.push_back(branch);
    }
    return branches;
}

}  // namespace lattesda
