#pragma once

// Equivariant derived-from-Anosov surgery: damp the unstable stretch inside
// small discs around the centers Z^2 U ((1/2,1/2)+Z^2) so both fixed classes
// become attractors, creating one saddle pair per center.

#include "lattesda/lattice_dynamics.hpp"
#include "lattesda/numerics.hpp"
#include "lattesda/sphere.hpp"

#include <array>
#include <optional>
#include <vector>

namespace lattesda {

struct SaddleNotFound : std::runtime_error {
    explicit SaddleNotFound(const std::string& what) : std::runtime_error(what) {}
};

// Bump support radius r and target attracting multiplier mu along e_u.
// r = 0 disables the perturbation (negative-control mode).
struct SurgeryProfile {
    double r{0.2};
    double mu{0.5};

    SurgeryProfile() = default;
    SurgeryProfile(double r_, double mu_);  // validates

    bool enabled() const { return r > 0.0; }
};

// C^1 bump on squared distance: h(t) = (1 - t/r^2)^2 on [0, r^2], else 0.
double bump(double t, const SurgeryProfile& profile);

// The perturbed lift G(x) = A x - s h(d^2) P_u (x - c), c the nearest center,
// s = lambda_u - mu, P_u the projection onto e_u along e_s. G commutes with
// Z^2 translations up to A and satisfies G(-x) = -G(x), so it descends to the
// torus and the sphere. Immutable and safe to evaluate concurrently.
class PerturbedMap {
public:
    PerturbedMap(const IntMatrix2& M, const SurgeryProfile& profile);

    const IntMatrix2& matrix() const { return matrix_; }
    const EigenFrame& frame() const { return frame_; }
    const SurgeryProfile& profile() const { return profile_; }
    double strength() const { return strength_; }
    bool surgery_enabled() const { return profile_.enabled(); }

    // The two attracting centers as sphere points.
    std::array<Vec2, 2> attractor_centers() const {
        return {Vec2{0.0, 0.0}, Vec2{0.5, 0.5}};
    }

    Vec2 lift_apply(const Vec2& x) const;              // R^2 -> R^2
    Vec2 torus_apply(const Vec2& x) const;             // wrapped to [0,1)^2
    Vec2 sphere_apply_numeric(const Vec2& canon) const;  // canonical -> canonical
    SpherePoint sphere_apply(const SpherePoint& s) const;

    // Nearest perturbation center to x in R^2.
    Vec2 nearest_center(const Vec2& x) const;

private:
    IntMatrix2 matrix_;
    Mat2d linear_;
    EigenFrame frame_;
    SurgeryProfile profile_;
    double strength_{0.0};
    Mat2d proj_u_;  // projection onto e_u along e_s
};

struct FixedPointInfo {
    SpherePoint point;                    // numeric sphere point
    std::array<double, 2> multipliers;    // finite-difference Jacobian eigenvalues
    double residual{0.0};                 // |G(x) - x| (wrapped) after refinement
};

struct SurgeryReport {
    std::array<FixedPointInfo, 2> attractors;  // pi(0,0), pi(1/2,1/2)
    std::array<FixedPointInfo, 2> saddles;     // p1 near pi(0,0), p2 near pi(1/2,1/2)
    double unstable_axis_offset{0.0};          // u* with saddle = center +- u* e_u
};

// Locate the saddle pair by 1D bisection on the unstable axis followed by
// 2D Newton refinement; report attractor/saddle multiplier estimates.
// Throws SaddleNotFound if the bisection bracket fails and propagates
// NewtonDiverged from the refinement.
SurgeryReport find_saddles(const PerturbedMap& P);

struct PreimageBranch {
    Vec2 point;            // canonical sphere representative
    double residual{0.0};
    bool converged{false};
    std::string message;   // set when the branch diverged
};

// Both F-preimage branches of a numeric sphere point, seeded from the exact
// linear preimages. Branch failures are reported, not thrown.
std::vector<PreimageBranch> preimages_perturbed(const PerturbedMap& P, const Vec2& y_canonical);

}  // namespace lattesda
