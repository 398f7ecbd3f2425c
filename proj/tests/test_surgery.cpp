#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattesda/pillowcase.hpp"
#include "lattesda/surgery.hpp"

#include <cmath>
#include <random>

using namespace lattesda;

namespace {

const IntMatrix2 A{4, 1, 2, 1};

PerturbedMap default_map() { return PerturbedMap(A, SurgeryProfile(0.2, 0.5)); }

Vec2 random_unit_square(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return {u(rng), u(rng)};
}

}  // namespace

TEST_CASE("bump: normalization, support boundary, interior value") {
    SurgeryProfile prof(0.2, 0.5);
    double r2 = prof.r * prof.r;
    CHECK(bump(0.0, prof) == 1.0);
    CHECK(bump(r2, prof) == 0.0);
    CHECK(bump(2.0 * r2, prof) == 0.0);
    CHECK(bump(r2 / 4.0, prof) == doctest::Approx(9.0 / 16.0).epsilon(1e-15));

    // C^1 at the boundary: one-sided slopes vanish together.
    double d = 1e-7;
    CHECK(std::fabs(bump(r2 - d, prof) - bump(r2 + d, prof)) / (2 * d) < 1e-4);

    // Nonincreasing on [0, r^2].
    double prev = 1.0;
    for (int i = 1; i <= 100; ++i) {
        double h = bump(r2 * i / 100.0, prof);
        CHECK(h <= prev + 1e-15);
        prev = h;
    }

    CHECK_THROWS_AS(bump(-1e-9, prof), std::invalid_argument);
}

TEST_CASE("SurgeryProfile: invariant validation") {
    CHECK_THROWS_AS(SurgeryProfile(0.05, 0.999 + 0.001), std::invalid_argument);  // mu >= 1
    CHECK_THROWS_AS(SurgeryProfile(0.2, 1.2), std::invalid_argument);
    CHECK_THROWS_AS(SurgeryProfile(0.2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SurgeryProfile(0.2, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(SurgeryProfile(0.35, 0.5), std::invalid_argument);  // supports overlap
    CHECK_THROWS_AS(SurgeryProfile(-0.1, 0.5), std::invalid_argument);
    CHECK_NOTHROW(SurgeryProfile(0.05, 0.999));  // (lambda_u-1)/s < 1 still holds
    CHECK(SurgeryProfile(0.0, 0.5).enabled() == false);
    CHECK(SurgeryProfile(0.3, 0.5).enabled() == true);
}

TEST_CASE("PerturbedMap: centers must be fixed when the surgery is enabled") {
    // a+b even: (1/2,1/2) moves to (0,0), so the surgery is rejected.
    CHECK_THROWS_AS(PerturbedMap(IntMatrix2{3, 1, 1, 1}, SurgeryProfile(0.2, 0.5)),
                    std::invalid_argument);
    CHECK_NOTHROW(PerturbedMap(IntMatrix2{3, 1, 1, 1}, SurgeryProfile(0.0, 0.5)));
    CHECK_NOTHROW(PerturbedMap(IntMatrix2{3, 2, 1, 0}, SurgeryProfile(0.2, 0.5)));
}

TEST_CASE("lift_apply: centers are fixed with multipliers {mu, lambda_s}") {
    PerturbedMap P = default_map();
    Vec2 g0 = P.lift_apply({0.0, 0.0});
    CHECK(g0.x == 0.0);
    CHECK(g0.y == 0.0);

    Mat2d J = fd_jacobian([&](const Vec2& x) { return P.lift_apply(x); }, {0.0, 0.0}, 1e-5);
    auto ev = real_eigenvalues(J);
    REQUIRE(ev.has_value());
    CHECK((*ev)[0] == doctest::Approx(0.5).epsilon(1e-6));  // mu along e_u
    CHECK((*ev)[1] == doctest::Approx(P.frame().lambda_s).epsilon(1e-6));

    // The half-integer center is fixed on the torus.
    Vec2 gc = P.torus_apply({0.5, 0.5});
    CHECK(torus_distance(gc, {0.5, 0.5}) < 1e-15);
}

TEST_CASE("lift_apply: unperturbed outside every support") {
    PerturbedMap P = default_map();
    Vec2 x{0.3, 0.05};  // distance >= 0.3 to every center
    Vec2 gx = P.lift_apply(x);
    Mat2d Ad{4, 1, 2, 1};
    Vec2 ax = Ad * x;
    CHECK(gx.x == ax.x);  // exact: the same arithmetic path
    CHECK(gx.y == ax.y);
    CHECK(gx.x == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(gx.y == doctest::Approx(0.65).epsilon(1e-15));
}

TEST_CASE("lift_apply: equivariance G(-x) = -G(x) at 1000 random points") {
    PerturbedMap P = default_map();
    std::mt19937_64 rng(29);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        Vec2 x = random_unit_square(rng) * 4.0 - Vec2{2.0, 2.0};
        Vec2 a = P.lift_apply({-x.x, -x.y});
        Vec2 b = P.lift_apply(x);
        worst = std::max(worst, (a + b).norm());
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("lift_apply: periodicity G(x+k) = G(x) + A k") {
    PerturbedMap P = default_map();
    Mat2d Ad{4, 1, 2, 1};
    std::mt19937_64 rng(31);
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        Vec2 x = random_unit_square(rng);
        std::uniform_int_distribution<int> ki(-2, 2);
        Vec2 k{double(ki(rng)), double(ki(rng))};
        Vec2 lhs = P.lift_apply(x + k) - P.lift_apply(x);
        Vec2 rhs = Ad * k;
        worst = std::max(worst, (lhs - rhs).norm());
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("sphere_apply: fixed attractor, agreement with f off-support, lift independence") {
    PerturbedMap P = default_map();
    Vec2 a1 = P.sphere_apply_numeric({0.0, 0.0});
    CHECK(a1.x == 0.0);
    CHECK(a1.y == 0.0);

    // pi(1/4, 0) -> pi(0, 1/2) because (1/4, 0) lies outside every support.
    Vec2 img = P.sphere_apply_numeric({0.25, 0.0});
    CHECK(sphere_distance(img, {0.0, 0.5}) < 1e-15);

    std::mt19937_64 rng(37);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        Vec2 x = random_unit_square(rng);
        Vec2 via_x = canonical_rep(P.lift_apply(x));
        Vec2 via_neg = canonical_rep(P.lift_apply({-x.x, -x.y}));
        worst = std::max(worst, sphere_distance(via_x, via_neg));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("find_saddles: offset matches the closed-form oracle, signature correct") {
    PerturbedMap P = default_map();
    SurgeryReport rep = find_saddles(P);

    // Closed form for the bisection target: h(u*^2) = (lambda_u-1)/s with
    // h(t) = (1 - t/r^2)^2 gives u* = r sqrt(1 - sqrt((lambda_u-1)/s)).
    double lambda_u = P.frame().lambda_u;
    double s = P.strength();
    double u_oracle = 0.2 * std::sqrt(1.0 - std::sqrt((lambda_u - 1.0) / s));
    CHECK(rep.unstable_axis_offset == doctest::Approx(u_oracle).epsilon(1e-10));
    CHECK(rep.unstable_axis_offset / 0.2 == doctest::Approx(0.252).epsilon(2e-3));

    for (const auto& saddle : rep.saddles) {
        CHECK(saddle.residual < 1e-10);
        double m_big = std::max(std::fabs(saddle.multipliers[0]), std::fabs(saddle.multipliers[1]));
        double m_small = std::min(std::fabs(saddle.multipliers[0]), std::fabs(saddle.multipliers[1]));
        CHECK(m_big > 1.0);
        CHECK(m_small < 1.0);
        CHECK(m_small > 0.0);

        // Analytic multiplier along the axis: 1 - 2 s u*^2 h'(u*^2).
        double r2 = 0.2 * 0.2;
        double u2 = rep.unstable_axis_offset * rep.unstable_axis_offset;
        double hprime = -2.0 * (1.0 - u2 / r2) / r2;
        double m_axis = 1.0 - 2.0 * s * u2 * hprime;
        CHECK(m_big == doctest::Approx(m_axis).epsilon(1e-3));
        CHECK(m_small == doctest::Approx(std::fabs(P.frame().lambda_s)).epsilon(1e-3));
    }

    for (const auto& attractor : rep.attractors) {
        CHECK(attractor.residual < 1e-12);
        double spectral =
            std::max(std::fabs(attractor.multipliers[0]), std::fabs(attractor.multipliers[1]));
        CHECK(spectral == doctest::Approx(0.5).epsilon(1e-3));  // max(mu, |lambda_s|)
        CHECK(std::fabs(attractor.multipliers[0]) < 1.0);
        CHECK(std::fabs(attractor.multipliers[1]) < 1.0);
    }

    // p1 projects near pi(0,0), p2 near pi(1/2,1/2).
    CHECK(sphere_distance(rep.saddles[0].point.numeric_rep(), {0.0, 0.0}) <
          rep.unstable_axis_offset * 1.5);
    CHECK(sphere_distance(rep.saddles[1].point.numeric_rep(), {0.5, 0.5}) <
          rep.unstable_axis_offset * 1.5);
}

TEST_CASE("find_saddles: disabled surgery has no saddles") {
    PerturbedMap P(A, SurgeryProfile(0.0, 0.5));
    CHECK_THROWS_AS(find_saddles(P), SaddleNotFound);
}

TEST_CASE("preimages_perturbed: linear preimages off-support, round trips, attractor") {
    PerturbedMap P = default_map();

    // Both linear preimages of (0.3, 0.05) lie outside every support, so the
    // perturbed preimages are exactly the linear ones.
    Vec2 y = canonical_rep({0.3, 0.05});
    Mat2d Ainv = Mat2d{4, 1, 2, 1}.inverse();
    auto branches = preimages_perturbed(P, y);
    REQUIRE(branches.size() == 2);
    std::vector<Vec2> expected{canonical_rep(wrap_unit(Ainv * y)),
                               canonical_rep(wrap_unit(Ainv * (y + Vec2{1.0, 0.0})))};
    for (const auto& b : branches) {
        CHECK(b.converged);
        CHECK(b.residual < 1e-10);
        bool matches = sphere_distance(b.point, expected[0]) < 1e-9 ||
                       sphere_distance(b.point, expected[1]) < 1e-9;
        CHECK(matches);
    }

    // Round trip on 100 random sphere points.
    std::mt19937_64 rng(41);
    for (int i = 0; i < 100; ++i) {
        Vec2 q = canonical_rep(random_unit_square(rng));
        for (const auto& b : preimages_perturbed(P, q)) {
            REQUIRE(b.converged);
            CHECK(sphere_distance(P.sphere_apply_numeric(b.point), q) < 1e-9);
        }
    }

    // The attractor is one of its own preimages.
    auto pre0 = preimages_perturbed(P, {0.0, 0.0});
    bool contains_self = false;
    for (const auto& b : pre0)
        if (b.converged && sphere_distance(b.point, {0.0, 0.0}) < 1e-9) contains_self = true;
    CHECK(contains_self);
}

TEST_CASE("differentiability probe: step-halving agreement away from the folded branch values") {
    PerturbedMap P = default_map();
    std::mt19937_64 rng(43);
    const Vec2 bad1{0.5, 0.0}, bad2{0.0, 0.5};  // non-fixed branch values
    int tested = 0;
    for (int i = 0; i < 2000; ++i) {
        Vec2 x = canonical_rep(random_unit_square(rng));
        if (sphere_distance(x, bad1) < 1e-3 || sphere_distance(x, bad2) < 1e-3) continue;
        ++tested;
        Mat2d j4 = fd_jacobian([&](const Vec2& p) { return P.lift_apply(p); }, x, 1e-4);
        Mat2d j5 = fd_jacobian([&](const Vec2& p) { return P.lift_apply(p); }, x, 1e-5);
        CHECK((j4 - j5).max_abs() < 0.05);
    }
    CHECK(tested > 1500);
}

TEST_CASE("critical points fall into the basins") {
    PerturbedMap P = default_map();
    for (Vec2 crit : {Vec2{0.25, 0.0}, Vec2{0.25, 0.5}}) {
        Vec2 x = canonical_rep(crit);
        bool captured = false;
        for (int step = 0; step < 10 && !captured; ++step) {
            if (sphere_distance(x, {0.0, 0.0}) < 1e-6 || sphere_distance(x, {0.5, 0.5}) < 1e-6)
                captured = true;
            x = P.sphere_apply_numeric(x);
        }
        CHECK(captured);
    }
}
