#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattesda/pillowcase.hpp"

#include <cmath>
#include <random>

using namespace lattesda;

namespace {

const IntMatrix2 A{4, 1, 2, 1};

RationalTorusPoint pt(long long a1, long long b1, long long a2, long long b2) {
    return RationalTorusPoint::from_fractions(a1, b1, a2, b2);
}

SpherePoint sp(long long a1, long long b1, long long a2, long long b2) {
    return project(pt(a1, b1, a2, b2));
}

RationalTorusPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> den(1, 60);
    long long d = den(rng);
    std::uniform_int_distribution<long long> num(0, d - 1);
    return RationalTorusPoint::reduced(num(rng), num(rng), d);
}

std::set<SpherePoint> sphere_preimages(const IntMatrix2& M, const SpherePoint& s) {
    std::set<SpherePoint> pre;
    for (const auto& lift : fiber(s))
        for (const auto& x : preimages(M, lift)) pre.insert(project(x));
    return pre;
}

}  // namespace

TEST_CASE("project: canonical representative examples") {
    CHECK(project(pt(3, 4, 0, 1)) == sp(1, 4, 0, 1));
    CHECK(project(pt(0, 1, 0, 1)).rational_rep() == pt(0, 1, 0, 1));
    CHECK(project(pt(1, 3, 2, 3)).rational_rep() == pt(1, 3, 2, 3));
}

TEST_CASE("project: invariant under negation, exact") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; ++i) {
        RationalTorusPoint x = random_point(rng);
        CHECK(project(x) == project(x.negated()));
    }
}

TEST_CASE("fiber: branch points have a singleton fiber") {
    std::set<RationalTorusPoint> half{pt(1, 2, 0, 1)};
    CHECK(fiber(sp(1, 2, 0, 1)) == half);

    std::set<RationalTorusPoint> generic{pt(1, 4, 0, 1), pt(3, 4, 0, 1)};
    CHECK(fiber(sp(1, 4, 0, 1)) == generic);

    std::mt19937_64 rng(19);
    for (int i = 0; i < 100; ++i) {
        auto f = fiber(project(random_point(rng)));
        CHECK(f.size() >= 1);
        CHECK(f.size() <= 2);
    }
}

TEST_CASE("induced_apply: fixed-point images and the semiconjugacy") {
    CHECK(induced_apply(A, sp(0, 1, 1, 2)) == sp(1, 2, 1, 2));
    CHECK(induced_apply(A, sp(1, 2, 0, 1)) == sp(0, 1, 0, 1));

    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
        RationalTorusPoint x = random_point(rng);
        // Both lifts project to the same image.
        CHECK(project(apply(A, x)) == project(apply(A, x.negated())));
        // pi . A = f . pi
        CHECK(project(apply(A, x)) == induced_apply(A, project(x)));
    }
}

TEST_CASE("critical_points_f: the two critical points and values of f") {
    std::set<SpherePoint> expected_crit{sp(1, 4, 0, 1), sp(1, 4, 1, 2)};
    CHECK(critical_points_f(A) == expected_crit);

    std::set<SpherePoint> values;
    for (const auto& c : critical_points_f(A)) values.insert(induced_apply(A, c));
    std::set<SpherePoint> expected_values{sp(0, 1, 1, 2), sp(1, 2, 0, 1)};
    CHECK(values == expected_values);

    // Each critical point is the unique preimage of its critical value.
    for (const auto& c : critical_points_f(A)) {
        auto pre = sphere_preimages(A, induced_apply(A, c));
        CHECK(pre.size() == 1);
        CHECK(*pre.begin() == c);
    }
}

TEST_CASE("critical_points_f: degree restriction") {
    CHECK_THROWS_AS(critical_points_f(IntMatrix2{2, 1, 1, 1}), UnsupportedDegree);  // det 1
    CHECK_THROWS_AS(critical_points_f(IntMatrix2{3, 0, 0, 1}), UnsupportedDegree);  // det 3
}

TEST_CASE("verify_lattes: all lemma flags for A, with the known orbit tables") {
    LattesReport rep = verify_lattes(A);
    CHECK(rep.ram);
    CHECK(rep.crit);
    CHECK(rep.inv);
    CHECK(rep.nonperiodic);
    CHECK(rep.homology_hyperbolic);
    CHECK_FALSE(rep.has_totally_invariant_fixed_point);
    CHECK(rep.all_pass());

    // Branch-value orbit table: exact apply on the four 2-torsion classes.
    std::map<std::string, std::string> table;
    for (const auto& [b, fb] : rep.branch_orbit) table[b.to_string()] = fb.to_string();
    CHECK(table[sp(0, 1, 0, 1).to_string()] == sp(0, 1, 0, 1).to_string());
    CHECK(table[sp(1, 2, 0, 1).to_string()] == sp(0, 1, 0, 1).to_string());
    CHECK(table[sp(0, 1, 1, 2).to_string()] == sp(1, 2, 1, 2).to_string());
    CHECK(table[sp(1, 2, 1, 2).to_string()] == sp(1, 2, 1, 2).to_string());

    // Postcritical orbits terminate on fixed points immediately.
    REQUIRE(rep.postcritical_orbits.size() == 2);
    for (const auto& orbit : rep.postcritical_orbits) {
        bool starts_at_value = orbit.start == sp(0, 1, 1, 2) || orbit.start == sp(1, 2, 0, 1);
        CHECK(starts_at_value);
        // value -> fixed point -> (repeat of the fixed point)
        REQUIRE(orbit.orbit.size() == 3);
        CHECK(orbit.cycle_start == 1);
        CHECK(orbit.orbit[1] == orbit.orbit[2]);
    }

    // The mechanism behind non-periodicity: Crit(f) disjoint from the branch
    // set and the branch set forward-invariant.
    BranchData bd = branch_data(A);
    for (const auto& c : rep.crit_f) CHECK(bd.branch_points.count(c) == 0);
    for (const auto& v : bd.branch_values) CHECK(bd.branch_points.count(v) == 1);
}

TEST_CASE("verify_lattes: passes for other hyperbolic det +-2 matrices") {
    for (const IntMatrix2& M :
         {IntMatrix2{3, 1, 1, 1}, IntMatrix2{2, 1, 2, 2}, IntMatrix2{3, 2, 1, 0}}) {
        LattesReport rep = verify_lattes(M);
        CHECK(rep.ram);
        CHECK(rep.crit);
        CHECK(rep.inv);
        CHECK(rep.nonperiodic);
        CHECK(rep.homology_hyperbolic);
        CHECK_FALSE(rep.has_totally_invariant_fixed_point);
    }
}

TEST_CASE("verify_lattes: propagates precondition failures") {
    CHECK_THROWS_AS(verify_lattes(IntMatrix2{2, 0, 0, 1}), NotHyperbolic);
    CHECK_THROWS_AS(verify_lattes(IntMatrix2{3, 1, 1, 1} * IntMatrix2{3, 1, 1, 1}),
                    UnsupportedDegree);  // det 4
}

TEST_CASE("homology_hyperbolic: exact unit-circle test") {
    CHECK(homology_hyperbolic(A));
    CHECK_FALSE(homology_hyperbolic(IntMatrix2{2, 0, 0, 1}));   // eigenvalue 1
    CHECK_FALSE(homology_hyperbolic(IntMatrix2{0, -1, 1, 0}));  // rotation, |lambda| = 1
    CHECK_FALSE(homology_hyperbolic(IntMatrix2{0, -1, 1, 1}));  // complex pair, det 1
    CHECK(homology_hyperbolic(IntMatrix2{1, -1, 1, 1}));        // complex pair, det 2
}

TEST_CASE("sphere_fixed_count: N_1 = 5 and N_2 = 21, matching the enumeration oracle") {
    CHECK(sphere_fixed_count(A, 1) == 5);
    CHECK(sphere_fixed_count(A, 2) == 21);
    for (unsigned n = 1; n <= 3; ++n)
        CHECK(sphere_fixed_count(A, n) == sphere_fixed_count_by_enumeration(A, n));

    SphereFixedCount d1 = sphere_fixed_count_detail(A, 1);
    CHECK(d1.fix_plus.size() == 2);
    CHECK(d1.fix_minus.size() == 8);
    CHECK(d1.card_plus == 2);
    CHECK(d1.card_minus == 8);
    CHECK(d1.intersection_size == 2);
    CHECK(d1.torsion_in_union == 2);
}

TEST_CASE("sphere_fixed_count: projected solutions are genuine fixed points") {
    for (unsigned n = 1; n <= 3; ++n) {
        SphereFixedCount detail = sphere_fixed_count_detail(A, n);
        auto check_set = [&](const std::set<RationalTorusPoint>& points) {
            for (const auto& x : points) {
                SpherePoint s = project(x);
                SpherePoint image = s;
                for (unsigned i = 0; i < n; ++i) image = induced_apply(A, image);
                CHECK(image == s);
            }
        };
        check_set(detail.fix_plus);
        check_set(detail.fix_minus);
    }
}

TEST_CASE("periodic_census: growth rate at least log 2 for n = 1..6") {
    auto rows = periodic_census(A, 6);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].sphere_count == 5);
    CHECK(rows[1].sphere_count == 21);
    CHECK(rows[0].torus_count == 8);
    CHECK(rows[0].det_minus == 2);
    CHECK(rows[0].det_plus == 8);
    for (const auto& row : rows) CHECK(row.log_rate >= std::log(2.0) - 1e-9);
}
