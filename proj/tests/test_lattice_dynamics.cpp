#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lattesda/lattice_dynamics.hpp"

#include <cmath>
#include <random>

using namespace lattesda;

namespace {

const IntMatrix2 A{4, 1, 2, 1};

RationalTorusPoint pt(long long a1, long long b1, long long a2, long long b2) {
    return RationalTorusPoint::from_fractions(a1, b1, a2, b2);
}

// Independent oracle: enumerate the grid with denominator |det(M)| * d(y)
// and keep the points that map to y under exact apply.
std::set<RationalTorusPoint> preimages_bruteforce(const IntMatrix2& M,
                                                  const RationalTorusPoint& y) {
    BigInt D = boost::multiprecision::abs(M.det()) * y.d;
    std::set<RationalTorusPoint> out;
    for (BigInt i = 0; i < D; ++i)
        for (BigInt j = 0; j < D; ++j) {
            RationalTorusPoint x = RationalTorusPoint::reduced(i, j, D);
            if (apply(M, x) == y) out.insert(x);
        }
    return out;
}

RationalTorusPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> den(1, 40);
    long long d = den(rng);
    std::uniform_int_distribution<long long> num(0, d - 1);
    return RationalTorusPoint::reduced(num(rng), num(rng), d);
}

IntMatrix2 random_hyperbolic_like(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-4, 4);
    for (;;) {
        IntMatrix2 M{entry(rng), entry(rng), entry(rng), entry(rng)};
        if (M.det() != 0) return M;
    }
}

}  // namespace

TEST_CASE("apply: exact examples") {
    CHECK(apply(A, pt(0, 1, 0, 1)) == pt(0, 1, 0, 1));
    CHECK(apply(A, pt(1, 2, 1, 2)) == pt(1, 2, 1, 2));
    CHECK(apply(A, pt(1, 4, 0, 1)) == pt(0, 1, 1, 2));
}

TEST_CASE("apply: composition law on random points") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix2 M = random_hyperbolic_like(rng);
        IntMatrix2 N = random_hyperbolic_like(rng);
        RationalTorusPoint x = random_point(rng);
        CHECK(apply(M, apply(N, x)) == apply(M * N, x));
    }
}

TEST_CASE("eigenframe: quadratic-formula oracle for A") {
    EigenFrame f = eigenframe(A);
    double lambda_u_oracle = (5.0 + std::sqrt(17.0)) / 2.0;  // roots of t^2 - 5t + 2
    double lambda_s_oracle = (5.0 - std::sqrt(17.0)) / 2.0;
    CHECK(f.lambda_u == doctest::Approx(lambda_u_oracle).epsilon(1e-14));
    CHECK(f.lambda_s == doctest::Approx(lambda_s_oracle).epsilon(1e-14));
    CHECK(std::fabs(f.lambda_u * f.lambda_s - 2.0) < 1e-12);

    Mat2d Ad{4, 1, 2, 1};
    CHECK((Ad * f.e_u - f.e_u * f.lambda_u).norm() < 1e-12);
    CHECK((Ad * f.e_s - f.e_s * f.lambda_s).norm() < 1e-12);
    CHECK(f.e_u.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f.e_s.norm() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("eigenframe: rejects non-hyperbolic matrices") {
    CHECK_THROWS_AS(eigenframe(IntMatrix2::identity()), NotHyperbolic);
    CHECK_THROWS_AS(eigenframe(IntMatrix2{0, -1, 1, 0}), NotHyperbolic);  // rotation
    CHECK_THROWS_AS(eigenframe(IntMatrix2{2, 0, 0, 1}), NotHyperbolic);   // eigenvalue 1
    CHECK_THROWS_AS(eigenframe(IntMatrix2{0, 1, 2, 0}), NotHyperbolic);   // |both| = sqrt(2)
}

TEST_CASE("preimages: frozen examples match the brute-force oracle") {
    std::set<RationalTorusPoint> expected_origin{pt(0, 1, 0, 1), pt(1, 2, 0, 1)};
    CHECK(preimages(A, pt(0, 1, 0, 1)) == expected_origin);
    CHECK(preimages_bruteforce(A, pt(0, 1, 0, 1)) == expected_origin);

    std::set<RationalTorusPoint> expected_center{pt(0, 1, 1, 2), pt(1, 2, 1, 2)};
    CHECK(preimages(A, pt(1, 2, 1, 2)) == expected_center);
    CHECK(preimages_bruteforce(A, pt(1, 2, 1, 2)) == expected_center);
}

TEST_CASE("preimages: covering degree and membership on random points") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        RationalTorusPoint y = random_point(rng);
        auto pre = preimages(A, y);
        CHECK(pre.size() == 2);  // |det A|
        for (const auto& x : pre) CHECK(apply(A, x) == y);
    }
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix2 M = random_hyperbolic_like(rng);
        RationalTorusPoint x = random_point(rng);
        auto pre = preimages(M, apply(M, x));
        CHECK(pre.size() == std::size_t(boost::multiprecision::abs(M.det()).convert_to<long long>()));
        CHECK(pre.count(x) == 1);
    }
}

TEST_CASE("smith_normal_form: factorization invariants on random matrices") {
    std::mt19937_64 rng(13);
    using boost::multiprecision::abs;
    for (int trial = 0; trial < 300; ++trial) {
        IntMatrix2 M = random_hyperbolic_like(rng);
        SmithForm s = smith_normal_form(M);
        CHECK(abs(s.U.det()) == 1);
        CHECK(abs(s.V.det()) == 1);
        IntMatrix2 D = s.U * M * s.V;
        CHECK(D.b == 0);
        CHECK(D.c == 0);
        CHECK(D.a == s.d1);
        CHECK(D.d == s.d2);
        CHECK(s.d1 >= 0);
        CHECK(s.d2 % s.d1 == 0);
        CHECK(s.d1 * s.d2 == abs(M.det()));
    }
}

TEST_CASE("solve_congruence: fixed points of A") {
    auto fix = solve_congruence(A, 1, CongruenceSign::plus);
    std::set<RationalTorusPoint> expected{pt(0, 1, 0, 1), pt(1, 2, 1, 2)};
    CHECK(fix == expected);
    CHECK(fix.size() == 2);  // |det(A - I)|
    CHECK(solve_congruence_by_enumeration(A, 1, CongruenceSign::plus) == expected);

    auto anti = solve_congruence(A, 1, CongruenceSign::minus);
    CHECK(anti.size() == 8);  // |det(A + I)|
    CHECK(solve_congruence_by_enumeration(A, 1, CongruenceSign::minus) == anti);
}

TEST_CASE("solve_congruence: degenerate congruence is rejected") {
    CHECK_THROWS_AS(solve_congruence(IntMatrix2::identity(), 1, CongruenceSign::plus),
                    DegenerateCongruence);
    CHECK_THROWS_AS(solve_congruence_by_enumeration(IntMatrix2::identity(), 1,
                                                    CongruenceSign::plus),
                    DegenerateCongruence);
}

TEST_CASE("solve_congruence: cardinality equals |det(A^n -+ I)| for n <= 6") {
    using boost::multiprecision::abs;
    for (unsigned n = 1; n <= 6; ++n) {
        for (CongruenceSign sign : {CongruenceSign::plus, CongruenceSign::minus}) {
            auto sols = solve_congruence(A, n, sign);
            BigInt expected = abs(congruence_determinant(A, n, sign));
            CHECK(BigInt(sols.size()) == expected);

            IntMatrix2 An = A.pow(n);
            for (const auto& x : sols) {
                RationalTorusPoint target = (sign == CongruenceSign::plus) ? x : x.negated();
                CHECK(apply(An, x) == target);
            }
        }
    }
}

TEST_CASE("solve_congruence: agrees with the enumeration oracle for n <= 3") {
    for (const IntMatrix2& M : {A, IntMatrix2{3, 1, 1, 1}, IntMatrix2{3, 2, 1, 0}}) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (CongruenceSign sign : {CongruenceSign::plus, CongruenceSign::minus}) {
                CHECK(solve_congruence(M, n, sign) == solve_congruence_by_enumeration(M, n, sign));
            }
        }
    }
}
