#pragma once

// Exact points of T^2 = R^2/Z^2 with reduced rational coordinates.

#include "lattesda/int_matrix.hpp"

#include <string>

namespace lattesda {

// Coordinates (n1/d, n2/d) with 0 <= n1, n2 < d and gcd(n1, n2, d) = 1.
// The origin is (0, 0) with d = 1. Equality is componentwise on the
// reduced form, so value semantics give exact set membership.
struct RationalTorusPoint {
    BigInt n1{0}, n2{0}, d{1};

    RationalTorusPoint() = default;

    // Reduce (num1/den, num2/den) mod Z^2 to canonical form.
    static RationalTorusPoint reduced(BigInt num1, BigInt num2, BigInt den);

    // Build from two independent fractions a1/b1, a2/b2.
    static RationalTorusPoint from_fractions(const BigInt& a1, const BigInt& b1,
                                             const BigInt& a2, const BigInt& b2);

    RationalTorusPoint negated() const { return reduced(-n1, -n2, d); }

    bool is_two_torsion() const { return (2 * n1) % d == 0 && (2 * n2) % d == 0; }

    double x1() const;
    double x2() const;

    bool operator==(const RationalTorusPoint& o) const {
        return n1 == o.n1 && n2 == o.n2 && d == o.d;
    }
    bool operator!=(const RationalTorusPoint& o) const { return !(*this == o); }

    // Lexicographic order on the real values (n1/d, n2/d); exact.
    bool operator<(const RationalTorusPoint& o) const {
        BigInt lhs = n1 * o.d, rhs = o.n1 * d;
        if (lhs != rhs) return lhs < rhs;
        return n2 * o.d < o.n2 * d;
    }

    std::string to_string() const;
};

// M * x reduced mod Z^2; exact and total.
RationalTorusPoint apply(const IntMatrix2& M, const RationalTorusPoint& x);

}  // namespace lattesda
