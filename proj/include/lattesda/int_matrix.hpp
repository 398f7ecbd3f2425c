#pragma once

// Exact 2x2 integer matrices with arbitrary-precision entries, plus the
// lattice normal forms (Hermite, Smith) used to enumerate congruence
// solutions on the torus.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lattesda {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += boost::multiprecision::abs(m);
    return r;
}

// Extended gcd: returns g = gcd(a,b) >= 0 with x*a + y*b = g.
struct Egcd {
    BigInt g, x, y;
};
Egcd extended_gcd(BigInt a, BigInt b);

// Row-major [[a, b], [c, d]].
struct IntMatrix2 {
    BigInt a{0}, b{0}, c{0}, d{0};

    IntMatrix2() = default;
    IntMatrix2(BigInt a_, BigInt b_, BigInt c_, BigInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static IntMatrix2 identity() { return {1, 0, 0, 1}; }

    BigInt det() const { return a * d - b * c; }
    BigInt trace() const { return a + d; }

    // adj(M) with M * adj(M) = det(M) * I.
    IntMatrix2 adjugate() const { return {d, -b, -c, a}; }

    IntMatrix2 operator*(const IntMatrix2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    IntMatrix2 operator+(const IntMatrix2& o) const {
        return {a + o.a, b + o.b, c + o.c, d + o.d};
    }
    IntMatrix2 operator-(const IntMatrix2& o) const {
        return {a - o.a, b - o.b, c - o.c, d - o.d};
    }
    bool operator==(const IntMatrix2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    IntMatrix2 pow(unsigned n) const;

    std::string to_string() const;
};

// Smith normal form U*M*V = diag(d1, d2) with U, V unimodular and
// 0 <= d1, d1 | d2 (d2 >= 0 whenever det != 0).
struct SmithForm {
    IntMatrix2 U, V;
    BigInt d1, d2;
};
SmithForm smith_normal_form(const IntMatrix2& M);

// A transversal of Z^2 / M*Z^2, computed from the column Hermite form of M.
// Requires det(M) != 0; the result has exactly |det(M)| elements.
std::vector<std::pair<BigInt, BigInt>> coset_representatives(const IntMatrix2& M);

}  // namespace lattesda
