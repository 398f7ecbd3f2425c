#pragma once

// The quotient S^2 = T^2 / (x ~ -x). A sphere point stores the canonical
// representative of its class: the lexicographically smaller of x and -x.
// Exact (rational) and numeric (double) variants share the type.

#include "lattesda/int_matrix.hpp"
#include "lattesda/torus_point.hpp"
#include "lattesda/vec2.hpp"

#include <set>
#include <string>
#include <variant>

namespace lattesda {

// Canonical numeric representative in [0,1)^2.
Vec2 canonical_rep(const Vec2& torus_point);

class SpherePoint {
public:
    SpherePoint() : rep_(RationalTorusPoint{}) {}

    static SpherePoint exact(const RationalTorusPoint& x);
    static SpherePoint numeric(const Vec2& x);  // canonicalizes

    bool is_exact() const { return std::holds_alternative<RationalTorusPoint>(rep_); }

    const RationalTorusPoint& rational_rep() const;
    Vec2 numeric_rep() const;  // works for both variants

    SpherePoint to_numeric() const { return numeric(numeric_rep()); }

    bool operator==(const SpherePoint& o) const;
    bool operator<(const SpherePoint& o) const;  // exact variant only

    std::string to_string() const;

private:
    std::variant<RationalTorusPoint, Vec2> rep_;
};

// Quotient map pi: T^2 -> S^2.
SpherePoint project(const RationalTorusPoint& x);

// {x, -x}; a single point exactly at the four 2-torsion classes.
std::set<RationalTorusPoint> fiber(const SpherePoint& s);

// The induced map f with pi . M = f . pi; exact on exact points, numeric on
// numeric points.
SpherePoint induced_apply(const IntMatrix2& M, const SpherePoint& s);

// Distance between classes: min over the two lifts of the torus distance.
double sphere_distance(const Vec2& a, const Vec2& b);

}  // namespace lattesda
