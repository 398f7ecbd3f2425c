#pragma once

// Eigen-structure, preimages and periodic-point congruences for integer
// matrix endomorphisms of T^2.

#include "lattesda/int_matrix.hpp"
#include "lattesda/torus_point.hpp"
#include "lattesda/vec2.hpp"

#include <set>
#include <stdexcept>

namespace lattesda {

struct NotHyperbolic : std::runtime_error {
    explicit NotHyperbolic(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateCongruence : std::runtime_error {
    explicit DegenerateCongruence(const std::string& what) : std::runtime_error(what) {}
};

// Unstable/stable splitting of a hyperbolic matrix: |lambda_u| > 1 > |lambda_s|,
// unit eigenvectors, lambda_u * lambda_s = det.
struct EigenFrame {
    double lambda_u{0.0}, lambda_s{0.0};
    Vec2 e_u, e_s;
};

// Throws NotHyperbolic if the eigenvalues are non-real or some modulus is
// within 1e-9 of 1.
EigenFrame eigenframe(const IntMatrix2& M);

// The |det(M)| solutions of M*x == y (mod Z^2), exact.
std::set<RationalTorusPoint> preimages(const IntMatrix2& M, const RationalTorusPoint& y);

enum class CongruenceSign { plus, minus };

// Full solution set of M^n * x == sign*x (mod Z^2) via the Smith form of
// M^n -+ I; cardinality |det(M^n -+ I)|. Throws DegenerateCongruence when
// that determinant vanishes.
std::set<RationalTorusPoint> solve_congruence(const IntMatrix2& M, unsigned n,
                                              CongruenceSign sign);

// Independent cross-check: enumerate the grid with denominator
// |det(M^n -+ I)| and keep genuine solutions under exact apply.
// Cost O(det^2); intended for small n.
std::set<RationalTorusPoint> solve_congruence_by_enumeration(const IntMatrix2& M, unsigned n,
                                                             CongruenceSign sign);

// det(M^n - I) for sign=plus, det(M^n + I) for sign=minus.
BigInt congruence_determinant(const IntMatrix2& M, unsigned n, CongruenceSign sign);

}  // namespace lattesda
