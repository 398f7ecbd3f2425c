#pragma once

// Critical structure of the induced sphere map, the branch-point lemma
// verifiers, and the periodic-point census on the sphere.

#include "lattesda/lattice_dynamics.hpp"
#include "lattesda/sphere.hpp"

#include <set>
#include <vector>

namespace lattesda {

struct UnsupportedDegree : std::runtime_error {
    explicit UnsupportedDegree(const std::string& what) : std::runtime_error(what) {}
};

// The four 2-torsion classes (critical points of pi) and their f-images.
struct BranchData {
    std::set<SpherePoint> branch_points;
    std::set<SpherePoint> branch_values;
};
BranchData branch_data(const IntMatrix2& M);

// Critical points of f: projections of the non-2-torsion solutions of
// M*x in (2-torsion). Exactly two points when |det M| = 2; throws
// UnsupportedDegree otherwise.
std::set<SpherePoint> critical_points_f(const IntMatrix2& M);

// One orbit listing per starting point, ending where the detected cycle
// re-enters (orbit[cycle_start] is the first repeated point).
struct OrbitListing {
    SpherePoint start;
    std::vector<SpherePoint> orbit;  // start, f(start), ..., first repeat
    std::size_t cycle_start{0};      // index in orbit of the repeated point
};

struct LattesReport {
    std::set<SpherePoint> crit_f;
    std::set<SpherePoint> crit_values_f;
    std::vector<OrbitListing> postcritical_orbits;           // one per critical value
    std::vector<std::pair<SpherePoint, SpherePoint>> branch_orbit;  // b -> f(b)
    bool ram{false};           // f(Crit f) subset of pi(Crit pi)
    bool crit{false};          // Crit f disjoint from pi(Crit pi)
    bool inv{false};           // f(pi(Crit pi)) subset of pi(Crit pi)
    bool nonperiodic{false};   // no critical point of f is periodic
    bool homology_hyperbolic{false};
    // True iff some fixed point p of f has f^{-1}(p) = {p} (a topological
    // polynomial would need one; the lemmas rule it out).
    bool has_totally_invariant_fixed_point{true};

    bool all_pass() const {
        return ram && crit && inv && nonperiodic && homology_hyperbolic &&
               !has_totally_invariant_fixed_point;
    }
};

// Exact orbit enumeration of all the lemma checks; requires M hyperbolic
// with |det M| = 2.
LattesReport verify_lattes(const IntMatrix2& M);

// True iff no eigenvalue of M has modulus 1 (exact integer test).
bool homology_hyperbolic(const IntMatrix2& M);

// Census of fixed points of the n-th iterate of f on the sphere.
struct SphereFixedCount {
    std::set<RationalTorusPoint> fix_plus;   // M^n x ==  x
    std::set<RationalTorusPoint> fix_minus;  // M^n x == -x
    BigInt card_plus;                        // |det(M^n - I)| = expected |fix_plus|
    BigInt card_minus;                       // |det(M^n + I)| = expected |fix_minus|
    std::size_t intersection_size{0};
    std::size_t torsion_in_union{0};
    std::size_t sphere_count{0};             // |(fix_plus U fix_minus) / +-|
};
SphereFixedCount sphere_fixed_count_detail(const IntMatrix2& M, unsigned n);
std::size_t sphere_fixed_count(const IntMatrix2& M, unsigned n);

// Cross-check: enumerate both congruence grids, project, deduplicate.
std::size_t sphere_fixed_count_by_enumeration(const IntMatrix2& M, unsigned n);

struct CensusRow {
    unsigned n{0};
    BigInt det_minus;         // |det(M^n - I)|
    BigInt det_plus;          // |det(M^n + I)|
    std::size_t torus_count;  // |Fix+ U Fix-|
    std::size_t sphere_count; // N_n f
    double log_rate;          // (1/n) log N_n f
};
std::vector<CensusRow> periodic_census(const IntMatrix2& M, unsigned n_max);

}  // namespace lattesda
