#include "lattesda/pillowcase.hpp"

#include <cmath>
#include <map>

namespace lattesda {

using boost::multiprecision::abs;

namespace {

std::vector<RationalTorusPoint> two_torsion_points() {
    return {RationalTorusPoint::reduced(0, 0, 1), RationalTorusPoint::reduced(1, 0, 2),
            RationalTorusPoint::reduced(0, 1, 2), RationalTorusPoint::reduced(1, 1, 2)};
}

void require_hyperbolic(const IntMatrix2& M) {
    (void)eigenframe(M);  // throws NotHyperbolic
}

}  // namespace

BranchData branch_data(const IntMatrix2& M) {
    BranchData bd;
    for (const auto& t : two_torsion_points()) {
        SpherePoint s = project(t);
        bd.branch_points.insert(s);
        bd.branch_values.insert(induced_apply(M, s));
    }
    return bd;
}

std::set<SpherePoint> critical_points_f(const IntMatrix2& M) {
    if (abs(M.det()) != 2)
        throw UnsupportedDegree("critical_points_f: |det| = 2 required, got " +
                                M.det().convert_to<std::string>());
    std::set<SpherePoint> crit;
    for (const auto& t : two_torsion_points()) {
        for (const auto& x : preimages(M, t)) {
            if (!x.is_two_torsion()) crit.insert(project(x));
        }
    }
    return crit;
}

bool homology_hyperbolic(const IntMatrix2& M) {
    BigInt tr = M.trace();
    BigInt det = M.det();
    BigInt disc = tr * tr - 4 * det;
    if (disc < 0) return det != 1;  // complex pair has modulus sqrt(det)
    // Real eigenvalues: modulus 1 means lambda = +-1, i.e. det(M -+ I) = 0.
    IntMatrix2 I = IntMatrix2::identity();
    return (M - I).det() != 0 && (M + I).det() != 0;
}

namespace {

OrbitListing orbit_until_repeat(const IntMatrix2& M, const SpherePoint& start) {
    OrbitListing listing;
    listing.start = start;
    std::map<SpherePoint, std::size_t> seen;
    SpherePoint p = start;
    for (;;) {
        auto it = seen.find(p);
        if (it != seen.end()) {
            listing.orbit.push_back(p);  // close the loop: repeat is recorded
            listing.cycle_start = it->second;
            return listing;
        }
        seen.emplace(p, listing.orbit.size());
        listing.orbit.push_back(p);
        p = induced_apply(M, p);
    }
}

}  // namespace

LattesReport verify_lattes(const IntMatrix2& M) {
    require_hyperbolic(M);
    LattesReport rep;
    rep.crit_f = critical_points_f(M);  // throws UnsupportedDegree if needed

    BranchData bd = branch_data(M);
    for (const auto& c : rep.crit_f) rep.crit_values_f.insert(induced_apply(M, c));

    auto subset_of = [](const std::set<SpherePoint>& a, const std::set<SpherePoint>& b) {
        for (const auto& x : a)
            if (!b.count(x)) return false;
        return true;
    };

    rep.ram = subset_of(rep.crit_values_f, bd.branch_points);
    rep.inv = subset_of(bd.branch_values, bd.branch_points);
    rep.crit = true;
    for (const auto& c : rep.crit_f)
        if (bd.branch_points.count(c)) rep.crit = false;

    // Non-periodicity by exhaustive orbit enumeration from each critical point.
    rep.nonperiodic = true;
    for (const auto& c : rep.crit_f) {
        OrbitListing o = orbit_until_repeat(M, c);
        // c is periodic iff the detected cycle contains c, i.e. cycle_start == 0.
        if (o.cycle_start == 0) rep.nonperiodic = false;
    }

    for (const auto& v : rep.crit_values_f) rep.postcritical_orbits.push_back(orbit_until_repeat(M, v));
    for (const auto& b : bd.branch_points) rep.branch_orbit.emplace_back(b, induced_apply(M, b));

    rep.homology_hyperbolic = homology_hyperbolic(M);

    // Topological-polynomial obstruction: look for a fixed point that is its
    // own full preimage.
    rep.has_totally_invariant_fixed_point = false;
    SphereFixedCount fc = sphere_fixed_count_detail(M, 1);
    std::set<SpherePoint> fixed;
    for (const auto& x : fc.fix_plus) fixed.insert(project(x));
    for (const auto& x : fc.fix_minus) fixed.insert(project(x));
    for (const auto& s : fixed) {
        std::set<SpherePoint> pre;
        for (const auto& lift : fiber(s))
            for (const auto& x : preimages(M, lift)) pre.insert(project(x));
        if (pre.size() == 1 && *pre.begin() == s) rep.has_totally_invariant_fixed_point = true;
    }
    return rep;
}

SphereFixedCount sphere_fixed_count_detail(const IntMatrix2& M, unsigned n) {
    require_hyperbolic(M);
    SphereFixedCount out;
    out.fix_plus = solve_congruence(M, n, CongruenceSign::plus);
    out.fix_minus = solve_congruence(M, n, CongruenceSign::minus);
    out.card_plus = abs(congruence_determinant(M, n, CongruenceSign::plus));
    out.card_minus = abs(congruence_determinant(M, n, CongruenceSign::minus));

    std::size_t inter = 0;
    for (const auto& x : out.fix_plus)
        if (out.fix_minus.count(x)) ++inter;
    out.intersection_size = inter;

    // Counting constants over the 2-torsion by exact enumeration.
    std::size_t torsion = 0;
    for (const auto& x : out.fix_plus)
        if (x.is_two_torsion()) ++torsion;
    for (const auto& x : out.fix_minus)
        if (x.is_two_torsion() && !out.fix_plus.count(x)) ++torsion;
    out.torsion_in_union = torsion;

    std::size_t union_size = out.fix_plus.size() + out.fix_minus.size() - inter;
    out.sphere_count = (union_size - torsion) / 2 + torsion;
    return out;
}

std::size_t sphere_fixed_count(const IntMatrix2& M, unsigned n) {
    return sphere_fixed_count_detail(M, n).sphere_count;
}

std::size_t sphere_fixed_count_by_enumeration(const IntMatrix2& M, unsigned n) {
    std::set<SpherePoint> classes;
    for (const auto& x : solve_congruence_by_enumeration(M, n, CongruenceSign::plus))
        classes.insert(project(x));
    for (const auto& x : solve_congruence_by_enumeration(M, n, CongruenceSign::minus))
        classes.insert(project(x));
    return classes.size();
}

std::vector<CensusRow> periodic_census(const IntMatrix2& M, unsigned n_max) {
    std::vector<CensusRow> rows;
    for (unsigned n = 1; n <= n_max; ++n) {
        SphereFixedCount fc = sphere_fixed_count_detail(M, n);
        CensusRow row;
        row.n = n;
        row.det_minus = fc.card_plus;    // |det(M^n - I)|
        row.det_plus = fc.card_minus;    // |det(M^n + I)|
        row.torus_count = fc.fix_plus.size() + fc.fix_minus.size() - fc.intersection_size;
        row.sphere_count = fc.sphere_count;
        row.log_rate = std::log(static_cast<double>(fc.sphere_count)) / n;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lattesda
