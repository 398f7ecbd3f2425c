#include "lattesda/sphere.hpp"

#include <sstream>

namespace lattesda {

Vec2 canonical_rep(const Vec2& torus_point) {
    Vec2 x = wrap_unit(torus_point);
    Vec2 nx = wrap_unit(Vec2{-x.x, -x.y});
    if (nx.x < x.x || (nx.x == x.x && nx.y < x.y)) return nx;
    return x;
}

SpherePoint SpherePoint::exact(const RationalTorusPoint& x) {
    RationalTorusPoint neg = x.negated();
    SpherePoint s;
    s.rep_ = (neg < x) ? neg : x;
    return s;
}

SpherePoint SpherePoint::numeric(const Vec2& x) {
    SpherePoint s;
    s.rep_ = canonical_rep(x);
    return s;
}

const RationalTorusPoint& SpherePoint::rational_rep() const {
    if (!is_exact())
        throw std::logic_error("SpherePoint: exact representative requested from numeric variant");
    return std::get<RationalTorusPoint>(rep_);
}

Vec2 SpherePoint::numeric_rep() const {
    if (is_exact()) {
        const auto& r = std::get<RationalTorusPoint>(rep_);
        return {r.x1(), r.x2()};
    }
    return std::get<Vec2>(rep_);
}

bool SpherePoint::operator==(const SpherePoint& o) const {
    if (is_exact() && o.is_exact())
        return std::get<RationalTorusPoint>(rep_) == std::get<RationalTorusPoint>(o.rep_);
    Vec2 a = numeric_rep(), b = o.numeric_rep();
    return a.x == b.x && a.y == b.y;
}

bool SpherePoint::operator<(const SpherePoint& o) const {
    if (is_exact() && o.is_exact())
        return std::get<RationalTorusPoint>(rep_) < std::get<RationalTorusPoint>(o.rep_);
    Vec2 a = numeric_rep(), b = o.numeric_rep();
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

std::string SpherePoint::to_string() const {
    if (is_exact()) return "[" + std::get<RationalTorusPoint>(rep_).to_string() + "]";
    Vec2 v = std::get<Vec2>(rep_);
    std::ostringstream os;
    os << "[(" << v.x << ", " << v.y << ")]";
    return os.str();
}

SpherePoint project(const RationalTorusPoint& x) { return SpherePoint::exact(x); }

std::set<RationalTorusPoint> fiber(const SpherePoint& s) {
    const RationalTorusPoint& x = s.rational_rep();
    return {x, x.negated()};
}

SpherePoint induced_apply(const IntMatrix2& M, const SpherePoint& s) {
    if (s.is_exact()) return SpherePoint::exact(apply(M, s.rational_rep()));
    Vec2 x = s.numeric_rep();
    Mat2d Md{M.a.convert_to<double>(), M.b.convert_to<double>(),
             M.c.convert_to<double>(), M.d.convert_to<double>()};
    return SpherePoint::numeric(Md * x);
}

double sphere_distance(const Vec2& a, const Vec2& b) {
    return std::min(torus_distance(a, b), torus_distance(a, Vec2{-b.x, -b.y}));
}

}  // namespace lattesda
