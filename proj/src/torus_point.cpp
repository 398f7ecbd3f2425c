#include "lattesda/torus_point.hpp"

#include <sstream>

namespace lattesda {

using boost::multiprecision::gcd;

RationalTorusPoint RationalTorusPoint::reduced(BigInt num1, BigInt num2, BigInt den) {
    if (den == 0) throw std::invalid_argument("RationalTorusPoint: zero denominator");
    if (den < 0) {
        den = -den;
        num1 = -num1;
        num2 = -num2;
    }
    num1 = mod_floor(num1, den);
    num2 = mod_floor(num2, den);
    BigInt g = gcd(gcd(num1, num2), den);
    RationalTorusPoint p;
    p.n1 = num1 / g;
    p.n2 = num2 / g;
    p.d = den / g;
    return p;
}

RationalTorusPoint RationalTorusPoint::from_fractions(const BigInt& a1, const BigInt& b1,
                                                      const BigInt& a2, const BigInt& b2) {
    if (b1 == 0 || b2 == 0) throw std::invalid_argument("RationalTorusPoint: zero denominator");
    BigInt den = b1 / gcd(b1, b2) * b2;  // lcm up to sign
    if (den < 0) den = -den;
    return reduced(a1 * (den / b1), a2 * (den / b2), den);
}

double RationalTorusPoint::x1() const {
    return n1.convert_to<double>() / d.convert_to<double>();
}

double RationalTorusPoint::x2() const {
    return n2.convert_to<double>() / d.convert_to<double>();
}

std::string RationalTorusPoint::to_string() const {
    std::ostringstream os;
    os << "(" << n1 << "/" << d << ", " << n2 << "/" << d << ")";
    return os.str();
}

RationalTorusPoint apply(const IntMatrix2& M, const RationalTorusPoint& x) {
    return RationalTorusPoint::reduced(M.a * x.n1 + M.b * x.n2,
                                       M.c * x.n1 + M.d * x.n2, x.d);
}

}  // namespace lattesda
