#include "lattesda/lattice_dynamics.hpp"

#include <cmath>

namespace lattesda {

EigenFrame eigenframe(const IntMatrix2& M) {
    double tr = M.trace().convert_to<double>();
    double det = M.det().convert_to<double>();
    double disc = tr * tr - 4.0 * det;
    if (disc <= 0.0)
        throw NotHyperbolic("eigenframe: non-real (or repeated) eigenvalues for " + M.to_string());
    double sq = std::sqrt(disc);
    double l1 = 0.5 * (tr + sq);
    double l2 = 0.5 * (tr - sq);
    if (std::fabs(l2) > std::fabs(l1)) std::swap(l1, l2);
    if (std::fabs(std::fabs(l1) - 1.0) < 1e-9 || std::fabs(std::fabs(l2) - 1.0) < 1e-9)
        throw NotHyperbolic("eigenframe: eigenvalue on the unit circle for " + M.to_string());
    if (!(std::fabs(l1) > 1.0 && std::fabs(l2) < 1.0))
        throw NotHyperbolic("eigenframe: no unstable/stable splitting for " + M.to_string());

    Mat2d Md{M.a.convert_to<double>(), M.b.convert_to<double>(),
             M.c.convert_to<double>(), M.d.convert_to<double>()};
    EigenFrame f;
    f.lambda_u = l1;
    f.lambda_s = l2;
    f.e_u = eigenvector_for(Md, l1);
    f.e_s = eigenvector_for(Md, l2);
    return f;
}

std::set<RationalTorusPoint> preimages(const IntMatrix2& M, const RationalTorusPoint& y) {
    BigInt det = M.det();
    if (det == 0) throw std::invalid_argument("preimages: singular matrix");
    IntMatrix2 adj = M.adjugate();

    // x = M^{-1}(y + k) = adj(M)(y + k) / det over a transversal k of Z^2/M Z^2.
    std::set<RationalTorusPoint> out;
    for (const auto& [k1, k2] : coset_representatives(M)) {
        BigInt num1 = y.n1 + k1 * y.d;
        BigInt num2 = y.n2 + k2 * y.d;
        out.insert(RationalTorusPoint::reduced(adj.a * num1 + adj.b * num2,
                                               adj.c * num1 + adj.d * num2, det * y.d));
    }
    return out;
}

BigInt congruence_determinant(const IntMatrix2& M, unsigned n, CongruenceSign sign) {
    IntMatrix2 I = IntMatrix2::identity();
    IntMatrix2 B = (sign == CongruenceSign::plus) ? M.pow(n) - I : M.pow(n) + I;
    return B.det();
}

std::set<RationalTorusPoint> solve_congruence(const IntMatrix2& M, unsigned n,
                                              CongruenceSign sign) {
    IntMatrix2 I = IntMatrix2::identity();
    IntMatrix2 B = (sign == CongruenceSign::plus) ? M.pow(n) - I : M.pow(n) + I;
    if (B.det() == 0)
        throw DegenerateCongruence("solve_congruence: det(M^n -+ I) = 0 for " + M.to_string());

    // B = U^{-1} D V^{-1}, so B x in Z^2 iff D (V^{-1} x) in Z^2: the solutions
    // are x = V (i/d1, j/d2) mod Z^2.
    SmithForm snf = smith_normal_form(B);
    std::set<RationalTorusPoint> out;
    BigInt den = snf.d1 * snf.d2;
    for (BigInt i = 0; i < snf.d1; ++i) {
        for (BigInt j = 0; j < snf.d2; ++j) {
            BigInt y1 = i * snf.d2;  // i/d1 over denominator d1*d2
            BigInt y2 = j * snf.d1;
            out.insert(RationalTorusPoint::reduced(snf.V.a * y1 + snf.V.b * y2,
                                                   snf.V.c * y1 + snf.V.d * y2, den));
        }
    }
    return out;
}

std::set<RationalTorusPoint> solve_congruence_by_enumeration(const IntMatrix2& M, unsigned n,
                                                             CongruenceSign sign) {
    using boost::multiprecision::abs;
    BigInt D = abs(congruence_determinant(M, n, sign));
    if (D == 0)
        throw DegenerateCongruence("solve_congruence_by_enumeration: degenerate congruence");

    IntMatrix2 Mn = M.pow(n);
    std::set<RationalTorusPoint> out;
    for (BigInt i = 0; i < D; ++i) {
        for (BigInt j = 0; j < D; ++j) {
            RationalTorusPoint x = RationalTorusPoint::reduced(i, j, D);
            RationalTorusPoint image = apply(Mn, x);
            RationalTorusPoint target = (sign == CongruenceSign::plus) ? x : x.negated();
            if (image == target) out.insert(x);
        }
    }
    return out;
}

}  // namespace lattesda
