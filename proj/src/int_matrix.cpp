#include "lattesda/int_matrix.hpp"

#include <sstream>

namespace lattesda {

Egcd extended_gcd(BigInt a, BigInt b) {
    // Iterative extended Euclid; g is normalized to be nonnegative.
    BigInt old_r = a, r = b;
    BigInt old_s = 1, s = 0;
    BigInt old_t = 0, t = 1;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

IntMatrix2 IntMatrix2::pow(unsigned n) const {
    IntMatrix2 result = identity();
    IntMatrix2 base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

std::string IntMatrix2::to_string() const {
    std::ostringstream os;
    os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return os.str();
}

namespace {

void swap_rows(IntMatrix2& S, IntMatrix2& U) {
    std::swap(S.a, S.c);
    std::swap(S.b, S.d);
    std::swap(U.a, U.c);
    std::swap(U.b, U.d);
}

void swap_cols(IntMatrix2& S, IntMatrix2& V) {
    std::swap(S.a, S.b);
    std::swap(S.c, S.d);
    std::swap(V.a, V.b);
    std::swap(V.c, V.d);
}

// row1 -= q * row0
void row_op(IntMatrix2& S, IntMatrix2& U, const BigInt& q) {
    S.c -= q * S.a;
    S.d -= q * S.b;
    U.c -= q * U.a;
    U.d -= q * U.b;
}

// col1 -= q * col0
void col_op(IntMatrix2& S, IntMatrix2& V, const BigInt& q) {
    S.b -= q * S.a;
    S.d -= q * S.c;
    V.b -= q * V.a;
    V.d -= q * V.c;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix2& M) {
    IntMatrix2 S = M;
    IntMatrix2 U = IntMatrix2::identity();
    IntMatrix2 V = IntMatrix2::identity();

    using boost::multiprecision::abs;

    auto pivot_nonzero = [&]() {
        // Bring some nonzero entry to position (0,0).
        if (S.a != 0) return true;
        if (S.c != 0) {
            swap_rows(S, U);
            return true;
        }
        if (S.b != 0) {
            swap_cols(S, V);
            return true;
        }
        if (S.d != 0) {
            swap_rows(S, U);
            swap_cols(S, V);
            return true;
        }
        return false;  // zero matrix
    };

    if (pivot_nonzero()) {
        for (;;) {
            // Euclidean reduction of column 0 then row 0 against the pivot.
            while (S.c != 0) {
                BigInt q = S.c / S.a;
                row_op(S, U, q);
                if (S.c != 0) swap_rows(S, U);
            }
            while (S.b != 0) {
                BigInt q = S.b / S.a;
                col_op(S, V, q);
                if (S.b != 0) swap_cols(S, V);
            }
            if (S.c != 0) continue;  // row ops revived the column
            if (S.d % S.a != 0) {
                // Fold row 1 into row 0 to force the divisibility d1 | d2.
                S.a += S.c;  // S.c == 0, no-op on a, kept for symmetry
                S.b += S.d;
                U.a += U.c;
                U.b += U.d;
                continue;
            }
            break;
        }
        // Sign normalization via row scaling (unimodular).
        if (S.a < 0) {
            S.a = -S.a;
            S.b = -S.b;
            U.a = -U.a;
            U.b = -U.b;
        }
        if (S.d < 0) {
            S.c = -S.c;
            S.d = -S.d;
            U.c = -U.c;
            U.d = -U.d;
        }
    }
    return {U, V, S.a, S.d};
}

std::vector<std::pair<BigInt, BigInt>> coset_representatives(const IntMatrix2& M) {
    using boost::multiprecision::abs;
    BigInt det = M.det();
    if (det == 0) throw std::invalid_argument("coset_representatives: singular matrix");

    // Column Hermite form of the lattice spanned by (a,c) and (b,d):
    // combine the two columns so the top row becomes (g, 0).
    Egcd e = extended_gcd(M.a, M.b);
    BigInt h11 = e.g;
    BigInt h22;
    if (h11 == 0) {
        // Top row is zero: lattice = {(0, *)} x span... cannot happen when det != 0
        // unless a = b = 0, which forces det = 0. Guarded above.
        throw std::logic_error("coset_representatives: zero top row with nonzero det");
    }
    h22 = abs(det / h11);

    std::vector<std::pair<BigInt, BigInt>> reps;
    reps.reserve(static_cast<std::size_t>(h11 * h22));
    for (BigInt i = 0; i < h11; ++i)
        for (BigInt j = 0; j < h22; ++j) reps.emplace_back(i, j);
    return reps;
}

}  // namespace lattesda
