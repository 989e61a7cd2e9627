#pragma once

#include <string>
#include <vector>

#include "seidelskew/bigint.hpp"
#include "seidelskew/errors.hpp"
#include "seidelskew/int_poly.hpp"
#include "seidelskew/matrix.hpp"
#include "seidelskew/tournament.hpp"

namespace seidelskew {

/// Exact characteristic polynomial P_M(x) = det(M - xI) of an integer matrix
/// via the Faddeev-LeVerrier recurrence. Every interior division is exact
/// over the integers; a nonzero remainder indicates memory corruption or an
/// algorithmic bug and raises immediately.
inline IntPoly char_poly_int(const detail::Matrix<BigInt>& m) {
    const int n = m.rows();
    if (n != m.cols()) throw Error("char_poly_int requires a square matrix");
    if (n == 0) return IntPoly::constant(BigInt(1));

    // Monic coefficients of det(xI - M): a[n] = 1, then
    //   B_1 = M,               a[n-1] = -tr(B_1)
    //   B_k = M(B_{k-1} + a[n-k+1] I),  a[n-k] = -tr(B_k)/k.
    std::vector<BigInt> a(static_cast<std::size_t>(n) + 1, BigInt(0));
    a[n] = 1;
    detail::Matrix<BigInt> b = m;
    a[n - 1] = -detail::trace(b);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) b(i, i) += a[n - k + 1];
        b = detail::mul(m, b);
        BigInt q, r;
        divide_qr(-detail::trace(b), BigInt(k), q, r);
        if (r != 0) throw Error("Faddeev-LeVerrier division left a remainder at step " + std::to_string(k));
        a[n - k] = q;
    }

    // det(M - xI) = (-1)^n det(xI - M).
    if (n % 2 != 0)
        for (auto& v : a) v = -v;
    return IntPoly(std::move(a));
}

/// P_A(x) of the 0/1 adjacency matrix, exact.
inline IntPoly adjacency_char_poly(const Tournament& t) {
    return char_poly_int(adjacency_matrix<BigInt>(t));
}

/// P_S(x) of the Seidel matrix S = iK, computed without complex arithmetic:
/// P_S(x) = i^n p_K(-ix) for p_K the characteristic polynomial of the skew
/// part K. Coefficientwise, the degree-j coefficient of p_K survives exactly
/// when n - j is even, picking up the sign (-1)^j (-1)^{(n+j)/2}; when n - j
/// is odd it must vanish by skew-symmetry of K.
inline IntPoly seidel_char_poly(const Tournament& t) {
    const int n = t.size();
    const IntPoly pk = char_poly_int(skew_matrix<BigInt>(t));
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (int j = 0; j <= n; ++j) {
        const BigInt& cj = pk.coeff(j);
        if ((n - j) % 2 != 0) {
            if (cj != 0)
                throw ImaginaryResidue("skew char poly has a nonzero coefficient at degree " +
                                       std::to_string(j) + " for size " + std::to_string(n));
            continue;
        }
        const bool negate = ((j % 2 != 0) != (((n + j) / 2) % 2 != 0));
        c[static_cast<std::size_t>(j)] = negate ? BigInt(-cj) : cj;
    }
    return IntPoly(std::move(c));
}

}  // namespace seidelskew
