#pragma once

#include <map>
#include <string>
#include <vector>

#include "seidelskew/bigint.hpp"
#include "seidelskew/char_poly.hpp"
#include "seidelskew/errors.hpp"
#include "seidelskew/hadamard.hpp"
#include "seidelskew/int_poly.hpp"
#include "seidelskew/tournament.hpp"

namespace seidelskew {

enum class Condition { DRT_SEIDEL, THM1_SEIDEL, THM3_ADJ, DRT_COMBINATORIAL, SKEW_HADAMARD };

inline const char* condition_name(Condition c) {
    switch (c) {
        case Condition::DRT_SEIDEL: return "DRT_SEIDEL";
        case Condition::THM1_SEIDEL: return "THM1_SEIDEL";
        case Condition::THM3_ADJ: return "THM3_ADJ";
        case Condition::DRT_COMBINATORIAL: return "DRT_COMBINATORIAL";
        case Condition::SKEW_HADAMARD: return "SKEW_HADAMARD";
    }
    return "UNKNOWN";
}

/// Machine-checkable verdict for one named spectrum condition. Every report
/// carries the polynomial actually computed, the target it was compared
/// against, and the exact auxiliary vectors the verdict rests on, so a
/// failing certificate is evidence, not just a boolean.
struct CertificateReport {
    Condition condition = Condition::DRT_SEIDEL;
    bool pass = false;
    bool rational = false;  // polynomials carried as exact rationals
    IntPoly computed_int;
    IntPoly target_int;
    RatPoly computed_rat;
    RatPoly target_rat;
    std::map<std::string, std::vector<BigInt>> auxiliary;
    std::string failure_reason;
};

namespace detail {

inline std::vector<BigInt> mat_vec_ones(const Matrix<BigInt>& m) {
    std::vector<BigInt> out(m.rows(), BigInt(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i] += m(i, j);
    return out;
}

}  // namespace detail

/// -x (x^2 - n)^{(n-1)/2}, the Seidel characteristic polynomial of a doubly
/// regular tournament of odd size n.
inline IntPoly drt_seidel_target(int n) {
    const IntPoly quad({BigInt(-n), BigInt(0), BigInt(1)});
    return IntPoly({BigInt(0), BigInt(-1)}) * quad.pow((n - 1) / 2);
}

/// (x^2 - 1)(x^2 - n)^{(n-3)/2} for a tournament of even size n - 1: the
/// Seidel spectrum is {sqrt(n), 1, -1, -sqrt(n)} with multiplicities
/// ((n-3)/2, 1, 1, (n-3)/2), all encoded by the polynomial.
inline IntPoly thm1_seidel_target(int n) {
    const IntPoly quad({BigInt(-n), BigInt(0), BigInt(1)});
    return IntPoly({BigInt(-1), BigInt(0), BigInt(1)}) * quad.pow((n - 3) / 2);
}

/// (-1)^{n-1} (x^2 + x + (n+1)/4)^{(n-3)/2} (x^2 - ((n-3)/2) x - (n-3)/4):
/// the adjacency characteristic polynomial matching thm1_seidel_target.
/// The two algebraically conjugate eigenvalue pairs combine into rational
/// quadratics, which is why this one target lives over the rationals.
inline RatPoly thm3_adjacency_target(int n) {
    const RatPoly conj_pair({BigRat(n + 1, 4), BigRat(1), BigRat(1)});
    const RatPoly real_pair({BigRat(-(n - 3), 4), BigRat(-(n - 3), 2), BigRat(1)});
    RatPoly target = conj_pair.pow((n - 3) / 2) * real_pair;
    if ((n - 1) % 2 != 0) target = -target;
    return target;
}

/// Certifies the doubly-regular spectrum condition exactly: P_S must equal
/// -x (x^2 - n)^{(n-1)/2} coefficientwise, and K*1 must be the zero vector.
/// The second identity is regularity, which pins the main angles to (0,1,0):
/// the all-ones vector then lies entirely inside the 0-eigenspace of S.
inline CertificateReport certify_drt_spectrum(const Tournament& t) {
    CertificateReport r;
    r.condition = Condition::DRT_SEIDEL;
    const int n = t.size();
    if (n % 2 == 0) {
        r.failure_reason = "size must be odd";
        return r;
    }
    r.computed_int = seidel_char_poly(t);
    r.target_int = drt_seidel_target(n);
    const auto k1 = detail::mat_vec_ones(skew_matrix<BigInt>(t));
    r.auxiliary["K1"] = k1;
    const bool poly_ok = r.computed_int == r.target_int;
    bool regular = true;
    for (const auto& v : k1)
        if (v != 0) regular = false;
    r.pass = poly_ok && regular;
    if (!poly_ok)
        r.failure_reason = "Seidel characteristic polynomial differs from -x(x^2-n)^((n-1)/2)";
    else if (!regular)
        r.failure_reason = "K*1 != 0 (tournament is not regular)";
    return r;
}

/// Certifies the deleted-vertex spectrum condition exactly, for a tournament
/// of even size m with n = m + 1:
///   (a) P_S == (x^2 - 1)(x^2 - n)^{(n-3)/2}, and
///   (b) K^2 * 1 == -1 entrywise (equivalently S^2 * 1 = 1).
/// Together (a) and (b) force the main angles (0, 1/sqrt2, 1/sqrt2, 0):
/// decompose 1 = sum of eigenspace components u_i; (b) kills the components
/// with eigenvalue^2 = n, so the +-1 components carry all the weight, and
/// 1^T S 1 = 0 (skew symmetry of K) makes their norms equal, giving
/// beta^2 = 1/2 on each. The numeric module cross-checks this on every
/// instance the search harness finds.
inline CertificateReport certify_thm1_spectrum(const Tournament& t) {
    CertificateReport r;
    r.condition = Condition::THM1_SEIDEL;
    const int m = t.size();
    if (m < 2 || m % 2 != 0) {
        r.failure_reason = "size must be even and at least 2";
        return r;
    }
    const int n = m + 1;
    const auto k = skew_matrix<BigInt>(t);
    auto k2_1 = detail::mat_vec_ones(detail::mul(k, k));
    r.auxiliary["K2_1"] = k2_1;
    bool aux_ok = true;
    for (const auto& v : k2_1)
        if (v != -1) aux_ok = false;
    if (!aux_ok) {
        // The polynomial comparison cannot rescue a failed angle identity;
        // skip the expensive part and report an empty computed polynomial.
        r.target_int = thm1_seidel_target(n);
        r.failure_reason = "K^2*1 != -1 (projection of 1 onto the +-sqrt(n) eigenspaces is nonzero)";
        return r;
    }
    r.computed_int = seidel_char_poly(t);
    r.target_int = thm1_seidel_target(n);
    r.pass = r.computed_int == r.target_int;
    if (!r.pass)
        r.failure_reason = "Seidel characteristic polynomial differs from (x^2-1)(x^2-n)^((n-3)/2)";
    return r;
}

/// Certifies the adjacency-side condition exactly over the rationals; this is
/// the equivalent counterpart of certify_thm1_spectrum and is computed by an
/// independent route (P_A instead of P_S, no auxiliary vector).
inline CertificateReport certify_thm3_adjacency(const Tournament& t) {
    CertificateReport r;
    r.condition = Condition::THM3_ADJ;
    r.rational = true;
    const int m = t.size();
    if (m < 2 || m % 2 != 0) {
        r.failure_reason = "size must be even and at least 2";
        return r;
    }
    const int n = m + 1;
    r.computed_rat = to_rational(adjacency_char_poly(t));
    r.target_rat = thm3_adjacency_target(n);
    r.pass = r.computed_rat == r.target_rat;
    if (!r.pass) r.failure_reason = "adjacency characteristic polynomial differs from the target";
    return r;
}

/// Ground-truth combinatorial certificate: double regularity checked by
/// counting common out-neighbours pair by pair.
inline CertificateReport certify_drt_combinatorial(const Tournament& t) {
    CertificateReport r;
    r.condition = Condition::DRT_COMBINATORIAL;
    const auto s = score_vector(t);
    std::vector<BigInt> scores(s.begin(), s.end());
    r.auxiliary["scores"] = scores;
    r.pass = is_doubly_regular(t);
    if (!r.pass)
        r.failure_reason = is_regular(t) ? "common out-neighbour count varies across pairs"
                                         : "tournament is not regular";
    return r;
}

/// Certifies H H^T = nI and H + H^T = 2I exactly over the integers. The
/// Gram diagonal is kept as evidence; both identities are reported separately
/// when they fail.
inline CertificateReport certify_skew_hadamard(const SkewHadamard& h) {
    CertificateReport r;
    r.condition = Condition::SKEW_HADAMARD;
    const int n = h.size();
    bool gram_ok = true;
    bool skew_ok = true;
    std::vector<BigInt> gram_diag(n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            long long dot = 0;
            for (int k = 0; k < n; ++k) dot += static_cast<long long>(h.entry(x, k)) * h.entry(y, k);
            if (x == y) gram_diag[x] = dot;
            if (dot != (x == y ? static_cast<long long>(n) : 0)) gram_ok = false;
            if (h.entry(x, y) + h.entry(y, x) != (x == y ? 2 : 0)) skew_ok = false;
        }
    }
    r.auxiliary["gram_diag"] = gram_diag;
    r.pass = gram_ok && skew_ok;
    if (!r.pass)
        r.failure_reason = !gram_ok && !skew_ok ? "both H H^T = nI and H + H^T = 2I fail"
                           : !gram_ok           ? "H H^T != nI"
                                                : "H + H^T != 2I";
    return r;
}

/// tr(K K^T) == n^2 - n, an identity every tournament satisfies; exercised as
/// a self-test of the data types and used as a cheap invariant probe.
inline bool trace_identity_check(const Tournament& t) {
    const int n = t.size();
    const auto k = skew_matrix<long long>(t);
    long long tr = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) tr += k(x, y) * k(x, y);
    return tr == static_cast<long long>(n) * n - n;
}

}  // namespace seidelskew
