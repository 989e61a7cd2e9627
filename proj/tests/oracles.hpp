#pragma once

// Independent oracles for the test suite. Everything here deliberately takes
// a different computational route from the library: determinants come from LU
// or Bareiss elimination, never from Faddeev-LeVerrier, so agreement between
// the two is meaningful evidence.

#include <complex>
#include <cstdlib>
#include <vector>

#include <seidelskew.hpp>

namespace oracles {

using seidelskew::BigInt;
using seidelskew::Tournament;
using Cplx = std::complex<double>;
using CMat = std::vector<std::vector<Cplx>>;
using ZMat = std::vector<std::vector<BigInt>>;

/// Determinant via LU with partial pivoting.
inline Cplx lu_det(CMat m) {
    const int n = static_cast<int>(m.size());
    Cplx det(1.0, 0.0);
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(m[r][c]) > std::abs(m[pivot][c])) pivot = r;
        if (std::abs(m[pivot][c]) == 0.0) return Cplx(0.0, 0.0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            const Cplx f = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

/// Exact integer determinant via Bareiss fraction-free elimination.
inline BigInt bareiss_det(ZMat m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;  // exact by Bareiss
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

inline CMat seidel_complex(const Tournament& t) {
    const int n = t.size();
    CMat s(n, std::vector<Cplx>(n, Cplx(0.0, 0.0)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) s[x][y] = t.arc(x, y) ? Cplx(0.0, 1.0) : Cplx(0.0, -1.0);
    return s;
}

inline ZMat adjacency_big(const Tournament& t) {
    const int n = t.size();
    ZMat a(n, std::vector<BigInt>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && t.arc(x, y)) a[x][y] = 1;
    return a;
}

/// det(M - xI) for an exact integer matrix and integer sample point.
inline BigInt shifted_det(ZMat m, const BigInt& x) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= x;
    return bareiss_det(std::move(m));
}

/// det(S - xI) for the complex Seidel matrix at a complex sample.
inline Cplx seidel_shifted_det(const Tournament& t, Cplx x) {
    CMat s = seidel_complex(t);
    for (std::size_t i = 0; i < s.size(); ++i) s[i][i] -= x;
    return lu_det(std::move(s));
}

/// det(S + cJ - xI): the left-hand side of the rank-one-update identity.
inline Cplx rank_one_shifted_det(const Tournament& t, Cplx c, Cplx x) {
    CMat s = seidel_complex(t);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) s[i][j] += c;
        s[i][i] -= x;
    }
    return lu_det(std::move(s));
}

/// Path to the CLI binary under test, injected by CTest.
inline const char* cli_path() { return std::getenv("SEIDELSKEW_CLI"); }

}  // namespace oracles
