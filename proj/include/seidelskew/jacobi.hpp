#pragma once

#include <cmath>
#include <vector>

#include "seidelskew/matrix.hpp"

namespace seidelskew::detail {

struct SymmetricEigen {
    std::vector<double> values;  // unsorted
    Matrix<double> vectors;      // columns match values
};

/// Cyclic two-sided Jacobi for a real symmetric matrix. Sweeps rotate every
/// off-diagonal pair in row order until the off-diagonal Frobenius norm drops
/// below 1e-13 * ||A||_F, capped at 30 sweeps. Plenty for the matrix sizes
/// this toolkit handles, and every result is cross-checkable against exact
/// characteristic polynomials.
inline SymmetricEigen jacobi_symmetric(Matrix<double> a) {
    const int n = a.rows();
    Matrix<double> v = Matrix<double>::identity(n);

    double frob = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frob += a(i, j) * a(i, j);
    frob = std::sqrt(frob);
    const double stop = 1e-13 * frob;

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < 30 && off_norm() > stop; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double tt = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0);
                const double s = tt * c;

                for (int k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    SymmetricEigen out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a(i, i);
    out.vectors = std::move(v);
    return out;
}

}  // namespace seidelskew::detail
