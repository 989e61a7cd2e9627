#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "seidelskew/char_poly.hpp"
#include "seidelskew/errors.hpp"
#include "seidelskew/jacobi.hpp"
#include "seidelskew/tournament.hpp"

namespace seidelskew {

using Complex = std::complex<double>;
using ComplexVec = std::vector<Complex>;

inline constexpr double kDefaultGroupingTol = 1e-7;

/// Floating-point spectral decomposition of a Hermitian Seidel matrix:
/// distinct eigenvalues in descending order, multiplicities, main angles, and
/// an orthonormal complex basis per eigenspace (kept for projections).
struct SpectralData {
    std::vector<double> eigenvalues;
    std::vector<int> multiplicities;
    std::vector<double> main_angles;
    double grouping_tol = kDefaultGroupingTol;
    std::vector<std::vector<ComplexVec>> eigenbases;

    int size() const { return std::accumulate(multiplicities.begin(), multiplicities.end(), 0); }
};

namespace detail {

inline Complex inner(const ComplexVec& a, const ComplexVec& b) {
    Complex s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline double norm(const ComplexVec& a) { return std::sqrt(std::abs(inner(a, a))); }

/// S v for S = iK, without materializing complex matrix entries.
inline ComplexVec seidel_apply(const Tournament& t, const ComplexVec& v) {
    const int n = t.size();
    ComplexVec out(n, Complex(0.0, 0.0));
    for (int x = 0; x < n; ++x) {
        Complex acc(0.0, 0.0);
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            acc += t.arc(x, y) ? v[y] : -v[y];
        }
        out[x] = Complex(0.0, 1.0) * acc;
    }
    return out;
}

}  // namespace detail

/// Main angles from retained eigenspace bases: beta_i = ||P_i 1|| / sqrt(n),
/// computed as summed inner products against the all-ones vector. This stays
/// independent of the exact polynomial route it is used to validate.
inline std::vector<double> main_angles(const SpectralData& sd, int n) {
    std::vector<double> out;
    out.reserve(sd.eigenbases.size());
    for (const auto& basis : sd.eigenbases) {
        double norm2 = 0.0;
        for (const auto& v : basis) {
            Complex ip(0.0, 0.0);
            for (const auto& c : v) ip += std::conj(c);
            norm2 += std::norm(ip);
        }
        out.push_back(std::sqrt(norm2 / n));
    }
    return out;
}

/// Eigen-decomposition of S = iK through the real symmetric embedding
/// [[0, -K], [K, 0]] of size 2n. Every eigenvalue of S shows up twice in the
/// embedding; clusters are paired and halved, and complex eigenvectors are
/// recovered as u + i*w from embedding columns (u; w).
///
/// Throws GroupingAmbiguous when the sorted embedding spectrum has a gap
/// inside (grouping_tol, 2*grouping_tol) or a cluster of odd size - both mean
/// the tolerance cannot separate eigenspaces reliably and must be adjusted.
inline SpectralData seidel_eigen(const Tournament& t, double grouping_tol = kDefaultGroupingTol) {
    if (!(grouping_tol > 0.0) || grouping_tol > 1e-3)
        throw Error("grouping_tol must lie in (0, 1e-3]");
    const int n = t.size();
    if (n < 1) throw Error("empty tournament has no spectral data");

    detail::Matrix<double> emb(2 * n, 2 * n, 0.0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const double k = t.arc(x, y) ? 1.0 : -1.0;
            emb(x, n + y) = -k;
            emb(n + x, y) = k;
        }
    const auto eig = detail::jacobi_symmetric(emb);

    std::vector<int> order(2 * n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return eig.values[a] > eig.values[b]; });

    // Cluster the descending embedding eigenvalues.
    std::vector<std::pair<int, int>> clusters;  // [begin, end) into `order`
    for (int i = 0; i < 2 * n;) {
        int j = i + 1;
        while (j < 2 * n && eig.values[order[j - 1]] - eig.values[order[j]] <= grouping_tol) ++j;
        if (j < 2 * n) {
            const double gap = eig.values[order[j - 1]] - eig.values[order[j]];
            if (gap < 2.0 * grouping_tol)
                throw GroupingAmbiguous("spectral gap " + std::to_string(gap) +
                                        " is inside the ambiguous band of the grouping tolerance");
        }
        clusters.emplace_back(i, j);
        i = j;
    }

    SpectralData sd;
    sd.grouping_tol = grouping_tol;
    for (const auto& [begin, end] : clusters) {
        const int emb_count = end - begin;
        if (emb_count % 2 != 0)
            throw GroupingAmbiguous("embedding eigenvalues did not pair up; adjust the tolerance");
        const int mult = emb_count / 2;

        double mean = 0.0;
        for (int i = begin; i < end; ++i) mean += eig.values[order[i]];
        mean /= emb_count;

        // Recover complex candidates and keep an orthonormal subset of size
        // `mult`; the embedding doubles each eigenvector as (u;w), (-w;u), so
        // half of the candidates project away to nothing.
        std::vector<ComplexVec> basis;
        for (int i = begin; i < end && static_cast<int>(basis.size()) < mult; ++i) {
            ComplexVec v(n);
            for (int r = 0; r < n; ++r)
                v[r] = Complex(eig.vectors(r, order[i]), eig.vectors(n + r, order[i]));
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : basis) {
                    const Complex c = detail::inner(b, v);
                    for (int r = 0; r < n; ++r) v[r] -= c * b[r];
                }
            const double len = detail::norm(v);
            if (len < 1e-6) continue;
            for (auto& c : v) c /= len;
            basis.push_back(std::move(v));
        }
        if (static_cast<int>(basis.size()) != mult)
            throw GroupingAmbiguous("could not recover a full eigenspace basis; adjust the tolerance");

        sd.eigenvalues.push_back(mean);
        sd.multiplicities.push_back(mult);
        sd.eigenbases.push_back(std::move(basis));
    }

    if (sd.size() != n) throw Error("multiplicities do not sum to the matrix size");
    sd.main_angles = main_angles(sd, n);
    double angle_sum = 0.0;
    for (double b : sd.main_angles) angle_sum += b * b;
    if (std::abs(angle_sum - 1.0) > 10.0 * grouping_tol)
        throw Error("main angles do not satisfy sum beta^2 = 1");
    return sd;
}

/// Largest infinity-norm residual ||S v - theta v|| over all retained
/// eigenvectors; the accuracy yardstick for the decomposition.
inline double max_eigenvector_residual(const Tournament& t, const SpectralData& sd) {
    double worst = 0.0;
    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i)
        for (const auto& v : sd.eigenbases[i]) {
            const auto sv = detail::seidel_apply(t, v);
            for (int r = 0; r < t.size(); ++r)
                worst = std::max(worst, std::abs(sv[r] - sd.eigenvalues[i] * v[r]));
        }
    return worst;
}

/// Spectral test of almost regularity: | sum theta_i^2 beta_i^2 - 1 | <= tol.
/// Agrees with the combinatorial is_almost_regular on every tournament; for
/// odd sizes the weighted sum can never reach 1, so the test is total.
inline bool almost_regular_spectral_test(const Tournament& t, double tol) {
    const auto sd = seidel_eigen(t);
    double sum = 0.0;
    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i)
        sum += sd.eigenvalues[i] * sd.eigenvalues[i] * sd.main_angles[i] * sd.main_angles[i];
    return std::abs(sum - 1.0) <= tol;
}

/// Evaluates P_{M+cJ}(x) = P_M(x) (1 + c sum_i n beta_i^2 / (tau_i - x)) from
/// the spectral data of a normal matrix M. P_M(x) itself is reconstructed as
/// prod (tau_i - x)^{m_i}.
inline Complex rank_one_update_eval(const SpectralData& sd, Complex c, Complex x) {
    const int n = sd.size();
    for (double tau : sd.eigenvalues)
        if (std::abs(Complex(tau, 0.0) - x) < 1e-12)
            throw PoleAtSample("sample point collides with an eigenvalue");
    Complex pm(1.0, 0.0);
    Complex correction(0.0, 0.0);
    for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
        const Complex diff = Complex(sd.eigenvalues[i], 0.0) - x;
        for (int k = 0; k < sd.multiplicities[i]; ++k) pm *= diff;
        correction += static_cast<double>(n) * sd.main_angles[i] * sd.main_angles[i] / diff;
    }
    return pm * (Complex(1.0, 0.0) + c * correction);
}

/// Evaluates both sides of the adjacency/Seidel resolvent identity
///   P_A(x) = (-i/2)^n P_S(i(2x+1)) (1 + i sum_i n beta_i^2/(theta_i - i(2x+1)))
/// at the given samples: exact characteristic polynomials on both sides,
/// numeric main angles on the right. Returns the largest relative residual.
inline double corollary1_check(const Tournament& t, const std::vector<Complex>& samples) {
    const int n = t.size();
    const auto sd = seidel_eigen(t);
    const IntPoly pa = adjacency_char_poly(t);
    const IntPoly ps = seidel_char_poly(t);
    const Complex i_unit(0.0, 1.0);

    double worst = 0.0;
    for (const Complex& x : samples) {
        const Complex w = i_unit * (2.0 * x + 1.0);
        for (double theta : sd.eigenvalues)
            if (std::abs(Complex(theta, 0.0) - w) < 1e-12)
                throw PoleAtSample("sample maps onto a Seidel eigenvalue");
        Complex sum(0.0, 0.0);
        for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k)
            sum += static_cast<double>(n) * sd.main_angles[k] * sd.main_angles[k] /
                   (Complex(sd.eigenvalues[k], 0.0) - w);
        Complex prefactor(1.0, 0.0);
        for (int k = 0; k < n; ++k) prefactor *= Complex(0.0, -0.5);
        const Complex left = pa.eval(x);
        const Complex right = prefactor * ps.eval(w) * (Complex(1.0, 0.0) + i_unit * sum);
        const double denom = std::max(std::abs(left), std::abs(right));
        worst = std::max(worst, denom < 1e-290 ? std::abs(left - right) : std::abs(left - right) / denom);
    }
    return worst;
}

/// Exact residual ||S y - lambda y||_inf over the Gaussian integers for
/// y = 1 + (i-1)v, where v is a 0/1 border vector and lambda is +1 or -1.
/// For the out-neighbour indicator of a vertex deleted from a doubly regular
/// tournament the residual is exactly zero at lambda = +1; the complement
/// vector gives an eigenvector for lambda = -1.
inline double thm1_eigvec_check(const Tournament& t, const std::vector<int>& v, int lambda = 1) {
    const int n = t.size();
    if (static_cast<int>(v.size()) != n)
        throw DimensionMismatch("border vector length does not match the tournament size");
    if (lambda != 1 && lambda != -1) throw Error("lambda must be +1 or -1");
    for (int b : v)
        if (b != 0 && b != 1) throw Error("border vector entries must be 0 or 1");

    const auto k = skew_matrix<long long>(t);
    long long worst_sq = 0;
    for (int x = 0; x < n; ++x) {
        long long kv = 0, k1 = 0;
        for (int y = 0; y < n; ++y) {
            kv += k(x, y) * v[y];
            k1 += k(x, y);
        }
        // S y = -Kv + i K(1 - v); y = (1 - v) + i v.
        const long long re = -kv - lambda * (1 - v[x]);
        const long long im = (k1 - kv) - lambda * v[x];
        worst_sq = std::max(worst_sq, re * re + im * im);
    }
    return std::sqrt(static_cast<double>(worst_sq));
}

}  // namespace seidelskew
