#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "seidelskew/errors.hpp"
#include "seidelskew/matrix.hpp"

namespace seidelskew {

/// A tournament: a complete oriented graph on n vertices. Exactly one of the
/// arcs x->y, y->x is present for every pair x != y, i.e. the 0/1 adjacency
/// matrix satisfies A + A^T = J - I. Values are immutable once built; every
/// construction path runs the full validity check.
class Tournament {
   public:
    /// Builds a tournament from a flat row-major 0/1 grid.
    /// Throws NotATournament if the diagonal is nonzero or some pair is
    /// oriented zero or two ways.
    static Tournament from_adjacency(int n, const std::vector<std::uint8_t>& row_major) {
        if (n < 0 || row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw NotATournament("adjacency grid is not n x n");
        for (int x = 0; x < n; ++x) {
            if (row_major[static_cast<std::size_t>(x) * n + x] != 0)
                throw NotATournament("nonzero diagonal at vertex " + std::to_string(x));
            for (int y = x + 1; y < n; ++y) {
                const int fwd = row_major[static_cast<std::size_t>(x) * n + y];
                const int bwd = row_major[static_cast<std::size_t>(y) * n + x];
                if (fwd > 1 || bwd > 1 || fwd + bwd != 1)
                    throw NotATournament("pair (" + std::to_string(x) + "," + std::to_string(y) +
                                         ") is not oriented exactly one way");
            }
        }
        return Tournament(n, row_major);
    }

    static Tournament from_adjacency(const std::vector<std::vector<int>>& rows) {
        const int n = static_cast<int>(rows.size());
        std::vector<std::uint8_t> flat;
        flat.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n) throw NotATournament("adjacency grid is not square");
            for (int v : row) flat.push_back(static_cast<std::uint8_t>(v != 0));
        }
        return from_adjacency(n, flat);
    }

    int size() const { return n_; }

    /// A_{xy}: true iff the arc x -> y is present.
    bool arc(int x, int y) const { return a_[static_cast<std::size_t>(x) * n_ + y] != 0; }

    bool operator==(const Tournament&) const = default;

   private:
    Tournament(int n, std::vector<std::uint8_t> bits) : n_(n), a_(std::move(bits)) {}

    int n_;
    std::vector<std::uint8_t> a_;
};

/// Out-degree vector s = A*1. Entries sum to n(n-1)/2.
inline std::vector<int> score_vector(const Tournament& t) {
    const int n = t.size();
    std::vector<int> s(n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && t.arc(x, y)) ++s[x];
    return s;
}

/// True iff n is odd and every score equals (n-1)/2. Agrees with K*1 = 0
/// where K = A - A^T.
inline bool is_regular(const Tournament& t) {
    const int n = t.size();
    if (n % 2 == 0) return false;
    const auto s = score_vector(t);
    for (int v : s)
        if (v != (n - 1) / 2) return false;
    return true;
}

/// True iff n is even and the scores consist of n/2 copies of n/2 and n/2
/// copies of (n-2)/2. Equality case of s^T s >= n(n^2-2n+2)/4.
inline bool is_almost_regular(const Tournament& t) {
    const int n = t.size();
    if (n == 0 || n % 2 != 0) return false;
    int high = 0, low = 0;
    for (int v : score_vector(t)) {
        if (v == n / 2)
            ++high;
        else if (v == (n - 2) / 2)
            ++low;
        else
            return false;
    }
    return high == n / 2 && low == n / 2;
}

/// True iff the tournament is regular and every unordered pair of distinct
/// vertices has the same number of common out-neighbours (then necessarily
/// (n-3)/4). Direct combinatorial check, quadratic pairs times linear scan.
inline bool is_doubly_regular(const Tournament& t) {
    if (!is_regular(t)) return false;
    const int n = t.size();
    if (n <= 1) return true;  // no pairs to constrain
    int common = -1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int c = 0;
            for (int w = 0; w < n; ++w)
                if (w != u && w != v && t.arc(u, w) && t.arc(v, w)) ++c;
            if (common < 0)
                common = c;
            else if (c != common)
                return false;
        }
    return 4 * common == n - 3;
}

/// Quadratic-residue tournament on a prime q = 3 (mod 4): arc x -> y iff
/// y - x is a nonzero square mod q. Always doubly regular.
inline Tournament paley_tournament(int q) {
    auto is_prime = [](int m) {
        if (m < 2) return false;
        for (int d = 2; static_cast<long long>(d) * d <= m; ++d)
            if (m % d == 0) return false;
        return true;
    };
    if (!is_prime(q) || q % 4 != 3)
        throw BadModulus("q must be a prime congruent to 3 mod 4, got " + std::to_string(q));
    std::vector<std::uint8_t> residue(q, 0);
    for (int x = 1; x < q; ++x) residue[static_cast<int>((static_cast<long long>(x) * x) % q)] = 1;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(q) * q, 0);
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            if (x != y && residue[(y - x + q) % q]) bits[static_cast<std::size_t>(x) * q + y] = 1;
    return Tournament::from_adjacency(q, bits);
}

/// Principal subtournament after removing vertex v; the remaining vertices
/// keep their relative order.
inline Tournament delete_vertex(const Tournament& t, int v) {
    const int n = t.size();
    if (v < 0 || v >= n) throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range");
    const int m = n - 1;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m) * m, 0);
    for (int x = 0, xi = 0; x < n; ++x) {
        if (x == v) continue;
        for (int y = 0, yi = 0; y < n; ++y) {
            if (y == v) continue;
            bits[static_cast<std::size_t>(xi) * m + yi] = t.arc(x, y) ? 1 : 0;
            ++yi;
        }
        ++xi;
    }
    return Tournament::from_adjacency(m, bits);
}

/// Adds one vertex (placed last) to an almost regular tournament of even size
/// m: the new vertex beats exactly the vertices of score m/2 and loses to the
/// vertices of score (m-2)/2. The result is regular of size m+1.
inline Tournament extend_to_regular(const Tournament& t) {
    if (!is_almost_regular(t)) throw NotAlmostRegular("input tournament is not almost regular");
    const int m = t.size();
    const int n = m + 1;
    const auto s = score_vector(t);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            bits[static_cast<std::size_t>(x) * n + y] = t.arc(x, y) ? 1 : 0;
    for (int x = 0; x < m; ++x) {
        const bool new_beats_x = (s[x] == m / 2);
        bits[static_cast<std::size_t>(m) * n + x] = new_beats_x ? 1 : 0;
        bits[static_cast<std::size_t>(x) * n + m] = new_beats_x ? 0 : 1;
    }
    return Tournament::from_adjacency(n, bits);
}

/// Skew part K = A - A^T: skew-symmetric, zero diagonal, +-1 elsewhere.
/// The Seidel matrix is S = i*K; exact code works with K throughout and the
/// factor i is restored analytically where needed.
template <class T = int>
detail::Matrix<T> skew_matrix(const Tournament& t) {
    const int n = t.size();
    detail::Matrix<T> k(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            k(x, y) = t.arc(x, y) ? T{1} : T{-1};
        }
    return k;
}

template <class T = int>
detail::Matrix<T> adjacency_matrix(const Tournament& t) {
    const int n = t.size();
    detail::Matrix<T> a(n, n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && t.arc(x, y)) a(x, y) = T{1};
    return a;
}

}  // namespace seidelskew
