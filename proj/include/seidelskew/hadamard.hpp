#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seidelskew/errors.hpp"
#include "seidelskew/tournament.hpp"

namespace seidelskew {

/// Square +-1 matrix. Construction only checks shape and entry range; whether
/// the matrix is actually skew Hadamard is a separate predicate, so invalid
/// candidates can be held, reported on, and rejected downstream.
class SkewHadamard {
   public:
    static SkewHadamard from_entries(int n, const std::vector<int>& row_major) {
        if (n < 1 || row_major.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw NotSkewHadamard("entry grid is not n x n");
        std::vector<std::int8_t> h;
        h.reserve(row_major.size());
        for (int v : row_major) {
            if (v != 1 && v != -1) throw NotSkewHadamard("entries must be +1 or -1");
            h.push_back(static_cast<std::int8_t>(v));
        }
        return SkewHadamard(n, std::move(h));
    }

    int size() const { return n_; }
    int entry(int x, int y) const { return h_[static_cast<std::size_t>(x) * n_ + y]; }

    bool operator==(const SkewHadamard&) const = default;

   private:
    SkewHadamard(int n, std::vector<std::int8_t> h) : n_(n), h_(std::move(h)) {}

    int n_;
    std::vector<std::int8_t> h_;
};

/// Exact integer check of both identities: H H^T = nI and H + H^T = 2I.
inline bool is_skew_hadamard(const SkewHadamard& h) {
    const int n = h.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int sum = h.entry(x, y) + h.entry(y, x);
            if (sum != (x == y ? 2 : 0)) return false;
        }
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            long long dot = 0;
            for (int k = 0; k < n; ++k)
                dot += static_cast<long long>(h.entry(x, k)) * h.entry(y, k);
            if (dot != (x == y ? n : 0)) return false;
        }
    return true;
}

/// Borders a doubly regular tournament of size n-1 with a vertex that loses
/// to everyone (row 0 of the bordered adjacency is zero, column 0 below the
/// diagonal is all ones) and returns H = J - 2A. The first row of H is all
/// ones and H satisfies both skew Hadamard identities.
inline SkewHadamard drt_to_skew_hadamard(const Tournament& t) {
    if (!is_doubly_regular(t)) throw NotDoublyRegular("input tournament is not doubly regular");
    const int m = t.size();
    const int n = m + 1;
    std::vector<int> h(static_cast<std::size_t>(n) * n, 0);
    for (int y = 0; y < n; ++y) h[y] = 1;                            // bordered A row 0 = 0
    for (int x = 1; x < n; ++x) h[static_cast<std::size_t>(x) * n] = -1;  // bordered A col 0 = 1
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            h[static_cast<std::size_t>(x + 1) * n + (y + 1)] = t.arc(x, y) ? -1 : 1;
    for (int x = 1; x < n; ++x) h[static_cast<std::size_t>(x) * n + x] = 1;
    return SkewHadamard::from_entries(n, h);
}

/// Normalizes H so its first row is all ones: for each column j with
/// H_{0j} = -1, negate row j and column j together (negating both preserves
/// H H^T = nI and H + H^T = 2I, while a lone column negation would break
/// skewness). Then forms A = (J - H)/2 and strips the border row/column 0.
/// The remainder is a doubly regular tournament of size n-1.
inline Tournament skew_hadamard_to_drt(const SkewHadamard& h) {
    if (!is_skew_hadamard(h)) throw NotSkewHadamard("matrix fails the skew Hadamard identities");
    const int n = h.size();
    // Row/column sign flips: H_{00} = 1 always, so index 0 is never flipped.
    std::vector<int> sign(n, 1);
    for (int j = 1; j < n; ++j) sign[j] = h.entry(0, j) == -1 ? -1 : 1;
    auto ent = [&](int x, int y) { return sign[x] * sign[y] * h.entry(x, y); };
    for (int j = 0; j < n; ++j)
        if (ent(0, j) != 1) throw NormalizationFailed("first row not all ones after sign fixing");

    const int m = n - 1;
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m) * m, 0);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
            bits[static_cast<std::size_t>(x) * m + y] =
                static_cast<std::uint8_t>((1 - ent(x + 1, y + 1)) / 2);
    Tournament t = Tournament::from_adjacency(m, bits);
    if (!is_doubly_regular(t))
        throw NotSkewHadamard("core of the normalized matrix is not doubly regular");
    return t;
}

}  // namespace seidelskew
