#pragma once

#include <cstdint>
#include <vector>

#include "seidelskew/errors.hpp"
#include "seidelskew/prng.hpp"
#include "seidelskew/tournament.hpp"

namespace seidelskew {

/// Compact label for a tournament on n vertices: one bit per unordered pair,
/// pairs in lexicographic order (0,1), (0,2), ..., (0,n-1), (1,2), ...; bit
/// value 1 means the arc points from the smaller to the larger vertex.
using TournamentCode = std::uint64_t;

inline int pair_bits(int n) { return n * (n - 1) / 2; }

/// Number of labeled tournaments on n vertices, 2^{n(n-1)/2}.
/// Guarded so the full code range fits in the 64-bit code type (and leaves
/// room for an exclusive end bound in exhaustive scans).
inline TournamentCode code_count(int n) {
    if (n < 0 || pair_bits(n) > 62)
        throw TooLarge("tournament order too large for 64-bit codes");
    return TournamentCode(1) << pair_bits(n);
}

inline TournamentCode encode(const Tournament& t) {
    const int n = t.size();
    if (n < 0 || pair_bits(n) > 62)
        throw TooLarge("tournament order too large for 64-bit codes");
    TournamentCode code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (t.arc(i, j)) code |= TournamentCode(1) << bit;
    return code;
}

inline Tournament decode(int n, TournamentCode code) {
    if (n < 0 || pair_bits(n) > 62)
        throw TooLarge("tournament order too large for 64-bit codes");
    if (n > 0 && (code >> pair_bits(n)) != 0)
        throw IndexOutOfRange("code has bits beyond the pair count for this order");
    std::vector<std::uint8_t> adj(static_cast<std::size_t>(n) * n, 0);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit) {
            const bool forward = (code >> bit) & 1u;
            adj[static_cast<std::size_t>(forward ? i : j) * n + (forward ? j : i)] = 1;
        }
    return Tournament::from_adjacency(n, adj);
}

/// Ascending half-open range over every code of order n; the exhaustive
/// enumeration stream. Iterators are cheap, so the full space never has to be
/// materialized.
struct CodeRange {
    TournamentCode first = 0;
    TournamentCode last = 0;  // exclusive

    struct iterator {
        TournamentCode value;
        TournamentCode operator*() const { return value; }
        iterator& operator++() {
            ++value;
            return *this;
        }
        bool operator!=(const iterator& o) const { return value != o.value; }
        bool operator==(const iterator& o) const { return value == o.value; }
    };
    iterator begin() const { return {first}; }
    iterator end() const { return {last}; }
    std::uint64_t size() const { return last - first; }
};

inline CodeRange enumerate_tournaments(int n) { return CodeRange{0, code_count(n)}; }

/// Uniform random tournament: one generator output per pair, orientation from
/// the top bit. A fixed seed fixes the tournament.
inline Tournament random_tournament(int n, std::uint64_t seed) {
    if (n < 0 || pair_bits(n) > 62)
        throw TooLarge("tournament order too large for 64-bit codes");
    detail::SplitMix64 rng(seed);
    TournamentCode code = 0;
    for (int bit = 0; bit < pair_bits(n); ++bit)
        if (rng.next_bit()) code |= TournamentCode(1) << bit;
    return decode(n, code);
}

}  // namespace seidelskew
