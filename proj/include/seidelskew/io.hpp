#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "seidelskew/errors.hpp"
#include "seidelskew/hadamard.hpp"
#include "seidelskew/tournament.hpp"

namespace seidelskew {

/// Parsing guard: far above any computation this toolkit supports, but keeps
/// accidental huge files from allocating n^2 grids.
inline constexpr int kMaxParseSize = 4096;

namespace detail {

/// Splits into lines on '\n', allowing exactly one optional trailing newline.
/// Any other trailing content (including a stray blank line) is rejected.
inline std::vector<std::string_view> format_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            return lines;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;  // text ended with '\n' (or was empty)
}

inline int parse_header(std::string_view line, std::string_view keyword) {
    const std::string prefix = std::string(keyword) + " ";
    if (line.substr(0, prefix.size()) != prefix)
        throw ParseError("expected header '" + std::string(keyword) + " <n>'");
    const std::string_view num = line.substr(prefix.size());
    if (num.empty()) throw ParseError("missing size in header");
    long n = 0;
    for (char c : num) {
        if (c < '0' || c > '9') throw ParseError("malformed size in header");
        n = n * 10 + (c - '0');
        if (n > kMaxParseSize) throw ParseError("size exceeds parse limit of 4096");
    }
    return static_cast<int>(n);
}

}  // namespace detail

/// Text format: first line "tournament <n>", then n lines of n characters
/// from {0,1}. Wrong line counts, wrong line lengths, stray characters and
/// trailing garbage are all rejected.
inline Tournament parse_tournament(std::string_view text) {
    const auto lines = detail::format_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    const int n = detail::parse_header(lines[0], "tournament");
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        const auto row = lines[x + 1];
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(x) + " has wrong length");
        for (int y = 0; y < n; ++y) {
            if (row[y] != '0' && row[y] != '1')
                throw ParseError("row " + std::to_string(x) + " has a character outside {0,1}");
            bits[static_cast<std::size_t>(x) * n + y] = row[y] == '1' ? 1 : 0;
        }
    }
    return Tournament::from_adjacency(n, bits);
}

inline std::string serialize_tournament(const Tournament& t) {
    const int n = t.size();
    std::string out = "tournament " + std::to_string(n) + "\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) out += (x != y && t.arc(x, y)) ? '1' : '0';
        out += '\n';
    }
    return out;
}

/// Text format: first line "hadamard <n>", then n lines of n characters from
/// {+,-}. Same strictness as the tournament format.
inline SkewHadamard parse_hadamard(std::string_view text) {
    const auto lines = detail::format_lines(text);
    if (lines.empty()) throw ParseError("empty input");
    const int n = detail::parse_header(lines[0], "hadamard");
    if (n < 1) throw ParseError("hadamard size must be at least 1");
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("expected " + std::to_string(n) + " rows, found " +
                         std::to_string(lines.size() - 1));
    std::vector<int> entries(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        const auto row = lines[x + 1];
        if (static_cast<int>(row.size()) != n)
            throw ParseError("row " + std::to_string(x) + " has wrong length");
        for (int y = 0; y < n; ++y) {
            if (row[y] != '+' && row[y] != '-')
                throw ParseError("row " + std::to_string(x) + " has a character outside {+,-}");
            entries[static_cast<std::size_t>(x) * n + y] = row[y] == '+' ? 1 : -1;
        }
    }
    return SkewHadamard::from_entries(n, entries);
}

inline std::string serialize_hadamard(const SkewHadamard& h) {
    const int n = h.size();
    std::string out = "hadamard " + std::to_string(n) + "\n";
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) out += h.entry(x, y) == 1 ? '+' : '-';
        out += '\n';
    }
    return out;
}

}  // namespace seidelskew
