#pragma once

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "seidelskew/certificates.hpp"
#include "seidelskew/search.hpp"
#include "seidelskew/spectra.hpp"

namespace seidelskew {

using Json = nlohmann::json;

/// FNV-1a 64-bit digest of the raw input bytes, as 16 lowercase hex digits.
/// Cheap, dependency-free, and stable across platforms; reports carry it so a
/// verdict can be tied back to the exact input that produced it.
inline std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf, 16);
}

namespace detail {

inline std::vector<std::string> decimal_strings(const std::vector<BigInt>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_decimal(x));
    return out;
}

}  // namespace detail

/// Polynomials serialize as coefficient arrays in ascending degree, every
/// coefficient a decimal string: exact values can overflow any JSON number.
inline void to_json(Json& j, const CertificateReport& r) {
    j = Json::object();
    j["condition"] = condition_name(r.condition);
    j["pass"] = r.pass;
    j["rational"] = r.rational;
    j["computed"] = r.rational ? r.computed_rat.decimal_coeffs() : r.computed_int.decimal_coeffs();
    j["target"] = r.rational ? r.target_rat.decimal_coeffs() : r.target_int.decimal_coeffs();
    Json aux = Json::object();
    for (const auto& [name, vec] : r.auxiliary) aux[name] = detail::decimal_strings(vec);
    j["auxiliary"] = aux;
    if (!r.failure_reason.empty()) j["failure_reason"] = r.failure_reason;
}

/// Eigenbases stay out of the report: they are numeric working state, not
/// part of the spectral summary contract.
inline void to_json(Json& j, const SpectralData& sd) {
    j = Json::object();
    j["n"] = sd.size();
    j["eigenvalues"] = sd.eigenvalues;
    j["multiplicities"] = sd.multiplicities;
    j["main_angles"] = sd.main_angles;
    j["grouping_tol"] = sd.grouping_tol;
}

inline void to_json(Json& j, const CensusCounts& c) {
    j = Json::object();
    j["regular"] = c.regular;
    j["almost_regular"] = c.almost_regular;
    j["doubly_regular"] = c.doubly_regular;
    j["thm1_pass"] = c.thm1_pass;
    j["thm3_pass"] = c.thm3_pass;
}

/// Wall-clock time and worker count are execution diagnostics, not results;
/// they go to stderr so the JSON is byte-identical across runs and worker
/// counts.
inline void to_json(Json& j, const CensusReport& r) {
    j = Json::object();
    j["n"] = r.n;
    j["total"] = r.total;
    j["counts"] = r.counts;
}

inline void to_json(Json& j, const EquivalenceReport& r) {
    j = Json::object();
    j["n_drt"] = r.n_drt;
    j["drt_count"] = r.drt_count;
    j["deletion_image"] = r.deletion_image;
    j["spectrum_hits"] = r.spectrum_hits;
    j["image_matches_hits"] = r.image_matches_hits;
}

inline Json search_report_json(int n, SearchMode mode, std::uint64_t budget, std::uint64_t seed,
                               const std::vector<TournamentCode>& hits) {
    Json j = Json::object();
    j["n"] = n;
    j["mode"] = search_mode_name(mode);
    if (mode == SearchMode::Random) {
        j["budget"] = budget;
        j["seed"] = seed;
    }
    j["hit_count"] = hits.size();
    j["hits"] = hits;
    return j;
}

inline Json report_envelope(const std::string& command, std::string_view input_bytes,
                            const Json& payload, const std::string& status) {
    Json j = Json::object();
    j["schema_version"] = "1";
    j["command"] = command;
    j["input_digest"] = fnv1a_hex(input_bytes);
    j["status"] = status;
    j["payload"] = payload;
    return j;
}

/// status=error: no payload, a human-readable message instead.
inline Json error_envelope(const std::string& command, std::string_view input_bytes,
                           const std::string& message) {
    Json j = Json::object();
    j["schema_version"] = "1";
    j["command"] = command;
    j["input_digest"] = fnv1a_hex(input_bytes);
    j["status"] = "error";
    j["message"] = message;
    return j;
}

}  // namespace seidelskew
