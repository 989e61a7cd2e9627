#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include <seidelskew.hpp>

using namespace seidelskew;

TEST_CASE("census golden values at small orders") {
    // Hand enumeration: 8 labeled 3-tournaments, 2 of them 3-cycles (regular,
    // and vacuously doubly regular at this order).
    const auto c3 = census(3);
    REQUIRE(c3.total == 8);
    REQUIRE(c3.counts.regular == 2);
    REQUIRE(c3.counts.almost_regular == 0);
    REQUIRE(c3.counts.doubly_regular == 2);
    REQUIRE(c3.counts.thm1_pass == 0);
    REQUIRE(c3.counts.thm3_pass == 0);

    // Both 2-tournaments pass the deleted-vertex condition.
    const auto c2 = census(2);
    REQUIRE(c2.total == 2);
    REQUIRE(c2.counts.almost_regular == 2);
    REQUIRE(c2.counts.thm1_pass == 2);
    REQUIRE(c2.counts.thm3_pass == 2);

    // Golden from the first verified run, cross-checked against the labeled
    // count of regular 5-tournaments (24) via the extension bijection.
    const auto c4 = census(4);
    REQUIRE(c4.total == 64);
    REQUIRE(c4.counts.regular == 0);
    REQUIRE(c4.counts.almost_regular == 24);
    // No order-5 doubly regular tournament exists (5 != 3 mod 4), so nothing
    // at order 4 can pass the deleted-vertex condition.
    REQUIRE(c4.counts.thm1_pass == 0);
    REQUIRE(c4.counts.thm3_pass == 0);

    const auto c5 = census(5);
    REQUIRE(c5.total == 1024);
    REQUIRE(c5.counts.regular == 24);
    REQUIRE(c5.counts.doubly_regular == 0);
}

TEST_CASE("census golden values at order six") {
    const auto c6 = census(6);
    REQUIRE(c6.total == 32768);
    REQUIRE(c6.counts.regular == 0);
    // Equals the labeled count of regular 7-tournaments (extension bijection).
    REQUIRE(c6.counts.almost_regular == 2640);
    REQUIRE(c6.counts.doubly_regular == 0);
    // Both certificates count the deletion images of the 240 labeled order-7
    // doubly regular tournaments.
    REQUIRE(c6.counts.thm1_pass == 240);
    REQUIRE(c6.counts.thm3_pass == 240);
}

TEST_CASE("census structural invariants") {
    for (int n = 2; n <= 5; ++n) {
        const auto r = census(n);
        REQUIRE(r.n == n);
        REQUIRE(r.counts.regular <= r.total);
        REQUIRE(r.counts.almost_regular <= r.total);
        REQUIRE(r.counts.doubly_regular <= r.total);
        REQUIRE(r.counts.thm1_pass == r.counts.thm3_pass);
        if (n % 2 == 0) {
            REQUIRE(r.counts.regular == 0);
            REQUIRE(r.counts.doubly_regular == 0);
        } else {
            REQUIRE(r.counts.almost_regular == 0);
        }
        REQUIRE(r.elapsed_seconds >= 0.0);
    }
    REQUIRE_THROWS_AS(census(12), TooLarge);
}

TEST_CASE("census is deterministic across worker counts") {
    const auto one = census(5, 1);
    const auto four = census(5, 4);
    REQUIRE(Json(one).dump() == Json(four).dump());
    // The JSON payload deliberately excludes timing and worker count.
    REQUIRE_FALSE(Json(one).contains("elapsed_seconds"));
    REQUIRE_FALSE(Json(one).contains("workers"));
}

TEST_CASE("exhaustive search golden values") {
    REQUIRE(search_thm1(2, SearchMode::Exhaustive) == std::vector<TournamentCode>{0, 1});
    REQUIRE(search_thm1(4, SearchMode::Exhaustive).empty());

    const auto hits = search_thm1(6, SearchMode::Exhaustive);
    REQUIRE(hits.size() == 240);
    REQUIRE(std::is_sorted(hits.begin(), hits.end()));
    REQUIRE(std::adjacent_find(hits.begin(), hits.end()) == hits.end());
    // Every hit decodes to a certified tournament.
    for (TournamentCode code : {hits.front(), hits[100], hits.back()})
        REQUIRE(certify_thm1_spectrum(decode(6, code)).pass);

    // Worker count does not change the result.
    REQUIRE(search_thm1(6, SearchMode::Exhaustive, 0, 0, 3) == hits);
    REQUIRE_THROWS_AS(search_thm1(12, SearchMode::Exhaustive), TooLarge);
}

TEST_CASE("random search is seeded, bounded, and sound") {
    const auto exhaustive = search_thm1(6, SearchMode::Exhaustive);
    const std::set<TournamentCode> all(exhaustive.begin(), exhaustive.end());

    const auto r1 = search_thm1(6, SearchMode::Random, 5000, 12345);
    const auto r2 = search_thm1(6, SearchMode::Random, 5000, 12345);
    REQUIRE(r1 == r2);  // determinism per (mode, budget, seed)
    REQUIRE(r1.size() == 42);  // golden from the first verified run
    REQUIRE(std::is_sorted(r1.begin(), r1.end()));
    for (TournamentCode code : r1) REQUIRE(all.count(code) == 1);

    // Different seed, different sample.
    REQUIRE(search_thm1(6, SearchMode::Random, 5000, 999) != r1);
    // Workers do not change the outcome.
    REQUIRE(search_thm1(6, SearchMode::Random, 5000, 12345, 4) == r1);

    REQUIRE_THROWS_AS(search_thm1(6, SearchMode::Random, 0, 1), Error);
}

TEST_CASE("search mode parsing") {
    REQUIRE(parse_search_mode("exhaustive") == SearchMode::Exhaustive);
    REQUIRE(parse_search_mode("random") == SearchMode::Random);
    REQUIRE_THROWS_AS(parse_search_mode("Exhaustive"), ParseError);
    REQUIRE_THROWS_AS(parse_search_mode(""), ParseError);
    REQUIRE(std::string(search_mode_name(SearchMode::Random)) == "random");
}

TEST_CASE("equivalence experiment at order three") {
    const auto r = equivalence_experiment(3);
    REQUIRE(r.n_drt == 3);
    REQUIRE(r.drt_count == 2);  // the two labeled 3-cycles
    REQUIRE(r.deletion_image == std::vector<TournamentCode>{0, 1});
    REQUIRE(r.spectrum_hits == std::vector<TournamentCode>{0, 1});
    REQUIRE(r.image_matches_hits);
}

TEST_CASE("equivalence experiment at order seven") {
    const auto r = equivalence_experiment(7);
    REQUIRE(r.drt_count == 240);  // labeled Paley-7 class: 7!/21
    REQUIRE(r.deletion_image.size() == 240);
    REQUIRE(r.spectrum_hits.size() == 240);
    // Set equality both ways: the open-question datum. At this order every
    // tournament passing the spectrum condition is a vertex deletion of some
    // doubly regular tournament, not merely extendable to one.
    REQUIRE(r.image_matches_hits);
    REQUIRE(r.deletion_image == r.spectrum_hits);

    // Cross-check against the census count.
    REQUIRE(census(6).counts.thm1_pass == r.spectrum_hits.size());
}

TEST_CASE("equivalence experiment guards") {
    REQUIRE_THROWS_AS(equivalence_experiment(5), Error);   // 5 != 3 mod 4
    REQUIRE_THROWS_AS(equivalence_experiment(4), Error);
    REQUIRE_THROWS_AS(equivalence_experiment(11), TooLarge);
}

TEST_CASE("search JSON reports") {
    const auto hits = search_thm1(2, SearchMode::Exhaustive);
    const Json j = search_report_json(2, SearchMode::Exhaustive, 0, 0, hits);
    REQUIRE(j["n"] == 2);
    REQUIRE(j["mode"] == "exhaustive");
    REQUIRE(j["hit_count"] == 2);
    REQUIRE(j["hits"] == std::vector<TournamentCode>{0, 1});
    REQUIRE_FALSE(j.contains("budget"));

    const Json jr = search_report_json(6, SearchMode::Random, 100, 7,
                                       search_thm1(6, SearchMode::Random, 100, 7));
    REQUIRE(jr["budget"] == 100);
    REQUIRE(jr["seed"] == 7);

    const Json env = report_envelope("search", "", j, "pass");
    REQUIRE(env["schema_version"] == "1");
    REQUIRE(env["command"] == "search");
    REQUIRE(env["input_digest"] == "cbf29ce484222325");
    REQUIRE(env["status"] == "pass");
    REQUIRE(env["payload"] == j);

    const Json err = error_envelope("spectrum", "abc", "broken");
    REQUIRE(err["status"] == "error");
    REQUIRE(err["message"] == "broken");
    REQUIRE_FALSE(err.contains("payload"));
}

TEST_CASE("equivalence JSON excludes timing") {
    const Json j = equivalence_experiment(3);
    REQUIRE(j["n_drt"] == 3);
    REQUIRE(j["drt_count"] == 2);
    REQUIRE(j["image_matches_hits"] == true);
    REQUIRE_FALSE(j.contains("elapsed_seconds"));
}
