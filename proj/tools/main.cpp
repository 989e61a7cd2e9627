// Command-line front end: gen, certify, spectrum, convert, search, census.
//
// Contract: stdout carries exactly one artifact (a matrix file or a JSON
// report), diagnostics go to stderr, and the exit code is 0 for
// success/pass, 1 for a domain failure on well-formed input, and 2 for
// usage or parse errors.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <seidelskew.hpp>

namespace {

using namespace seidelskew;

constexpr int kExitPass = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

/// Errors that mean the request itself was bad: malformed files, impossible
/// parameters, out-of-range indices. Everything else is a domain verdict on
/// well-formed input.
bool is_usage_error(const Error& e) {
    return dynamic_cast<const ParseError*>(&e) != nullptr ||
           dynamic_cast<const BadModulus*>(&e) != nullptr ||
           dynamic_cast<const TooLarge*>(&e) != nullptr ||
           dynamic_cast<const IndexOutOfRange*>(&e) != nullptr ||
           dynamic_cast<const NotATournament*>(&e) != nullptr;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int default_workers() {
    if (const char* env = std::getenv("SEIDEL_SKEW_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) return static_cast<int>(v);
        std::cerr << "ignoring invalid SEIDEL_SKEW_WORKERS value '" << env << "'\n";
    }
    return 1;
}

int cmd_gen(const std::string& kind, int number, std::uint64_t seed) {
    const Tournament t =
        kind == "paley" ? paley_tournament(number) : random_tournament(number, seed);
    std::cout << serialize_tournament(t);
    return kExitPass;
}

int cmd_certify(const std::string& which, const std::string& path) {
    const std::string input = read_file(path);
    CertificateReport report;
    if (which == "hadamard") {
        report = certify_skew_hadamard(parse_hadamard(input));
    } else {
        const Tournament t = parse_tournament(input);
        report = which == "drt"    ? certify_drt_spectrum(t)
                 : which == "thm1" ? certify_thm1_spectrum(t)
                                   : certify_thm3_adjacency(t);
    }
    print_json(report_envelope("certify", input, report, report.pass ? "pass" : "fail"));
    return report.pass ? kExitPass : kExitDomainFailure;
}

int cmd_spectrum(const std::string& path, double tol) {
    const std::string input = read_file(path);
    const Tournament t = parse_tournament(input);
    try {
        const SpectralData sd = seidel_eigen(t, tol);
        print_json(report_envelope("spectrum", input, sd, "pass"));
    } catch (const GroupingAmbiguous& e) {
        print_json(error_envelope("spectrum", input, e.what()));
        return kExitDomainFailure;
    }
    return kExitPass;
}

int cmd_convert(const std::string& direction, const std::string& path, int vertex) {
    const std::string input = read_file(path);
    if (direction == "drt-to-hadamard") {
        std::cout << serialize_hadamard(drt_to_skew_hadamard(parse_tournament(input)));
    } else if (direction == "hadamard-to-drt") {
        std::cout << serialize_tournament(skew_hadamard_to_drt(parse_hadamard(input)));
    } else if (direction == "delete-vertex") {
        std::cout << serialize_tournament(delete_vertex(parse_tournament(input), vertex));
    } else {  // extend
        std::cout << serialize_tournament(extend_to_regular(parse_tournament(input)));
    }
    return kExitPass;
}

int cmd_search(int n, const std::string& mode_name, std::uint64_t budget, std::uint64_t seed,
               const std::string& dump_dir, int workers) {
    const SearchMode mode = parse_search_mode(mode_name);
    if (mode == SearchMode::Random && budget < 1)
        throw ParseError("random mode requires --budget >= 1");
    const auto hits = search_thm1(n, mode, budget, seed, workers);
    if (!dump_dir.empty()) {
        std::filesystem::create_directories(dump_dir);
        for (const TournamentCode code : hits) {
            std::ofstream out(std::filesystem::path(dump_dir) /
                              ("hit_" + std::to_string(code) + ".txt"));
            out << serialize_tournament(decode(n, code));
        }
        std::cerr << "wrote " << hits.size() << " hit files to " << dump_dir << "\n";
    }
    print_json(report_envelope("search", "", search_report_json(n, mode, budget, seed, hits),
                               "pass"));
    return kExitPass;
}

int cmd_census(int n, int workers) {
    const CensusReport report = census(n, workers);
    std::cerr << "census n=" << n << " total=" << report.total
              << " elapsed=" << report.elapsed_seconds << "s workers=" << report.workers << "\n";
    print_json(report_envelope("census", "", report, "pass"));
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"skew Hadamard / doubly regular tournament toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a tournament file");
    std::string gen_kind;
    int gen_number = 0;
    std::uint64_t gen_seed = 0;
    gen->add_option("kind", gen_kind, "paley | random")
        ->required()
        ->check(CLI::IsMember({"paley", "random"}));
    gen->add_option("number", gen_number, "prime q (paley) or size n (random)")
        ->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "PRNG seed for random mode");

    // certify
    auto* certify = app.add_subcommand("certify", "check a spectrum condition exactly");
    std::string certify_which, certify_path;
    certify->add_option("which", certify_which, "drt | thm1 | thm3 | hadamard")
        ->required()
        ->check(CLI::IsMember({"drt", "thm1", "thm3", "hadamard"}));
    certify->add_option("input", certify_path, "input file")->required();

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "numeric Seidel eigendata");
    std::string spectrum_path;
    double spectrum_tol = kDefaultGroupingTol;
    spectrum->add_option("input", spectrum_path, "tournament file")->required();
    spectrum->add_option("--tol", spectrum_tol, "eigenvalue grouping tolerance, in (0, 1e-3]")
        ->check(CLI::Range(1e-300, 1e-3));

    // convert
    auto* convert = app.add_subcommand("convert", "convert between object kinds");
    std::string convert_direction, convert_path;
    int convert_vertex = -1;
    convert
        ->add_option("direction", convert_direction,
                     "drt-to-hadamard | hadamard-to-drt | delete-vertex | extend")
        ->required()
        ->check(CLI::IsMember({"drt-to-hadamard", "hadamard-to-drt", "delete-vertex", "extend"}));
    convert->add_option("input", convert_path, "input file")->required();
    convert->add_option("--vertex", convert_vertex, "vertex to delete (delete-vertex only)");

    // search
    auto* search = app.add_subcommand("search", "find tournaments passing the spectrum condition");
    int search_n = 0;
    std::string search_mode = "exhaustive";
    std::uint64_t search_budget = 0, search_seed = 0;
    std::string search_dump_dir;
    int search_workers = default_workers();
    search->add_option("n", search_n, "tournament order")->required()->check(CLI::PositiveNumber);
    search->add_option("--mode", search_mode, "exhaustive | random")
        ->check(CLI::IsMember({"exhaustive", "random"}));
    search->add_option("--budget", search_budget, "random draws to test (random mode)");
    search->add_option("--seed", search_seed, "PRNG seed (random mode)");
    search->add_option("--dump-dir", search_dump_dir, "write one tournament file per hit");
    search->add_option("--workers", search_workers, "worker threads")
        ->check(CLI::PositiveNumber);

    // census
    auto* census_cmd = app.add_subcommand("census", "count predicates over all labeled tournaments");
    int census_n = 0;
    int census_workers = default_workers();
    census_cmd->add_option("n", census_n, "tournament order")
        ->required()
        ->check(CLI::PositiveNumber);
    census_cmd->add_option("--workers", census_workers, "worker threads")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*gen) return cmd_gen(gen_kind, gen_number, gen_seed);
        if (*certify) return cmd_certify(certify_which, certify_path);
        if (*spectrum) return cmd_spectrum(spectrum_path, spectrum_tol);
        if (*convert) {
            if (convert_direction == "delete-vertex" && convert_vertex < 0)
                throw ParseError("delete-vertex requires --vertex");
            return cmd_convert(convert_direction, convert_path, convert_vertex);
        }
        if (*search)
            return cmd_search(search_n, search_mode, search_budget, search_seed, search_dump_dir,
                              search_workers);
        if (*census_cmd) return cmd_census(census_n, census_workers);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_usage_error(e) ? kExitUsage : kExitDomainFailure;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitDomainFailure;
    }
    return kExitUsage;  // unreachable with require_subcommand(1)
}
