#include "aluffi/analysis.hpp"
#include "aluffi/errors.hpp"
#include "aluffi/limits.hpp"
#include "aluffi/parse.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

// exit codes: 0 success, 1 parse/usage, 2 precondition or verdict
// mismatch, 3 resource limit exceeded
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitLimit = 3;

std::vector<std::string> split_names(const std::string& csv) {
    std::vector<std::string> names;
    std::string current;
    for (const char ch : csv) {
        if (ch == ',') {
            names.push_back(current);
            current.clear();
        } else if (ch != ' ') {
            current += ch;
        }
    }
    names.push_back(current);
    return names;
}

bool write_json(const std::string& path, const std::string& body) {
    if (path.empty())
        return true;
    std::ofstream out(path);
    out << body;
    if (!out) {
        std::cerr << "error: cannot write JSON to '" << path << "'\n";
        return false;
    }
    return true;
}

int run(int argc, char** argv) {
    CLI::App app{"decide linear-type criteria for hypersurfaces with isolated singularities"};
    app.require_subcommand(1);

    std::string vars_csv;
    std::string poly_text;
    std::string json_path;
    bool projective = false;
    bool presentations = false;
    bool deep = false;
    std::uint64_t a_max = 6, b_max = 6;
    std::uint64_t trials = 0, seed = 0;
    std::uint64_t quartics = 5, corpus_seed = 20260825;
    unsigned jobs = aluffi::default_jobs();
    aluffi::ResourceLimits limits;

    const auto add_common = [&](CLI::App* cmd, bool with_jobs) {
        cmd->add_option("--json", json_path, "also write the JSON report to this path");
        cmd->add_option("--limit-pairs", limits.max_pair_queue,
                        "ceiling on pending Groebner critical pairs");
        cmd->add_option("--limit-terms", limits.max_basis_terms,
                        "ceiling on total stored basis terms");
        if (with_jobs)
            cmd->add_option("--jobs", jobs, "worker threads (default: ALUFFI_KIT_JOBS or cores)");
    };

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full report for one affine or projective hypersurface");
    analyze_cmd->add_option("--vars", vars_csv, "comma-separated variable names, e.g. x,y,z")
        ->required();
    analyze_cmd->add_option("--poly", poly_text, "polynomial in the listed variables")->required();
    analyze_cmd->add_flag("--projective", projective,
                          "treat the input as a projective hypersurface (homogeneous)");
    analyze_cmd->add_flag("--presentations", presentations,
                          "include Sym/Rees/Aluffi presentation ideals");
    analyze_cmd->add_flag("--deep", deep,
                          "projective: also compare Sym and Rees of the gradient ideal directly");
    add_common(analyze_cmd, false);

    CLI::App* family_cmd = app.add_subcommand(
        "family-scan", "scan x^a + x^c*y^d + y^b against the case/region predictions");
    family_cmd->add_option("--a-max", a_max, "largest a (scan runs 2 <= a <= a-max)")->required();
    family_cmd->add_option("--b-max", b_max, "largest b (scan runs 2 <= b <= b-max)")->required();
    add_common(family_cmd, true);

    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "run the shipped nodal/cuspidal curve corpus");
    corpus_cmd->add_option("--quartics", quartics, "number of sampled four-line nodal quartics");
    corpus_cmd->add_option("--corpus-seed", corpus_seed, "seed for the quartic sampler");
    add_common(corpus_cmd, true);

    CLI::App* cubic_cmd = app.add_subcommand(
        "cubic-experiment", "randomized gradient-linear-type survey of cubic surfaces in P^3");
    cubic_cmd->add_option("--trials", trials, "number of trials (trial 0 is the Cayley cubic)")
        ->required();
    cubic_cmd->add_option("--seed", seed, "PRNG seed (same seed, same samples)");
    add_common(cubic_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const aluffi::LimitScope scope(limits);

    if (*analyze_cmd) {
        const auto names = split_names(vars_csv);
        for (const auto& n : names)
            if (n.empty()) {
                std::cerr << "error: --vars needs a comma-separated list of nonempty names\n";
                return kExitUsage;
            }
        aluffi::RingPtr ring;
        try {
            ring = aluffi::make_ring(names);
        } catch (const aluffi::DomainError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
        const aluffi::Polynomial f = aluffi::parse_polynomial(poly_text, ring);
        aluffi::AnalysisOptions options;
        options.projective = projective;
        options.presentations = presentations;
        options.deep = deep;
        const aluffi::AnalysisReport report = aluffi::analyze(f, options);
        std::cout << aluffi::report_text(report);
        return write_json(json_path, aluffi::report_json(report)) ? kExitOk : kExitUsage;
    }

    if (*family_cmd) {
        const auto summary = aluffi::family_scan(a_max, b_max, jobs);
        std::cout << aluffi::family_scan_text(summary);
        if (!write_json(json_path, aluffi::family_scan_json(summary)))
            return kExitUsage;
        return summary.disagreements == 0 ? kExitOk : kExitDomain;
    }

    if (*corpus_cmd) {
        const auto summary =
            aluffi::run_corpus(aluffi::corpus_entries(quartics, corpus_seed), jobs);
        std::cout << aluffi::corpus_text(summary);
        if (!write_json(json_path, aluffi::corpus_json(summary)))
            return kExitUsage;
        return summary.all_match ? kExitOk : kExitDomain;
    }

    const auto summary = aluffi::cubic_experiment(trials, seed, jobs);
    std::cout << aluffi::cubic_experiment_text(summary);
    if (!write_json(json_path, aluffi::cubic_experiment_json(summary)))
        return kExitUsage;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const aluffi::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const aluffi::LimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const aluffi::InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const aluffi::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
