#pragma once

#include "aluffi/blowup.hpp"
#include "aluffi/hypersurface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aluffi {

struct AnalysisOptions {
    bool projective = false;
    bool presentations = false;
    // Projective only: also run the direct Sym-vs-Rees comparison on the
    // gradient ideal and check it against the chart-wise verdict.
    bool deep = false;
};

// Assembled verdicts for one hypersurface.  Optional verdicts are absent
// when they do not apply (locally Eulerian / Jacobian linear type are
// affine notions, gradient linear type is projective).
struct AnalysisReport {
    std::string polynomial;
    std::vector<std::string> variables;
    bool projective = false;

    bool reduced = false;
    bool isolated_singularities = false;

    std::optional<bool> locally_eulerian;
    std::optional<bool> jacobian_linear_type;
    std::optional<Polynomial> linear_type_witness;
    std::optional<bool> gradient_linear_type;
    std::vector<ChartVerdict> charts;
    std::optional<bool> deep_gradient_linear_type;

    std::vector<SingularityReport> singular_points;
    bool singular_points_complete = false;

    std::optional<PresentationIdeal> sym;
    std::optional<PresentationIdeal> rees;
    std::optional<PresentationIdeal> aluffi;

    double seconds = 0.0;
};

// Runs the full pipeline and cross-checks the verdicts (locally Eulerian
// vs. linear type vs. mu = tau) before returning; disagreement is an
// InternalError, never a silently inconsistent report.  Throws
// DomainError when f is not reduced or the singularities are not
// isolated.
AnalysisReport analyze(const Polynomial& f, const AnalysisOptions& options);

std::string report_text(const AnalysisReport& report);
std::string report_json(const AnalysisReport& report);

// ----- family scan -------------------------------------------------------

struct FamilyScanSummary {
    std::uint64_t a_max = 0, b_max = 0;
    std::vector<FamilyMemberVerdict> records;
    std::uint64_t degenerate_count = 0;
    std::uint64_t definite_predictions = 0;
    std::uint64_t disagreements = 0;
    double seconds = 0.0;
};

// All members 2 <= a <= a_max, 2 <= b <= b_max, 0 <= c <= a, 0 <= d <= b,
// in that nesting order; `jobs` worker threads, order-deterministic.
FamilyScanSummary family_scan(std::uint64_t a_max, std::uint64_t b_max, unsigned jobs);

std::string family_scan_text(const FamilyScanSummary& summary);
std::string family_scan_json(const FamilyScanSummary& summary);

// ----- curve corpus ------------------------------------------------------

struct CorpusEntry {
    std::string name;
    std::string polynomial; // homogeneous, in x, y, z
    bool expected_gradient_linear_type = true;
    // expected singularity labels at the rational singular points, sorted
    std::vector<std::string> expected_labels;
};

struct CorpusResult {
    CorpusEntry entry;
    bool gradient_linear_type = false;
    std::vector<std::string> labels; // sorted
    bool points_complete = false;
    bool match = false;
};

struct CorpusSummary {
    std::vector<CorpusResult> results;
    bool all_match = true;
    double seconds = 0.0;
};

// The shipped list: nodal cubic, cuspidal cubic, three concurrent lines,
// conic + secant, conic + tangent, and `quartic_count` four-line nodal
// quartics sampled deterministically from `seed` (distinct lines, no
// three concurrent, six distinct rational nodes each).
std::vector<CorpusEntry> corpus_entries(std::uint64_t quartic_count, std::uint64_t seed);

CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, unsigned jobs);

std::string corpus_text(const CorpusSummary& summary);
std::string corpus_json(const CorpusSummary& summary);

// ----- cubic experiment --------------------------------------------------

enum class TrialStatus { ok, degenerate, limit };

struct CubicTrial {
    std::uint64_t index = 0;
    std::string polynomial;
    TrialStatus status = TrialStatus::degenerate;
    std::string note;            // reason when degenerate / limit
    bool smooth = false;         // meaningful when status == ok
    std::optional<bool> gradient_linear_type;
};

struct CubicExperimentSummary {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<CubicTrial> records;
    std::uint64_t ok_count = 0;
    std::uint64_t smooth_count = 0;
    std::uint64_t singular_true = 0;
    std::uint64_t singular_false = 0;
    std::uint64_t degenerate_count = 0;
    std::uint64_t limit_count = 0;
    std::optional<std::string> counterexample; // first gradient-linear-type = false
    double seconds = 0.0;
};

// Random integer-coefficient cubic surfaces in P^3; trial 0 is always the
// Cayley cubic, later trials are drawn from `seed` (same seed, same
// samples).  Cubics that are non-reduced or have non-isolated
// singularities are recorded as degenerate; per-trial resource-limit
// hits are recorded, not fatal.  Note a reducible surface in P^3 is
// singular along a curve, so every `ok` trial is irreducible.
CubicExperimentSummary cubic_experiment(std::uint64_t trials, std::uint64_t seed, unsigned jobs);

std::string cubic_experiment_text(const CubicExperimentSummary& summary);
std::string cubic_experiment_json(const CubicExperimentSummary& summary);

// ALUFFI_KIT_JOBS if set and positive, else hardware concurrency, else 1.
unsigned default_jobs();

} // namespace aluffi
