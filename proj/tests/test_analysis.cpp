#include <doctest.h>

#include "aluffi/analysis.hpp"
#include "aluffi/errors.hpp"
#include "aluffi/parse.hpp"

#include <json.hpp>

#include <cstdlib>

using namespace aluffi;

namespace {

AnalysisReport run(const std::string& poly, const std::vector<std::string>& vars,
                   AnalysisOptions options) {
    auto ring = make_ring(vars);
    return analyze(parse_polynomial(poly, ring), options);
}

} // namespace

TEST_CASE("affine analysis of the non-Eulerian quartic-quintic") {
    AnalysisOptions options;
    options.presentations = true;
    const auto report = run("x^4 - x^2*y^2 + y^5", {"x", "y"}, options);

    CHECK(!report.projective);
    CHECK(report.reduced);
    CHECK(report.isolated_singularities);
    CHECK(report.locally_eulerian == false);
    CHECK(report.jacobian_linear_type == false);
    REQUIRE(report.linear_type_witness.has_value());
    CHECK(!report.gradient_linear_type.has_value());

    REQUIRE(report.singular_points.size() == 1);
    const auto& sp = report.singular_points[0];
    CHECK(sp.milnor == 10);
    CHECK(sp.tjurina == 9);
    CHECK(!sp.locally_eulerian);
    CHECK(report.singular_points_complete);

    REQUIRE(report.sym.has_value());
    REQUIRE(report.rees.has_value());
    REQUIRE(report.aluffi.has_value());
    CHECK(report.seconds >= 0.0);
}

TEST_CASE("affine analysis of the cusp") {
    AnalysisOptions options;
    options.presentations = true;
    const auto report = run("y^2 - x^3", {"x", "y"}, options);
    CHECK(report.locally_eulerian == true);
    CHECK(report.jacobian_linear_type == true);
    CHECK(!report.linear_type_witness.has_value());
    REQUIRE(report.singular_points.size() == 1);
    CHECK(report.singular_points[0].label_string() == "A_2");
    REQUIRE(report.aluffi.has_value());
    CHECK(report.aluffi->quasi_homogeneous_shape.has_value());
}

TEST_CASE("projective analysis of the Cayley cubic") {
    AnalysisOptions options;
    options.projective = true;
    options.deep = true;
    const auto report = run("x*y*z + x*y*w + x*z*w + y*z*w", {"x", "y", "z", "w"}, options);

    CHECK(report.projective);
    CHECK(report.gradient_linear_type == true);
    CHECK(report.deep_gradient_linear_type == true);
    CHECK(!report.locally_eulerian.has_value());
    REQUIRE(report.charts.size() == 4);
    for (const auto& chart : report.charts)
        CHECK(chart.locally_eulerian);
    REQUIRE(report.singular_points.size() == 4);
    CHECK(report.singular_points_complete);
    for (const auto& sp : report.singular_points) {
        CHECK(sp.label_string() == "A_1");
        CHECK(sp.milnor == 1);
        CHECK(sp.tjurina == 1);
    }
}

TEST_CASE("projective analysis of a chart-failing quintic") {
    AnalysisOptions options;
    options.projective = true;
    options.deep = true;
    const auto report = run("x^4*z - x^2*y^2*z + y^5", {"x", "y", "z"}, options);
    CHECK(report.gradient_linear_type == false);
    CHECK(report.deep_gradient_linear_type == false);
    REQUIRE(report.linear_type_witness.has_value());
    bool z_failed = false;
    for (const auto& chart : report.charts)
        if (chart.variable == "z" && !chart.locally_eulerian)
            z_failed = true;
    CHECK(z_failed);
}

TEST_CASE("analysis rejects invalid input") {
    CHECK_THROWS_AS(run("x^2*y^2", {"x", "y"}, {}), DomainError);
    AnalysisOptions projective;
    projective.projective = true;
    // reduced, but singular along a line
    CHECK_THROWS_AS(run("x^2*w + y^2*w", {"x", "y", "z", "w"}, projective), DomainError);
    // projective flag on a non-homogeneous polynomial
    CHECK_THROWS_AS(run("x^2 + y", {"x", "y", "z"}, projective), DomainError);
}

TEST_CASE("analysis json is valid and faithful") {
    AnalysisOptions options;
    options.presentations = true;
    const auto report = run("x^4 - x^2*y^2 + y^5", {"x", "y"}, options);
    const auto doc = nlohmann::json::parse(report_json(report));

    CHECK(doc.at("input").at("polynomial").get<std::string>() == report.polynomial);
    CHECK(doc.at("input").at("projective").get<bool>() == false);
    CHECK(doc.at("verdicts").at("reduced").get<bool>() == true);
    CHECK(doc.at("verdicts").at("locally_eulerian").get<bool>() == false);
    CHECK(doc.at("verdicts").at("jacobian_linear_type").get<bool>() == false);
    CHECK(doc.at("verdicts").at("singular_points_complete").get<bool>() == true);
    REQUIRE(doc.at("singular_points").is_array());
    REQUIRE(doc.at("singular_points").size() == 1);
    CHECK(doc.at("singular_points")[0].at("milnor").get<std::uint64_t>() == 10);
    CHECK(doc.at("singular_points")[0].at("tjurina").get<std::uint64_t>() == 9);
    REQUIRE(!doc.at("presentations").is_null());
    CHECK(doc.at("presentations").at("sym").at("generators").is_array());
    CHECK(doc.at("timings").at("seconds").is_number());

    // the witness string parses back in the sym presentation ring
    const std::string witness = doc.at("verdicts").at("linear_type_witness").get<std::string>();
    REQUIRE(report.sym.has_value());
    CHECK(parse_polynomial(witness, report.sym->extended_ring)
          == *report.linear_type_witness);

    // text report mentions the headline verdicts
    const std::string text = report_text(report);
    CHECK(text.find("locally Eulerian") != std::string::npos);
    CHECK(text.find("no") != std::string::npos);
}

TEST_CASE("family scan counts and determinism") {
    const auto scan = family_scan(3, 3, 2);
    CHECK(scan.a_max == 3);
    CHECK(scan.b_max == 3);
    // 2 <= a,b <= 3, 0 <= c <= a, 0 <= d <= b: sum (a+1)(b+1) = (3+4)^2
    CHECK(scan.records.size() == 49);
    CHECK(scan.disagreements == 0);

    const auto again = family_scan(3, 3, 4);
    REQUIRE(again.records.size() == scan.records.size());
    for (std::size_t i = 0; i < scan.records.size(); ++i) {
        CHECK(scan.records[i].a == again.records[i].a);
        CHECK(scan.records[i].b == again.records[i].b);
        CHECK(scan.records[i].c == again.records[i].c);
        CHECK(scan.records[i].d == again.records[i].d);
        CHECK(scan.records[i].locally_eulerian == again.records[i].locally_eulerian);
        CHECK(scan.records[i].predicted == again.records[i].predicted);
    }

    // summary counters agree with the records
    std::uint64_t degenerate = 0, definite = 0, disagree = 0;
    for (const auto& r : scan.records) {
        if (r.status == FamilyStatus::degenerate)
            ++degenerate;
        if (r.predicted.has_value() && r.locally_eulerian.has_value())
            ++definite;
        if (!r.agreement)
            ++disagree;
    }
    CHECK(scan.degenerate_count == degenerate);
    CHECK(scan.definite_predictions == definite);
    CHECK(scan.disagreements == disagree);

    const auto doc = nlohmann::json::parse(family_scan_json(scan));
    CHECK(doc.at("summary").at("members").get<std::uint64_t>() == 49);
    CHECK(doc.at("summary").at("disagreements").get<std::uint64_t>() == 0);

    CHECK_THROWS_AS(family_scan(1, 3, 1), DomainError);
}

TEST_CASE("corpus entries are deterministic and analyze clean") {
    const auto entries = corpus_entries(2, 20260825);
    REQUIRE(entries.size() == 7); // five named curves + two quartics
    CHECK(entries[0].name == "nodal cubic");
    CHECK(entries[1].name == "cuspidal cubic");
    const auto entries_again = corpus_entries(2, 20260825);
    for (std::size_t i = 0; i < entries.size(); ++i)
        CHECK(entries[i].polynomial == entries_again[i].polynomial);
    const auto different = corpus_entries(2, 7);
    CHECK(different[5].polynomial != entries[5].polynomial);

    const auto summary = run_corpus(entries, 2);
    CHECK(summary.all_match);
    REQUIRE(summary.results.size() == 7);
    for (const auto& result : summary.results) {
        CHECK(result.match);
        CHECK(result.points_complete);
        CHECK(result.gradient_linear_type == result.entry.expected_gradient_linear_type);
        CHECK(result.labels == result.entry.expected_labels);
    }
    // each four-line quartic carries six nodes
    for (std::size_t i = 5; i < 7; ++i)
        CHECK(summary.results[i].labels
              == std::vector<std::string>(6, "A_1"));

    const auto doc = nlohmann::json::parse(corpus_json(summary));
    CHECK(doc.at("all_match").get<bool>() == true);
}

TEST_CASE("cubic experiment bookkeeping") {
    const auto summary = cubic_experiment(4, 99, 2);
    CHECK(summary.trials == 4);
    REQUIRE(summary.records.size() == 4);
    // trial zero is pinned to the Cayley cubic
    CHECK(summary.records[0].status == TrialStatus::ok);
    CHECK(!summary.records[0].smooth);
    CHECK(summary.records[0].gradient_linear_type == true);

    CHECK(summary.ok_count + summary.degenerate_count + summary.limit_count == 4);
    std::uint64_t smooth = 0, strue = 0, sfalse = 0;
    for (const auto& trial : summary.records) {
        if (trial.status != TrialStatus::ok)
            continue;
        if (trial.smooth)
            ++smooth;
        else if (trial.gradient_linear_type == true)
            ++strue;
        else if (trial.gradient_linear_type == false)
            ++sfalse;
    }
    CHECK(summary.smooth_count == smooth);
    CHECK(summary.singular_true == strue);
    CHECK(summary.singular_false == sfalse);

    // determinism under the same seed, regardless of worker count
    const auto again = cubic_experiment(4, 99, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(summary.records[i].polynomial == again.records[i].polynomial);
        CHECK(summary.records[i].status == again.records[i].status);
        CHECK(summary.records[i].gradient_linear_type
              == again.records[i].gradient_linear_type);
    }

    const auto doc = nlohmann::json::parse(cubic_experiment_json(summary));
    CHECK(doc.at("trials").get<std::uint64_t>() == 4);
    CHECK(doc.at("records").size() == 4);
}

TEST_CASE("default job count reads the environment") {
    ::setenv("ALUFFI_KIT_JOBS", "3", 1);
    CHECK(default_jobs() == 3);
    ::setenv("ALUFFI_KIT_JOBS", "not-a-number", 1);
    CHECK(default_jobs() >= 1);
    ::setenv("ALUFFI_KIT_JOBS", "0", 1);
    CHECK(default_jobs() >= 1);
    ::unsetenv("ALUFFI_KIT_JOBS");
    CHECK(default_jobs() >= 1);
}
