#include "aluffi/analysis.hpp"

#include "aluffi/errors.hpp"
#include "aluffi/limits.hpp"
#include "aluffi/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>
#include <utility>

namespace aluffi {

namespace {

using nlohmann::json;

class Stopwatch {
public:
    double seconds() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Runs fn(0..count-1) on `jobs` threads; each worker inherits the
// caller's resource limits.  Exceptions are rethrown in index order, so
// behavior is deterministic regardless of scheduling.
void run_parallel(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (count == 0)
        return;
    if (jobs <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    const ResourceLimits limits = current_limits();
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            LimitScope scope(limits);
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::string label_of(const SingularityReport& rep) { return rep.label_string(); }

SingularityReport projective_point_report(const Polynomial& f, const RationalPoint& p) {
    const Polynomial chart_poly = f.dehomogenize(p.chart);
    SingularityReport rep = singular_point_report(chart_poly, RationalPoint::affine(p.coords));
    rep.point = p; // report the projective point, not its chart shadow
    return rep;
}

json point_json(const SingularityReport& rep) {
    json evidence;
    evidence["a_index"] =
        rep.label == SingularityLabel::a_k ? json(rep.a_index) : json(nullptr);
    evidence["quadratic_discriminant"] =
        rep.quadratic_discriminant ? json(to_string(*rep.quadratic_discriminant)) : json(nullptr);
    evidence["tangent_line"] =
        rep.tangent_line ? json(rep.tangent_line->to_string()) : json(nullptr);
    evidence["tangent_contact"] =
        rep.tangent_contact ? json(*rep.tangent_contact) : json(nullptr);
    return json{{"point", rep.point.to_string()},
                {"multiplicity", rep.multiplicity},
                {"milnor", rep.milnor},
                {"tjurina", rep.tjurina},
                {"locally_eulerian", rep.locally_eulerian},
                {"label", rep.label_string()},
                {"evidence", evidence}};
}

json presentation_json(const PresentationIdeal& p) {
    json gens = json::array();
    for (const auto& g : p.generators)
        gens.push_back(g.to_string());
    json reduced = json::array();
    for (const auto& g : p.reduced_basis)
        reduced.push_back(g.to_string());
    json degrees = json::array();
    for (auto d : p.t_degrees)
        degrees.push_back(d);
    json out{{"generators", gens}, {"reduced_basis", reduced}, {"t_degrees", degrees}};
    const auto shape_json = [](const std::vector<Polynomial>& shape) {
        json arr = json::array();
        for (const auto& g : shape)
            arr.push_back(g.to_string());
        return arr;
    };
    if (p.quasi_homogeneous_shape)
        out["quasi_homogeneous_shape"] = shape_json(*p.quasi_homogeneous_shape);
    if (p.eulerian_shape)
        out["eulerian_shape"] = shape_json(*p.eulerian_shape);
    return out;
}

template <typename T> json opt_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

} // namespace

AnalysisReport analyze(const Polynomial& f, const AnalysisOptions& options) {
    const Stopwatch clock;
    AnalysisReport report;
    report.polynomial = f.to_string();
    report.variables = f.ring()->var_names();
    report.projective = options.projective;

    if (!options.projective) {
        const AffineHypersurface X(f);
        if (!check_reduced(X))
            throw DomainError("hypersurface is not reduced");
        report.reduced = true;
        if (!has_isolated_singularities(X))
            throw DomainError("singular locus is not zero-dimensional");
        report.isolated_singularities = true;

        const RationalPointSearch search = rational_singular_points(X);
        report.singular_points_complete = search.complete;
        for (const auto& p : search.points)
            report.singular_points.push_back(singular_point_report(f, p));

        report.locally_eulerian = is_locally_eulerian(X);

        const Ideal I = jacobian_ideal(f);
        PresentationIdeal sym_pres = sym_ideal(I);
        PresentationIdeal rees_pres = rees_ideal(I);
        const LinearTypeVerdict verdict = compare_presentations(sym_pres, rees_pres);
        report.jacobian_linear_type = verdict.is_linear_type;
        report.linear_type_witness = verdict.witness;

        if (*report.locally_eulerian != verdict.is_linear_type)
            throw InternalError("locally-Eulerian and Jacobian-linear-type verdicts disagree");
        if (report.singular_points_complete) {
            bool all_lci = true;
            for (const auto& rep : report.singular_points)
                all_lci = all_lci && rep.milnor == rep.tjurina;
            if (all_lci != *report.locally_eulerian)
                throw InternalError("mu = tau pattern disagrees with the locally-Eulerian verdict");
        }

        if (options.presentations) {
            report.aluffi = aluffi_presentation(f);
            report.sym = std::move(sym_pres);
            report.rees = std::move(rees_pres);
        }
    } else {
        const ProjectiveHypersurface X(f);
        const GradientLinearTypeVerdict glt = gradient_linear_type(X); // validates the input
        report.reduced = true;
        report.isolated_singularities = true;
        report.gradient_linear_type = glt.verdict;
        report.charts = glt.charts;

        const RationalPointSearch search = rational_singular_points(X);
        report.singular_points_complete = search.complete;
        for (const auto& p : search.points)
            report.singular_points.push_back(projective_point_report(f, p));

        if (report.singular_points_complete) {
            bool all_lci = true;
            for (const auto& rep : report.singular_points)
                all_lci = all_lci && rep.milnor == rep.tjurina;
            if (all_lci != glt.verdict)
                throw InternalError("mu = tau pattern disagrees with the chart-wise verdict");
        }

        if (options.deep || options.presentations) {
            const Ideal J = gradient_ideal(f);
            PresentationIdeal sym_pres = sym_ideal(J);
            PresentationIdeal rees_pres = rees_ideal(J);
            if (options.deep) {
                const LinearTypeVerdict verdict = compare_presentations(sym_pres, rees_pres);
                report.deep_gradient_linear_type = verdict.is_linear_type;
                report.linear_type_witness = verdict.witness;
                if (verdict.is_linear_type != glt.verdict)
                    throw InternalError("direct Rees comparison disagrees with the chart-wise verdict");
            }
            if (options.presentations) {
                report.sym = std::move(sym_pres);
                report.rees = std::move(rees_pres);
            }
        }
    }
    report.seconds = clock.seconds();
    return report;
}

std::string report_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << (report.projective ? "projective hypersurface " : "affine hypersurface ")
        << report.polynomial << "\n";
    out << "  variables:";
    for (const auto& v : report.variables)
        out << " " << v;
    out << "\n";
    out << "  reduced: yes\n  isolated singularities: yes\n";
    if (report.locally_eulerian)
        out << "  locally Eulerian: " << (*report.locally_eulerian ? "yes" : "no") << "\n";
    if (report.jacobian_linear_type)
        out << "  Jacobian linear type: " << (*report.jacobian_linear_type ? "yes" : "no") << "\n";
    if (report.gradient_linear_type) {
        out << "  gradient linear type: " << (*report.gradient_linear_type ? "yes" : "no") << "\n";
        for (const auto& chart : report.charts)
            out << "    chart " << chart.variable << " = 1: " << chart.equation.to_string()
                << "  locally Eulerian: " << (chart.locally_eulerian ? "yes" : "no") << "\n";
    }
    if (report.deep_gradient_linear_type)
        out << "  direct Rees comparison: " << (*report.deep_gradient_linear_type ? "yes" : "no")
            << "\n";
    if (report.linear_type_witness)
        out << "  witness (Rees relation outside Sym): " << report.linear_type_witness->to_string()
            << "\n";
    out << "  rational singular points (" << (report.singular_points_complete ? "all" : "possibly not all")
        << " singular points are rational):\n";
    if (report.singular_points.empty())
        out << "    none\n";
    for (const auto& rep : report.singular_points) {
        out << "    " << rep.point.to_string() << "  mult " << rep.multiplicity << "  mu "
            << rep.milnor << "  tau " << rep.tjurina << "  " << rep.label_string()
            << (rep.locally_eulerian ? "  locally Eulerian" : "  not locally Eulerian") << "\n";
        if (rep.tangent_line)
            out << "      repeated tangent " << rep.tangent_line->to_string() << ", contact "
                << (rep.tangent_contact ? std::to_string(*rep.tangent_contact) : "infinite")
                << "\n";
    }
    const auto print_pres = [&out](const char* name, const PresentationIdeal& p) {
        out << "  " << name << " relations (ring";
        for (const auto& v : p.extended_ring->var_names())
            out << " " << v;
        out << "):\n";
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            out << "    " << p.generators[i].to_string() << "   [T-degree " << p.t_degrees[i]
                << "]\n";
        out << "    reduced basis:";
        if (p.reduced_basis.empty())
            out << " (zero ideal)";
        for (const auto& g : p.reduced_basis)
            out << "  " << g.to_string();
        out << "\n";
    };
    if (report.sym)
        print_pres("Sym", *report.sym);
    if (report.rees)
        print_pres("Rees", *report.rees);
    if (report.aluffi) {
        print_pres("Aluffi", *report.aluffi);
        if (report.aluffi->quasi_homogeneous_shape) {
            out << "  quasi-homogeneous shape (verified equal):";
            for (const auto& g : *report.aluffi->quasi_homogeneous_shape)
                out << "  " << g.to_string();
            out << "\n";
        }
        if (report.aluffi->eulerian_shape) {
            out << "  locally-Eulerian shape (verified equal):";
            for (const auto& g : *report.aluffi->eulerian_shape)
                out << "  " << g.to_string();
            out << "\n";
        }
    }
    out << "  elapsed: " << report.seconds << " s\n";
    return out.str();
}

std::string report_json(const AnalysisReport& report) {
    json verdicts{{"reduced", report.reduced},
                  {"isolated", report.isolated_singularities},
                  {"locally_eulerian", opt_json(report.locally_eulerian)},
                  {"jacobian_linear_type", opt_json(report.jacobian_linear_type)},
                  {"gradient_linear_type", opt_json(report.gradient_linear_type)},
                  {"deep_gradient_linear_type", opt_json(report.deep_gradient_linear_type)},
                  {"singular_points_complete", report.singular_points_complete}};
    verdicts["linear_type_witness"] =
        report.linear_type_witness ? json(report.linear_type_witness->to_string()) : json(nullptr);
    json charts = json::array();
    for (const auto& chart : report.charts)
        charts.push_back(json{{"chart", chart.chart},
                              {"variable", chart.variable},
                              {"equation", chart.equation.to_string()},
                              {"locally_eulerian", chart.locally_eulerian}});
    verdicts["charts"] = charts;

    json points = json::array();
    for (const auto& rep : report.singular_points)
        points.push_back(point_json(rep));

    json presentations;
    if (report.sym || report.rees || report.aluffi) {
        presentations = json::object();
        presentations["sym"] = report.sym ? presentation_json(*report.sym) : json(nullptr);
        presentations["rees"] = report.rees ? presentation_json(*report.rees) : json(nullptr);
        presentations["aluffi"] = report.aluffi ? presentation_json(*report.aluffi) : json(nullptr);
    } else {
        presentations = nullptr;
    }

    const json doc{{"input",
                    {{"polynomial", report.polynomial},
                     {"variables", report.variables},
                     {"projective", report.projective}}},
                   {"verdicts", verdicts},
                   {"singular_points", points},
                   {"presentations", presentations},
                   {"timings", {{"seconds", report.seconds}}}};
    return doc.dump(2) + "\n";
}

// ----- family scan ---------------------------------------------------------

FamilyScanSummary family_scan(std::uint64_t a_max, std::uint64_t b_max, unsigned jobs) {
    const Stopwatch clock;
    if (a_max < 2 || b_max < 2)
        throw DomainError("family scan needs a_max >= 2 and b_max >= 2");
    std::vector<std::array<std::uint64_t, 4>> grid;
    for (std::uint64_t a = 2; a <= a_max; ++a)
        for (std::uint64_t b = 2; b <= b_max; ++b)
            for (std::uint64_t c = 0; c <= a; ++c)
                for (std::uint64_t d = 0; d <= b; ++d)
                    grid.push_back({a, b, c, d});

    std::vector<std::optional<FamilyMemberVerdict>> slots(grid.size());
    run_parallel(grid.size(), jobs, [&](std::size_t i) {
        const auto [a, b, c, d] = grid[i];
        slots[i] = family_member_verdict(a, b, c, d);
    });

    FamilyScanSummary summary;
    summary.a_max = a_max;
    summary.b_max = b_max;
    summary.records.reserve(grid.size());
    for (auto& slot : slots) {
        FamilyMemberVerdict& v = *slot;
        if (v.status == FamilyStatus::degenerate)
            ++summary.degenerate_count;
        if (v.predicted) {
            ++summary.definite_predictions;
            if (!v.agreement)
                ++summary.disagreements;
        }
        summary.records.push_back(std::move(v));
    }
    summary.seconds = clock.seconds();
    return summary;
}

namespace {

json family_record_json(const FamilyMemberVerdict& v) {
    return json{{"a", v.a},
                {"b", v.b},
                {"c", v.c},
                {"d", v.d},
                {"polynomial", v.f.to_string()},
                {"status", v.status == FamilyStatus::ok ? "ok" : "degenerate"},
                {"status_reason", v.status_reason},
                {"smooth", v.smooth},
                {"locally_eulerian", opt_json(v.locally_eulerian)},
                {"quasi_homogeneous", v.quasi_homogeneous},
                {"prediction_case", v.prediction_case},
                {"region", v.region},
                {"predicted", opt_json(v.predicted)},
                {"agreement", v.agreement}};
}

} // namespace

std::string family_scan_text(const FamilyScanSummary& summary) {
    std::ostringstream out;
    out << "family scan x^a + x^c*y^d + y^b, 2 <= a <= " << summary.a_max << ", 2 <= b <= "
        << summary.b_max << "\n";
    for (const auto& v : summary.records) {
        out << "  (" << v.a << "," << v.b << "," << v.c << "," << v.d << ") ";
        if (v.status == FamilyStatus::degenerate) {
            out << "degenerate: " << v.status_reason << "\n";
            continue;
        }
        if (v.smooth)
            out << "smooth";
        else
            out << (*v.locally_eulerian ? "locally Eulerian" : "not locally Eulerian");
        out << (v.quasi_homogeneous ? ", quasi-homogeneous" : "");
        if (v.prediction_case != 0)
            out << ", case " << v.prediction_case << " (predicted locally Eulerian)";
        else if (!v.region.empty())
            out << ", region " << v.region << " (predicted "
                << (*v.predicted ? "locally Eulerian: quasi-homogeneous)" : "not locally Eulerian)");
        else
            out << ", no prediction";
        out << (v.agreement ? "" : "  ** DISAGREES WITH PREDICTION **") << "\n";
    }
    out << "members: " << summary.records.size() << ", degenerate: " << summary.degenerate_count
        << ", definite predictions: " << summary.definite_predictions
        << ", disagreements: " << summary.disagreements << "\n";
    out << "elapsed: " << summary.seconds << " s\n";
    return out.str();
}

std::string family_scan_json(const FamilyScanSummary& summary) {
    json records = json::array();
    for (const auto& v : summary.records)
        records.push_back(family_record_json(v));
    const json doc{{"a_max", summary.a_max},
                   {"b_max", summary.b_max},
                   {"records", records},
                   {"summary",
                    {{"members", summary.records.size()},
                     {"degenerate", summary.degenerate_count},
                     {"definite_predictions", summary.definite_predictions},
                     {"disagreements", summary.disagreements}}},
                   {"timings", {{"seconds", summary.seconds}}}};
    return doc.dump(2) + "\n";
}

// ----- curve corpus ----------------------------------------------------------

namespace {

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Nonzero integer line coefficients in [-3, 3].
std::array<long, 3> sample_line(std::uint64_t& state) {
    while (true) {
        std::array<long, 3> line{};
        for (auto& c : line) {
            state = splitmix(state);
            c = static_cast<long>(state % 7) - 3;
        }
        if (line[0] != 0 || line[1] != 0 || line[2] != 0)
            return line;
    }
}

std::array<long, 3> cross(const std::array<long, 3>& u, const std::array<long, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

long det3(const std::array<long, 3>& a, const std::array<long, 3>& b,
          const std::array<long, 3>& c) {
    const auto x = cross(b, c);
    return a[0] * x[0] + a[1] * x[1] + a[2] * x[2];
}

std::string line_string(const std::array<long, 3>& line) {
    const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (line[i] == 0)
            continue;
        if (!s.empty())
            s += line[i] > 0 ? " + " : " - ";
        else if (line[i] < 0)
            s += "-";
        const long mag = line[i] < 0 ? -line[i] : line[i];
        if (mag != 1)
            s += std::to_string(mag) + "*";
        s += names[i];
    }
    return "(" + s + ")";
}

// Four distinct lines, no three concurrent, all six pairwise
// intersections distinct: the product is a nodal quartic with six
// rational nodes.
CorpusEntry sample_four_line_quartic(std::uint64_t& state, std::size_t index) {
    while (true) {
        std::array<std::array<long, 3>, 4> lines;
        for (auto& line : lines)
            line = sample_line(state);

        bool ok = true;
        std::vector<RationalPoint> nodes;
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j) {
                const auto p = cross(lines[i], lines[j]);
                if (p[0] == 0 && p[1] == 0 && p[2] == 0) {
                    ok = false; // dependent lines
                    break;
                }
                nodes.push_back(
                    RationalPoint::projective({Rational(p[0]), Rational(p[1]), Rational(p[2])}));
            }
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = i + 1; j < 4 && ok; ++j)
                for (int k = j + 1; k < 4 && ok; ++k)
                    if (det3(lines[i], lines[j], lines[k]) == 0)
                        ok = false; // three concurrent lines
        for (std::size_t i = 0; i < nodes.size() && ok; ++i)
            for (std::size_t j = i + 1; j < nodes.size() && ok; ++j)
                if (nodes[i] == nodes[j])
                    ok = false;
        if (!ok)
            continue;

        CorpusEntry entry;
        entry.name = "four-line nodal quartic #" + std::to_string(index + 1);
        entry.polynomial = line_string(lines[0]) + "*" + line_string(lines[1]) + "*" +
                           line_string(lines[2]) + "*" + line_string(lines[3]);
        entry.expected_gradient_linear_type = true;
        entry.expected_labels.assign(6, "A_1");
        return entry;
    }
}

} // namespace

std::vector<CorpusEntry> corpus_entries(std::uint64_t quartic_count, std::uint64_t seed) {
    std::vector<CorpusEntry> entries;
    entries.push_back({"nodal cubic", "y^2*z - x^3 - x^2*z", true, {"A_1"}});
    entries.push_back({"cuspidal cubic", "y^2*z - x^3", true, {"A_2"}});
    entries.push_back(
        {"three concurrent lines", "(y - z)*(z - x)*(x - y)", true, {"non-double-point"}});
    entries.push_back({"conic + secant line", "(x^2 + y^2 - z^2)*y", true, {"A_1", "A_1"}});
    entries.push_back({"conic + tangent line", "(x^2 + y^2 - z^2)*(x - z)", true, {"A_3"}});
    std::uint64_t state = splitmix(seed ^ 0xA1FFu);
    for (std::uint64_t q = 0; q < quartic_count; ++q)
        entries.push_back(sample_four_line_quartic(state, q));
    return entries;
}

CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, unsigned jobs) {
    const Stopwatch clock;
    const RingPtr ring = make_ring({"x", "y", "z"});
    std::vector<std::optional<CorpusResult>> slots(entries.size());
    run_parallel(entries.size(), jobs, [&](std::size_t i) {
        CorpusResult result;
        result.entry = entries[i];
        const Polynomial f = parse_polynomial(entries[i].polynomial, ring);
        const ProjectiveHypersurface X(f);
        result.gradient_linear_type = gradient_linear_type(X).verdict;
        const RationalPointSearch search = rational_singular_points(X);
        result.points_complete = search.complete;
        for (const auto& p : search.points)
            result.labels.push_back(label_of(projective_point_report(f, p)));
        std::sort(result.labels.begin(), result.labels.end());
        std::vector<std::string> expected = entries[i].expected_labels;
        std::sort(expected.begin(), expected.end());
        result.match = result.points_complete &&
                       result.gradient_linear_type == entries[i].expected_gradient_linear_type &&
                       result.labels == expected;
        slots[i] = std::move(result);
    });

    CorpusSummary summary;
    for (auto& slot : slots) {
        summary.all_match = summary.all_match && slot->match;
        summary.results.push_back(std::move(*slot));
    }
    summary.seconds = clock.seconds();
    return summary;
}

std::string corpus_text(const CorpusSummary& summary) {
    std::ostringstream out;
    out << "curve corpus (" << summary.results.size() << " curves)\n";
    for (const auto& r : summary.results) {
        out << "  " << r.entry.name << ": " << r.entry.polynomial << "\n";
        out << "    gradient linear type: " << (r.gradient_linear_type ? "yes" : "no")
            << " (expected " << (r.entry.expected_gradient_linear_type ? "yes" : "no") << ")\n";
        out << "    singularities:";
        for (const auto& l : r.labels)
            out << " " << l;
        out << (r.points_complete ? "" : "  [point search incomplete]");
        out << "  ->  " << (r.match ? "match" : "MISMATCH") << "\n";
    }
    out << (summary.all_match ? "all curves match" : "MISMATCHES PRESENT") << "\n";
    out << "elapsed: " << summary.seconds << " s\n";
    return out.str();
}

std::string corpus_json(const CorpusSummary& summary) {
    json entries = json::array();
    for (const auto& r : summary.results) {
        entries.push_back(json{{"name", r.entry.name},
                               {"polynomial", r.entry.polynomial},
                               {"expected",
                                {{"gradient_linear_type", r.entry.expected_gradient_linear_type},
                                 {"labels", r.entry.expected_labels}}},
                               {"actual",
                                {{"gradient_linear_type", r.gradient_linear_type},
                                 {"labels", r.labels},
                                 {"points_complete", r.points_complete}}},
                               {"match", r.match}});
    }
    const json doc{{"entries", entries},
                   {"all_match", summary.all_match},
                   {"timings", {{"seconds", summary.seconds}}}};
    return doc.dump(2) + "\n";
}

// ----- cubic experiment -------------------------------------------------------

namespace {

// Sparse random homogeneous cubic in x, y, z, w with coefficients in
// [-3, 3]; may be zero (caller records that as degenerate).
Polynomial sample_cubic(const RingPtr& ring, std::uint64_t trial_seed) {
    std::uint64_t state = trial_seed;
    std::vector<Term> terms;
    for (std::uint32_t i = 0; i <= 3; ++i)
        for (std::uint32_t j = 0; i + j <= 3; ++j)
            for (std::uint32_t k = 0; i + j + k <= 3; ++k) {
                const std::uint32_t l = 3 - i - j - k;
                state = splitmix(state);
                if ((state & 1) == 0)
                    continue; // keep the sample sparse
                state = splitmix(state);
                const long coeff = static_cast<long>(state % 7) - 3;
                if (coeff == 0)
                    continue;
                terms.push_back({Monomial(std::vector<std::uint32_t>{i, j, k, l}),
                                 Rational(coeff)});
            }
    return Polynomial::from_terms(ring, std::move(terms));
}

} // namespace

CubicExperimentSummary cubic_experiment(std::uint64_t trials, std::uint64_t seed, unsigned jobs) {
    const Stopwatch clock;
    CubicExperimentSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    const RingPtr ring = make_ring({"x", "y", "z", "w"});

    std::vector<CubicTrial> records(trials);
    run_parallel(trials, jobs, [&](std::size_t i) {
        CubicTrial& trial = records[i];
        trial.index = i;
        const Polynomial f = i == 0
                                 ? parse_polynomial("x*y*z + x*y*w + x*z*w + y*z*w", ring)
                                 : sample_cubic(ring, splitmix(seed ^ splitmix(i)));
        if (f.is_zero()) {
            trial.polynomial = "0";
            trial.status = TrialStatus::degenerate;
            trial.note = "zero sample";
            return;
        }
        trial.polynomial = f.to_string();
        try {
            const ProjectiveHypersurface X(f);
            if (!check_reduced(X)) {
                trial.status = TrialStatus::degenerate;
                trial.note = "not reduced";
                return;
            }
            if (!has_isolated_singularities(X)) {
                trial.status = TrialStatus::degenerate;
                trial.note = "non-isolated singularities";
                return;
            }
            trial.smooth = rational_singular_points(X).points.empty() &&
                           krull_dimension(gradient_ideal(f)) <= 0;
            trial.gradient_linear_type = gradient_linear_type(X).verdict;
            trial.status = TrialStatus::ok;
        } catch (const LimitError& e) {
            trial.status = TrialStatus::limit;
            trial.note = e.what();
        }
    });

    for (auto& trial : records) {
        switch (trial.status) {
        case TrialStatus::ok:
            ++summary.ok_count;
            if (trial.smooth) {
                ++summary.smooth_count;
            } else if (*trial.gradient_linear_type) {
                ++summary.singular_true;
            } else {
                ++summary.singular_false;
                if (!summary.counterexample)
                    summary.counterexample = trial.polynomial;
            }
            break;
        case TrialStatus::degenerate:
            ++summary.degenerate_count;
            break;
        case TrialStatus::limit:
            ++summary.limit_count;
            break;
        }
        summary.records.push_back(std::move(trial));
    }
    summary.seconds = clock.seconds();
    return summary;
}

std::string cubic_experiment_text(const CubicExperimentSummary& summary) {
    std::ostringstream out;
    out << "cubic surfaces in P^3, " << summary.trials << " trials, seed " << summary.seed
        << " (trial 0 = Cayley cubic)\n";
    for (const auto& t : summary.records) {
        out << "  trial " << t.index << ": ";
        switch (t.status) {
        case TrialStatus::ok:
            if (t.smooth)
                out << "smooth";
            else
                out << (*t.gradient_linear_type ? "singular, gradient linear type"
                                                : "singular, NOT gradient linear type");
            break;
        case TrialStatus::degenerate:
            out << "degenerate (" << t.note << ")";
            break;
        case TrialStatus::limit:
            out << "resource limit (" << t.note << ")";
            break;
        }
        out << "  " << t.polynomial << "\n";
    }
    out << "ok: " << summary.ok_count << " (smooth " << summary.smooth_count
        << ", singular gradient-linear-type " << summary.singular_true << ", singular not "
        << summary.singular_false << "), degenerate: " << summary.degenerate_count
        << ", limit: " << summary.limit_count << "\n";
    if (summary.counterexample)
        out << "counterexample candidate: " << *summary.counterexample << "\n";
    out << "elapsed: " << summary.seconds << " s\n";
    return out.str();
}

std::string cubic_experiment_json(const CubicExperimentSummary& summary) {
    json records = json::array();
    for (const auto& t : summary.records) {
        const char* status = t.status == TrialStatus::ok
                                 ? "ok"
                                 : (t.status == TrialStatus::degenerate ? "degenerate" : "limit");
        records.push_back(json{{"trial", t.index},
                               {"polynomial", t.polynomial},
                               {"status", status},
                               {"note", t.note},
                               {"smooth", t.status == TrialStatus::ok ? json(t.smooth) : json(nullptr)},
                               {"gradient_linear_type", opt_json(t.gradient_linear_type)}});
    }
    const json doc{{"trials", summary.trials},
                   {"seed", summary.seed},
                   {"records", records},
                   {"summary",
                    {{"ok", summary.ok_count},
                     {"smooth", summary.smooth_count},
                     {"singular_gradient_linear_type", summary.singular_true},
                     {"singular_not_gradient_linear_type", summary.singular_false},
                     {"degenerate", summary.degenerate_count},
                     {"limit", summary.limit_count}}},
                   {"counterexample", opt_json(summary.counterexample)},
                   {"timings", {{"seconds", summary.seconds}}}};
    return doc.dump(2) + "\n";
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ALUFFI_KIT_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

} // namespace aluffi
