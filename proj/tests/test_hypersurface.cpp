#include <doctest.h>

#include "aluffi/errors.hpp"
#include "aluffi/hypersurface.hpp"
#include "aluffi/parse.hpp"

#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace aluffi;
using testsupport::local_dimension_oracle;

namespace {

Polynomial p(const RingPtr& ring, std::string_view text) {
    return parse_polynomial(text, ring);
}

RationalPoint origin2() {
    return RationalPoint::affine({Rational(0), Rational(0)});
}

// Independent milnor/tjurina via the truncated linear-algebra oracle.
void check_milnor_tjurina(const Polynomial& f, const RationalPoint& point,
                          std::uint64_t milnor, std::uint64_t tjurina) {
    const auto numbers = milnor_tjurina(f, point);
    CHECK(numbers.milnor == milnor);
    CHECK(numbers.tjurina == tjurina);

    const Polynomial local = f.translate(point.coords);
    std::vector<Polynomial> jac;
    for (std::size_t v = 0; v < f.ring()->var_count(); ++v)
        jac.push_back(local.derivative(v));
    CHECK(local_dimension_oracle(jac) == milnor);
    jac.push_back(local);
    CHECK(local_dimension_oracle(jac) == tjurina);
}

} // namespace

TEST_CASE("gradient and jacobian ideals") {
    auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "y^2 - x^3");
    const Ideal J = gradient_ideal(f);
    REQUIRE(J.generators().size() == 2);
    CHECK(J.generators()[0] == p(R, "-3*x^2"));
    CHECK(J.generators()[1] == p(R, "2*y"));

    const Ideal I = jacobian_ideal(f);
    REQUIRE(I.generators().size() == 3);
    CHECK(I.generators()[0] == f); // f is generator 0 by contract

    CHECK_THROWS_AS(gradient_ideal(Polynomial::constant(R, Rational(3))), DomainError);
}

TEST_CASE("reducedness certificates") {
    auto R2 = make_ring({"x", "y"});
    CHECK(check_reduced(AffineHypersurface(p(R2, "x*y"))));
    CHECK(!check_reduced(AffineHypersurface(p(R2, "x^2*y^2"))));
    CHECK(!check_reduced(AffineHypersurface(p(R2, "x^2"))));

    auto R3 = make_ring({"x", "y", "z"});
    CHECK(check_reduced(ProjectiveHypersurface(p(R3, "x*y*z"))));
    CHECK(!check_reduced(ProjectiveHypersurface(p(R3, "x^2*z"))));
}

TEST_CASE("isolated singularity certificates") {
    auto R2 = make_ring({"x", "y"});
    CHECK(has_isolated_singularities(AffineHypersurface(p(R2, "x*y*(x + y)"))));
    CHECK_THROWS_AS(has_isolated_singularities(AffineHypersurface(p(R2, "x^2*y"))),
                    DomainError); // not reduced

    auto R3 = make_ring({"x", "y", "z"});
    // two planes meet in a line: reduced but not isolated
    CHECK(!has_isolated_singularities(AffineHypersurface(p(R3, "x*y"))));
    CHECK(has_isolated_singularities(ProjectiveHypersurface(
        p(R3, "y^2*z - x^3")))); // cuspidal cubic: one singular point
}

TEST_CASE("quasi-homogeneous detection") {
    auto R = make_ring({"x", "y"});
    const auto cusp = quasi_homogeneous_type(p(R, "y^2 - x^3"));
    REQUIRE(cusp.has_value());
    CHECK(cusp->degree == 6);
    REQUIRE(cusp->weights.size() == 2);
    CHECK(cusp->weights[0] == 2);
    CHECK(cusp->weights[1] == 3);

    const auto quartic = quasi_homogeneous_type(p(R, "x^4 + x^2*y^2 + y^4"));
    REQUIRE(quartic.has_value());
    CHECK(quartic->degree == 4);
    CHECK(quartic->weights == std::vector<Integer>{1, 1});

    CHECK(!quasi_homogeneous_type(p(R, "x*y + x^3 + y^3")).has_value());
    CHECK(!quasi_homogeneous_type(p(R, "x^6 + x*y^3 + y^4")).has_value());

    auto R4 = make_ring({"x", "y", "z", "w"});
    const auto cayley = quasi_homogeneous_type(
        p(R4, "x*y*z + x*y*w + x*z*w + y*z*w"));
    REQUIRE(cayley.has_value());
    CHECK(cayley->degree == 3);
    CHECK(cayley->weights == std::vector<Integer>(4, Integer(1)));
}

TEST_CASE("weighted-homogeneous curve family members are detected") {
    // f = a x^{sq} + b y^{sp} + sum_{1<=r<s} c_r x^{(s-r)q} y^{rp}, gcd(p,q) = 1:
    // quasi-homogeneous of degree spq for weights (p, q)
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(41);
    const std::vector<std::tuple<unsigned, unsigned, unsigned>> shapes = {
        {2, 3, 2}, {3, 4, 2}, {2, 5, 3}, {3, 5, 2}, {1, 2, 4}};
    for (const auto& [pw, qw, s] : shapes) {
        std::vector<Term> terms;
        const auto coeff = [&] {
            long c = static_cast<long>(rng() % 9) - 4;
            return Rational(c == 0 ? 1 : c);
        };
        terms.push_back({Monomial::variable(2, 0, s * qw), coeff()});
        terms.push_back({Monomial::variable(2, 1, s * pw), coeff()});
        for (unsigned r = 1; r < s; ++r) {
            const long c = static_cast<long>(rng() % 7) - 3;
            if (c == 0)
                continue;
            terms.push_back({Monomial::variable(2, 0, (s - r) * qw)
                                 * Monomial::variable(2, 1, r * pw),
                             Rational(c)});
        }
        const Polynomial f = Polynomial::from_terms(R, terms);
        const auto type = quasi_homogeneous_type(f);
        REQUIRE(type.has_value());
        CHECK(type->weights == std::vector<Integer>{Integer(pw), Integer(qw)});
        CHECK(type->degree == Integer(static_cast<unsigned long>(s) * pw * qw));
    }
}

TEST_CASE("milnor and tjurina numbers") {
    auto R = make_ring({"x", "y"});
    check_milnor_tjurina(p(R, "y^2 - x^3"), origin2(), 2, 2);
    check_milnor_tjurina(p(R, "x*y + x^3 + y^3"), origin2(), 1, 1);
    check_milnor_tjurina(p(R, "x^4 - x^2*y^2 + y^5"), origin2(), 10, 9);
    check_milnor_tjurina(p(R, "x^5 + x^2*y^2 + y^5"), origin2(), 11, 10);
    check_milnor_tjurina(p(R, "y^2 - x^4"), origin2(), 3, 3);     // tacnode
    check_milnor_tjurina(p(R, "x*y*(x + y)"), origin2(), 4, 4);   // ordinary triple point
    // away from the origin
    check_milnor_tjurina(p(R, "y^2 - (x - 1)^3"),
                         RationalPoint::affine({Rational(1), Rational(0)}), 2, 2);

    // smooth point and off-curve point are rejected
    CHECK_THROWS_AS(milnor_tjurina(p(R, "y^2 - x^3"),
                                   RationalPoint::affine({Rational(1), Rational(1)})),
                    DomainError);
    CHECK_THROWS_AS(milnor_tjurina(p(R, "y^2 - x^3"),
                                   RationalPoint::affine({Rational(5), Rational(1)})),
                    DomainError);
}

TEST_CASE("locally Eulerian verdicts") {
    auto R = make_ring({"x", "y"});
    CHECK(is_locally_eulerian(AffineHypersurface(p(R, "y^2 - x^3"))));
    CHECK(is_locally_eulerian(AffineHypersurface(p(R, "x*y + x^3 + y^3"))));
    CHECK(!is_locally_eulerian(AffineHypersurface(p(R, "x^4 - x^2*y^2 + y^5"))));
    CHECK(!is_locally_eulerian(AffineHypersurface(p(R, "x^5 + x^2*y^2 + y^5"))));

    // pointwise form agrees at the singular point
    const AffineHypersurface bad(p(R, "x^4 - x^2*y^2 + y^5"));
    CHECK(!is_locally_eulerian(bad, origin2()));
    const AffineHypersurface cusp(p(R, "y^2 - x^3"));
    CHECK(is_locally_eulerian(cusp, origin2()));
}

TEST_CASE("rational singular points, affine") {
    auto R = make_ring({"x", "y"});
    const auto notE = rational_singular_points(
        AffineHypersurface(p(R, "x^4 - x^2*y^2 + y^5")));
    REQUIRE(notE.points.size() == 1);
    CHECK(notE.points[0] == origin2());
    CHECK(notE.complete);

    // four lines x = +-1, y = +-1: all four crossings are rational nodes
    const auto grid = rational_singular_points(
        AffineHypersurface(p(R, "(x^2 - 1)*(y^2 - 1)")));
    REQUIRE(grid.points.size() == 4);
    CHECK(grid.complete);
    for (const auto& point : grid.points) {
        const auto report = singular_point_report(p(R, "(x^2 - 1)*(y^2 - 1)"), point);
        CHECK(report.label == SingularityLabel::a_k);
        CHECK(report.a_index == 1);
        CHECK(report.milnor == 1);
        CHECK(report.tjurina == 1);
        CHECK(report.locally_eulerian);
    }
    // search results are sorted and duplicate-free
    for (std::size_t i = 0; i + 1 < grid.points.size(); ++i)
        CHECK(grid.points[i] != grid.points[i + 1]);

    // singular point with non-rational coordinates: x^2 = 2 stays invisible,
    // so the search must flag incompleteness
    const auto irrational = rational_singular_points(
        AffineHypersurface(p(R, "y^2 - (x^2 - 2)^2")));
    CHECK(irrational.points.empty());
    CHECK(!irrational.complete);
}

TEST_CASE("rational singular points, projective") {
    auto R4 = make_ring({"x", "y", "z", "w"});
    const ProjectiveHypersurface cayley(
        p(R4, "x*y*z + x*y*w + x*z*w + y*z*w"));
    const auto found = rational_singular_points(cayley);
    REQUIRE(found.points.size() == 4);
    CHECK(found.complete);
    // exactly the four coordinate points
    for (const auto& point : found.points) {
        REQUIRE(point.kind == RationalPoint::Kind::projective);
        int nonzero = 0;
        for (const auto& c : point.rep)
            if (c != 0)
                ++nonzero;
        CHECK(nonzero == 1);
    }

    auto R3 = make_ring({"x", "y", "z"});
    const auto conic_secant = rational_singular_points(
        ProjectiveHypersurface(p(R3, "(x^2 + y^2 - z^2)*y")));
    REQUIRE(conic_secant.points.size() == 2);
    CHECK(conic_secant.complete);
}

TEST_CASE("plane singularity classification") {
    auto R = make_ring({"x", "y"});

    const auto cusp = classify_plane_singularity(p(R, "y^2 - x^3"), origin2());
    CHECK(cusp.label == SingularityLabel::a_k);
    CHECK(cusp.a_index == 2);
    CHECK(cusp.multiplicity == 2);
    REQUIRE(cusp.quadratic_discriminant.has_value());
    CHECK(*cusp.quadratic_discriminant == 0);
    REQUIRE(cusp.tangent_line.has_value());
    CHECK(*cusp.tangent_line == p(R, "y"));
    CHECK(cusp.tangent_contact == 3);
    CHECK(cusp.label_string() == "A_2");

    const auto node = classify_plane_singularity(p(R, "x*y + x^3 + y^3"), origin2());
    CHECK(node.label == SingularityLabel::a_k);
    CHECK(node.a_index == 1);
    REQUIRE(node.quadratic_discriminant.has_value());
    CHECK(*node.quadratic_discriminant != 0);
    CHECK(!node.tangent_line.has_value()); // two distinct tangents

    const auto tacnode = classify_plane_singularity(p(R, "y^2 - x^4"), origin2());
    CHECK(tacnode.label == SingularityLabel::a_k);
    CHECK(tacnode.a_index == 3);
    CHECK(tacnode.tangent_contact == 4);

    const auto triple = classify_plane_singularity(p(R, "x*y*(x + y)"), origin2());
    CHECK(triple.label == SingularityLabel::non_double_point);
    CHECK(triple.multiplicity == 3);
    CHECK(triple.milnor == 4);
    CHECK(triple.label_string() == "non-double-point");

    CHECK_THROWS_AS(classify_plane_singularity(p(R, "y^2 - x^3"),
                                               RationalPoint::affine({Rational(1), Rational(1)})),
                    DomainError);
}

TEST_CASE("tangent line lying inside the curve has no finite contact") {
    auto R = make_ring({"x", "y"});
    // y * (y - x^2): double point at the origin with repeated-ish tangent y = 0,
    // but y = 0 is a component, so no finite contact order exists
    const auto report = classify_plane_singularity(p(R, "y*(y - x^2)"), origin2());
    CHECK(report.multiplicity == 2);
    REQUIRE(report.quadratic_discriminant.has_value());
    CHECK(*report.quadratic_discriminant == 0);
    REQUIRE(report.tangent_line.has_value());
    CHECK(*report.tangent_line == p(R, "y"));
    CHECK(!report.tangent_contact.has_value());
}

TEST_CASE("intersection multiplicity with a line") {
    auto R = make_ring({"x", "y"});
    const Polynomial cusp = p(R, "y^2 - x^3");
    CHECK(intersection_multiplicity_with_line(cusp, origin2(), p(R, "y")) == 3);
    CHECK(intersection_multiplicity_with_line(cusp, origin2(), p(R, "x")) == 2);
    CHECK(intersection_multiplicity_with_line(cusp, origin2(), p(R, "y - x")) == 2);

    const Polynomial node = p(R, "x*y + x^3 + y^3");
    CHECK(intersection_multiplicity_with_line(node, origin2(), p(R, "x + y")) == 2);
    CHECK(intersection_multiplicity_with_line(node, origin2(), p(R, "x")) == 3); // tangent

    // smooth point, transversal line
    const auto smooth = RationalPoint::affine({Rational(1), Rational(1)});
    CHECK(intersection_multiplicity_with_line(p(R, "y^2 - x^3"),
                                              RationalPoint::affine({Rational(1), Rational(-1)}),
                                              p(R, "x - 1")) == 1);
    (void)smooth;

    // line not through the point / line inside the curve
    CHECK_THROWS_AS(intersection_multiplicity_with_line(cusp, origin2(), p(R, "y - 1")),
                    DomainError);
    CHECK_THROWS_AS(intersection_multiplicity_with_line(p(R, "x*y*(x + y)"), origin2(),
                                                        p(R, "y")),
                    DomainError);
}

TEST_CASE("gradient linear type, chart by chart") {
    auto R4 = make_ring({"x", "y", "z", "w"});
    const auto cayley = gradient_linear_type(ProjectiveHypersurface(
        p(R4, "x*y*z + x*y*w + x*z*w + y*z*w")));
    CHECK(cayley.verdict);
    REQUIRE(cayley.charts.size() == 4);
    for (const auto& chart : cayley.charts)
        CHECK(chart.locally_eulerian);

    auto R3 = make_ring({"x", "y", "z"});
    const auto bad = gradient_linear_type(ProjectiveHypersurface(
        p(R3, "x^4*z - x^2*y^2*z + y^5")));
    CHECK(!bad.verdict);
    bool z_chart_failed = false;
    for (const auto& chart : bad.charts)
        if (chart.variable == "z" && !chart.locally_eulerian)
            z_chart_failed = true;
    CHECK(z_chart_failed);

    // every smooth projective hypersurface passes vacuously
    const auto smooth = gradient_linear_type(ProjectiveHypersurface(
        p(R3, "x^2 + y^2 + z^2")));
    CHECK(smooth.verdict);
}

TEST_CASE("family members") {
    auto R = make_ring({"x", "y"});
    CHECK(family_member(R, 3, 3, 1, 1) == p(R, "x^3 + x*y + y^3"));
    CHECK(family_member(R, 2, 3, 1, 1) == p(R, "x^2 + x*y + y^3"));
    // duplicate monomials merge
    CHECK(family_member(R, 3, 3, 3, 0) == p(R, "2*x^3 + y^3"));
    CHECK(family_member(R, 2, 2, 0, 0) == p(R, "x^2 + y^2 + 1"));
}

TEST_CASE("family verdict rows") {
    const auto row = [](std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
        return family_member_verdict(a, b, c, d);
    };

    // case (3): x^3 + xy + y^3 is a node, predicted and actually Eulerian
    auto r331 = row(3, 3, 1, 1);
    CHECK(r331.prediction_case == 3);
    CHECK(r331.predicted == true);
    CHECK(r331.locally_eulerian == true);
    CHECK(r331.agreement);

    // region I, not quasi-homogeneous: predicted false, actually false
    auto r5522 = row(5, 5, 2, 2);
    CHECK(r5522.prediction_case == 0);
    CHECK(r5522.region == "I");
    CHECK(!r5522.quasi_homogeneous);
    CHECK(r5522.predicted == false);
    CHECK(r5522.locally_eulerian == false);
    CHECK(r5522.agreement);

    // region I, quasi-homogeneous member
    auto r4422 = row(4, 4, 2, 2);
    CHECK(r4422.region == "I");
    CHECK(r4422.quasi_homogeneous);
    CHECK(r4422.predicted == true);
    CHECK(r4422.locally_eulerian == true);

    // case (5) fires even though region III also matches
    auto r3521 = row(3, 5, 2, 1);
    CHECK(r3521.prediction_case == 5);
    CHECK(r3521.predicted == true);
    CHECK(r3521.locally_eulerian == true);
    CHECK(r3521.agreement);

    // x^3 + y^2 + y^3: no case, no region (the c >= 1 guard), still Eulerian
    auto r3302 = row(3, 3, 0, 2);
    CHECK(r3302.prediction_case == 0);
    CHECK(r3302.region.empty());
    CHECK(!r3302.predicted.has_value());
    CHECK(r3302.locally_eulerian == true);
    CHECK(r3302.agreement);

    // x^3 + (1 + x) y^3: outside the Newton triangle, no prediction
    auto r3313 = row(3, 3, 1, 3);
    CHECK(r3313.prediction_case == 0);
    CHECK(r3313.region.empty());
    CHECK(!r3313.predicted.has_value());
    CHECK(r3313.locally_eulerian == true);
    auto r3331 = row(3, 3, 3, 1);
    CHECK(r3331.region.empty());
    CHECK(r3331.locally_eulerian == true);

    // case (1): c >= a and d >= b
    auto r2233 = row(2, 2, 3, 3);
    CHECK(r2233.prediction_case == 1);
    CHECK(r2233.agreement);

    // case (8): a == 2
    auto r2641 = row(2, 6, 4, 1);
    CHECK(r2641.prediction_case == 8);
    CHECK(r2641.agreement);

    // degenerate: constant member
    auto r0 = row(0, 0, 0, 0);
    CHECK(r0.status == FamilyStatus::degenerate);
    CHECK(r0.status_reason == "constant polynomial");
    CHECK(!r0.locally_eulerian.has_value());

    // smooth member: x + 1 + y
    auto r1100 = row(1, 1, 0, 0);
    CHECK(r1100.status == FamilyStatus::ok);
    CHECK(r1100.smooth);
    CHECK(r1100.locally_eulerian == true); // vacuously
}

TEST_CASE("constructor validation") {
    auto R2 = make_ring({"x", "y"});
    auto R3 = make_ring({"x", "y", "z"});
    CHECK_THROWS_AS(AffineHypersurface(Polynomial::constant(R2, Rational(1))), DomainError);
    CHECK_THROWS_AS(AffineHypersurface(Polynomial::zero(R2)), DomainError);
    CHECK_THROWS_AS(ProjectiveHypersurface(p(R3, "x^2 + y")), DomainError);     // not homogeneous
    CHECK_THROWS_AS(ProjectiveHypersurface(p(R3, "x + y + z")), DomainError);   // degree < 2
    auto R1 = make_ring({"x"});
    CHECK_THROWS_AS(ProjectiveHypersurface(p(R1, "x^2")), DomainError);         // too few variables
}
