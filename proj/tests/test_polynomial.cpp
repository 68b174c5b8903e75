#include <doctest.h>

#include "aluffi/errors.hpp"
#include "aluffi/parse.hpp"
#include "aluffi/polynomial.hpp"

#include "test_support.hpp"

#include <random>

using namespace aluffi;
using testsupport::random_polynomial;

namespace {

Polynomial p(const RingPtr& ring, std::string_view text) {
    return parse_polynomial(text, ring);
}

} // namespace

TEST_CASE("from_terms normalizes") {
    auto R = make_ring({"x", "y"});
    const Monomial xy = Monomial::variable(2, 0) * Monomial::variable(2, 1);
    std::vector<Term> soup = {
        {xy, Rational(2)},
        {Monomial::one(2), Rational(5)},
        {xy, Rational(-2)}, // cancels the first term
        {Monomial::variable(2, 1), Rational(0)},
    };
    const Polynomial f = Polynomial::from_terms(R, soup);
    CHECK(f == Polynomial::constant(R, Rational(5)));
    CHECK(f.term_count() == 1);
    CHECK(Polynomial::from_terms(R, {}).is_zero());
}

TEST_CASE("terms are sorted strictly descending") {
    auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "y + x^2*y + 3 + x*y^2");
    const auto drl = MonomialOrder::degrevlex(2);
    for (std::size_t i = 0; i + 1 < f.terms().size(); ++i)
        CHECK(drl.greater(f.terms()[i].monomial, f.terms()[i + 1].monomial));
    CHECK(f.leading_term().monomial == Monomial(std::vector<std::uint32_t>{2, 1}));
    // under lex, x*y^2 and x^2*y swap relative to nothing, but x^2*y still leads
    CHECK(f.leading_term(MonomialOrder::lex(2)).monomial
          == Monomial(std::vector<std::uint32_t>{2, 1}));
}

TEST_CASE("ring axioms on random polynomials") {
    auto R = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 250; ++trial) {
        const Polynomial a = random_polynomial(R, rng, 4, 4);
        const Polynomial b = random_polynomial(R, rng, 4, 4);
        const Polynomial c = random_polynomial(R, rng, 4, 4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial::zero(R));
        CHECK(a + Polynomial::zero(R) == a);
        CHECK(a * Polynomial::constant(R, Rational(1)) == a);
        CHECK(-(-a) == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial a = random_polynomial(R, rng, 5, 5);
        const Polynomial b = random_polynomial(R, rng, 5, 5);
        const std::vector<Rational> pt = {make_rational(static_cast<long>(rng() % 9) - 4,
                                                        1 + static_cast<long>(rng() % 3)),
                                          Rational(static_cast<long>(rng() % 9) - 4)};
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("parse round-trips to_string") {
    auto R = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = random_polynomial(R, rng, 6, 7);
        CHECK(parse_polynomial(f.to_string(), R) == f);
    }
    CHECK(Polynomial::zero(R).to_string() == "0");
    CHECK(parse_polynomial("0", R).is_zero());
}

TEST_CASE("parse grammar") {
    auto R = make_ring({"x", "y"});
    CHECK(p(R, "-3/4*x^2*y + y - 1/2").to_string() == "-3/4*x^2*y + y - 1/2");
    CHECK(p(R, "(x + y)^3 - x*(x - y)").to_string()
          == "x^3 + 3*x^2*y + 3*x*y^2 + y^3 - x^2 + x*y");
    CHECK(p(R, "+x") == Polynomial::variable(R, 0));
    CHECK(p(R, "  x  *  y ") == p(R, "x*y"));
    CHECK(p(R, "2^3") == Polynomial::constant(R, Rational(8)));
}

TEST_CASE("parse errors carry the offending offset") {
    auto R = make_ring({"x", "y"});
    const auto offset_of = [&](std::string_view text) -> std::size_t {
        try {
            parse_polynomial(text, R);
        } catch (const ParseError& e) {
            return e.position();
        }
        return static_cast<std::size_t>(-1);
    };
    CHECK(offset_of("x^2 +") == 4);   // missing operand, reported at the operator
    CHECK(offset_of("x + z") == 4);   // unknown variable
    CHECK(offset_of("x^") == 1);      // missing exponent
    CHECK(offset_of("(x") == 0);      // unclosed parenthesis
    CHECK(offset_of("2x") == 1);      // implicit multiplication rejected
    CHECK(offset_of("x ^ 1.5") == 5); // decimals rejected
    CHECK(offset_of("x^-2") == 2);    // negative exponents rejected
    CHECK(offset_of("3/0") == 2);     // zero denominator
    CHECK(offset_of("") == 0);
    CHECK(offset_of("x & y") == 2);
}

TEST_CASE("derivative satisfies the product rule") {
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial a = random_polynomial(R, rng, 4, 4);
        const Polynomial b = random_polynomial(R, rng, 4, 4);
        for (std::size_t v = 0; v < 2; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
    CHECK(p(R, "x^3*y - 2*y^2").derivative(0) == p(R, "3*x^2*y"));
    CHECK(p(R, "x^3*y - 2*y^2").derivative(1) == p(R, "x^3 - 4*y"));
}

TEST_CASE("Euler identity for homogeneous polynomials") {
    auto R = make_ring({"x", "y", "z"});
    std::mt19937_64 rng(15);
    int homogeneous_seen = 0;
    for (int trial = 0; trial < 400 && homogeneous_seen < 60; ++trial) {
        Polynomial f = random_polynomial(R, rng, 5, 6);
        if (f.is_zero())
            continue;
        f = f.homogeneous_component(f.total_degree());
        if (f.is_zero())
            continue;
        ++homogeneous_seen;
        REQUIRE(f.is_homogeneous());
        Polynomial euler = Polynomial::zero(R);
        for (std::size_t v = 0; v < 3; ++v)
            euler += Polynomial::variable(R, v) * f.derivative(v);
        CHECK(euler == f * Rational(static_cast<long>(f.total_degree())));
    }
    CHECK(homogeneous_seen >= 60);
}

TEST_CASE("translate shifts the point to the origin") {
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = random_polynomial(R, rng, 5, 5);
        const std::vector<Rational> pt = {Rational(static_cast<long>(rng() % 7) - 3),
                                          make_rational(static_cast<long>(rng() % 7) - 3, 2)};
        const std::vector<Rational> origin = {Rational(0), Rational(0)};
        CHECK(f.translate(pt).evaluate(origin) == f.evaluate(pt));
        // translating back restores f
        const std::vector<Rational> back = {-pt[0], -pt[1]};
        CHECK(f.translate(pt).translate(back) == f);
    }
}

TEST_CASE("substitute agrees with evaluation") {
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = random_polynomial(R, rng, 4, 4);
        const Polynomial g = random_polynomial(R, rng, 2, 3);
        const Polynomial h = f.substitute(0, g);
        const std::vector<Rational> pt = {Rational(static_cast<long>(rng() % 5) - 2),
                                          Rational(static_cast<long>(rng() % 5) - 2)};
        const std::vector<Rational> inner = {g.evaluate(pt), pt[1]};
        CHECK(h.evaluate(pt) == f.evaluate(inner));
    }
}

TEST_CASE("homogenize and dehomogenize are inverse") {
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(18);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = random_polynomial(R, rng, 5, 5);
        if (f.is_zero())
            continue;
        const Polynomial F = f.homogenize("z");
        CHECK(F.is_homogeneous());
        CHECK(F.total_degree() == f.total_degree());
        const Polynomial back = F.dehomogenize(2);
        CHECK(same_ring(back.ring(), R));
        CHECK(back == f);
    }
    CHECK_THROWS_AS(p(R, "x^2 + y").homogenize("x"), DomainError);
    CHECK_THROWS_AS(p(R, "x^2 + y").dehomogenize(0), DomainError); // not homogeneous
}

TEST_CASE("map_into requires only the used variables") {
    auto R2 = make_ring({"x", "y"});
    auto R3 = make_ring({"y", "T", "x"}); // permuted superset
    const Polynomial f = p(R2, "x^2 - 3*y + 1");
    const Polynomial g = f.map_into(R3);
    CHECK(g == p(R3, "x^2 - 3*y + 1"));

    // a polynomial using only x moves into a ring that lacks y entirely
    auto RT = make_ring({"T", "x"});
    const Polynomial h = p(R2, "x^3 - 2").map_into(RT);
    CHECK(h == p(RT, "x^3 - 2"));

    CHECK_THROWS_AS(p(R2, "x + y").map_into(RT), DomainError);
}

TEST_CASE("exact quotient") {
    auto R = make_ring({"x", "y"});
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = random_polynomial(R, rng, 4, 4);
        const Polynomial g = random_polynomial(R, rng, 3, 3);
        if (g.is_zero())
            continue;
        CHECK(exact_quotient(f * g, g) == f);
    }
    CHECK_THROWS_AS(exact_quotient(p(R, "x^2 + y"), p(R, "x + 1")), InternalError);
}

TEST_CASE("primitive part and monic") {
    auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "-4/6*x^2 + 2*y");
    const Polynomial prim = primitive_part(f);
    CHECK(prim == p(R, "x^2 - 3*y"));
    CHECK(primitive_part(f * Rational(-7, 3)) == prim);

    const auto drl = MonomialOrder::degrevlex(2);
    const Polynomial m = monic(f, drl);
    CHECK(m.leading_term(drl).coeff == 1);
}

TEST_CASE("degree bookkeeping") {
    auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "x^3*y + x*y - 7");
    CHECK(f.total_degree() == 4);
    CHECK(!f.is_homogeneous());
    CHECK(f.homogeneous_component(2) == p(R, "x*y"));
    CHECK(f.homogeneous_component(4) + f.homogeneous_component(2)
              + f.homogeneous_component(0) == f);
    CHECK(f.multiplicity_at_origin() == 0);
    CHECK(p(R, "y^2 - x^3").multiplicity_at_origin() == 2);
    CHECK(p(R, "x*y + x^3").multiplicity_at_origin() == 2);
    CHECK_THROWS_AS(Polynomial::zero(R).total_degree(), DomainError);
    CHECK_THROWS_AS(Polynomial::zero(R).multiplicity_at_origin(), DomainError);

    CHECK(f.coefficient(Monomial(std::vector<std::uint32_t>{3, 1})) == 1);
    CHECK(f.coefficient(Monomial(std::vector<std::uint32_t>{2, 0})) == 0);
    CHECK(f.constant_coefficient() == -7);
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(0) == Polynomial::constant(R, Rational(1)));
}
