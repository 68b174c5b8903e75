#pragma once

#include "aluffi/monomial.hpp"
#include "aluffi/order.hpp"
#include "aluffi/rational.hpp"
#include "aluffi/ring.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aluffi {

struct Term {
    Monomial monomial;
    Rational coeff;
};

// Sparse multivariate polynomial over Q.  Terms are kept normalized: no
// zero coefficients, strictly descending under the ring's canonical
// degrevlex order.  Printing and equality read straight off that form.
class Polynomial {
public:
    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, Rational value);
    static Polynomial variable(RingPtr ring, std::size_t i);
    static Polynomial term(RingPtr ring, Monomial m, Rational coeff);
    // Arbitrary term soup; sorts, merges, and drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    std::size_t term_count() const noexcept { return terms_.size(); }

    // Leading data under the canonical degrevlex order (the stored order).
    const Term& leading_term() const;
    // Leading term under an arbitrary order (linear scan).
    const Term& leading_term(const MonomialOrder& order) const;

    // Throws DomainError on the zero polynomial, whose degree is undefined.
    std::uint64_t total_degree() const;
    bool is_homogeneous() const;
    // Minimal total degree of a term; throws DomainError on zero.
    std::uint64_t multiplicity_at_origin() const;

    // Coefficient of an exact monomial (0 if absent).
    Rational coefficient(const Monomial& m) const;
    Rational constant_coefficient() const;
    // Sum of the terms of the given total degree.
    Polynomial homogeneous_component(std::uint64_t degree) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
    Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& other) const;
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial derivative(std::size_t var) const;
    Rational evaluate(std::span<const Rational> point) const;
    // Replace variable var by the polynomial value (same ring).
    Polynomial substitute(std::size_t var, const Polynomial& value) const;
    // f(x + p): shifts the given point to the origin.
    Polynomial translate(std::span<const Rational> point) const;

    // Into the ring extended by new_var; each term is padded to top degree.
    Polynomial homogenize(const std::string& new_var) const;
    // Requires a homogeneous input; sets variable var to 1 and returns the
    // result in the ring with that variable removed.
    Polynomial dehomogenize(std::size_t var) const;
    // Same polynomial viewed in a larger ring that contains all used
    // variables (matched by name).
    Polynomial map_into(const RingPtr& bigger) const;

    std::string to_string() const;

private:
    Polynomial(RingPtr ring, std::vector<Term> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {}

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Quotient f / g when g divides f exactly; throws InternalError otherwise.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

// f scaled by a positive rational so that its coefficients are coprime
// integers and the canonical leading coefficient is positive.
Polynomial primitive_part(const Polynomial& f);

// f scaled so its leading coefficient under the given order is 1.
Polynomial monic(const Polynomial& f, const MonomialOrder& order);

} // namespace aluffi
