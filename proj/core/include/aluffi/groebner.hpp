#pragma once

#include "aluffi/order.hpp"
#include "aluffi/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace aluffi {

// Reduced Groebner basis: monic elements, no term of any element divisible
// by another element's leading monomial, sorted by descending leading
// monomial.  This form is unique per (ideal, order), so basis equality is
// ideal equality and permuting or rescaling input generators cannot change
// the result.
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> elements; // empty for the zero ideal

    bool contains_one() const;
    bool operator==(const GroebnerBasis& other) const;
};

// Buchberger with sugar-degree pair selection and the product/chain pair
// criteria, followed by inter-reduction.  Zero generators are ignored.
// Throws LimitError when the active ResourceLimits are exceeded.
GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order);

// Full normal form: no term of the result is divisible by any leading
// monomial of the basis.  The zero ideal (empty basis) returns p itself.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

// ----- free modules R^k ------------------------------------------------
//
// Module elements are coordinate vectors of polynomials.  Orders are
// position-over-term: component 0 dominates, ties broken by the ambient
// monomial order.  That is a component-elimination order, which is what
// the syzygy extraction below relies on.

struct ModuleGroebnerBasis {
    RingPtr ring;
    MonomialOrder order;      // ambient monomial order
    std::size_t components;
    std::vector<std::vector<Polynomial>> elements;
};

ModuleGroebnerBasis module_groebner_basis(const std::vector<std::vector<Polynomial>>& generators,
                                          const MonomialOrder& order);

std::vector<Polynomial> module_normal_form(const std::vector<Polynomial>& v,
                                           const ModuleGroebnerBasis& basis);

// ----- syzygies ---------------------------------------------------------

// Columns generate the full syzygy module of the given generator tuple:
// for every column s, sum_j s[j] * generators[j] == 0, and every relation
// among the generators is an R-combination of the columns.  The companion
// module basis is a Groebner basis of the syzygy module (position-over-term
// with the canonical degrevlex), suitable for membership checks.
struct SyzygyBasis {
    RingPtr ring;
    std::size_t generator_count;
    std::vector<std::vector<Polynomial>> columns;
    ModuleGroebnerBasis module_basis;
};

SyzygyBasis syzygy_basis(const std::vector<Polynomial>& generators);

} // namespace aluffi
