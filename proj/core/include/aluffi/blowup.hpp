#pragma once

#include "aluffi/ideal.hpp"
#include "aluffi/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aluffi {

enum class PresentationKind { sym, rees, aluffi };

std::string to_string(PresentationKind kind);

// A presentation R[T0..Tm] -> ideal of relations, one T per generator of
// the input ideal (T0 paired with f when the input is jacobian_ideal(f)).
// `generators` is the raw construction output, `reduced_basis` the unique
// reduced Groebner basis under degrevlex on the extended ring; both
// generate the same ideal.  Every generator is homogeneous in the T
// variables and `t_degrees[i]` is the T-degree of `generators[i]`.
struct PresentationIdeal {
    PresentationKind kind = PresentationKind::sym;
    RingPtr extended_ring;
    std::size_t base_vars = 0; // T variables start at this index
    std::vector<Polynomial> generators;
    std::vector<std::uint64_t> t_degrees;
    std::vector<Polynomial> reduced_basis;

    // Alternate generating sets that the Aluffi construction emits and
    // verifies when the fast paths apply: the Euler-form + Koszul-minor
    // shape for quasi-homogeneous f, and the deleted-first-row syzygy
    // shape for locally Eulerian f.
    std::optional<std::vector<Polynomial>> quasi_homogeneous_shape;
    std::optional<std::vector<Polynomial>> eulerian_shape;

    Ideal ideal() const { return Ideal(extended_ring, generators); }
};

// witness present iff not linear type; it is a Rees relation of T-degree
// >= 2 with nonzero normal form against the Sym relation ideal.
struct LinearTypeVerdict {
    bool is_linear_type = false;
    std::optional<Polynomial> witness;
};

// Relation ideal of Sym_R(I): entries of [T0..Tm] * phi for a generating
// matrix phi of the syzygies of I's generator tuple.  All T-degree 1.
// Requires I nonzero; the T names T0..Tm must not collide with ring
// variables.
PresentationIdeal sym_ideal(const Ideal& I);

// Relation ideal of the Rees algebra R[It]: eliminate t from
// (T0 - t g0, ..., Tm - t gm).  Its T-degree-1 part generates the Sym
// relation ideal.  Requires I nonzero.
PresentationIdeal rees_ideal(const Ideal& I);

// I is of linear type iff the Sym and Rees relation ideals agree
// (reduced-GB equality in the shared extended ring).
LinearTypeVerdict is_linear_type(const Ideal& I);

// The comparison underlying is_linear_type, for callers that already
// hold both presentations.  Also verifies sym is contained in rees.
LinearTypeVerdict compare_presentations(const PresentationIdeal& sym,
                                        const PresentationIdeal& rees);

// Relations of the embedded Aluffi algebra of I(f)/(f): the Rees
// relations plus f and T0 (the degree-one lift of f).  Requires f reduced
// with isolated singularities.  When f is quasi-homogeneous or locally
// Eulerian the corresponding alternate shape is emitted and its ideal
// equality with the general construction is verified.
PresentationIdeal aluffi_presentation(const Polynomial& f);

} // namespace aluffi
