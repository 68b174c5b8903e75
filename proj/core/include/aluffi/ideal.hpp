#pragma once

#include "aluffi/groebner.hpp"
#include "aluffi/point.hpp"
#include "aluffi/polynomial.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace aluffi {

// An ideal presented by a finite generator list, with cached reduced
// Groebner bases keyed by order.  Ideal identity is independent of the
// presentation; equality goes through reduced bases.  Copies share the
// cache; const access is safe from multiple threads.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }

    // Reduced GB under the given order, cached.
    const GroebnerBasis& groebner(const MonomialOrder& order) const;
    // Under the canonical degrevlex order.
    const GroebnerBasis& groebner() const;

    bool is_zero() const { return groebner().elements.empty(); }
    bool contains_one() const { return groebner().contains_one(); }

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, GroebnerBasis> entries;
    };

    RingPtr ring_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& p, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

// (I : p) = {q : q p in I}; p must be nonzero.
Ideal ideal_quotient(const Ideal& I, const Polynomial& p);
// (I : J) = intersection over generators of J.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

// (I : p^infinity) by iterated quotient until the reduced GB stabilizes.
Ideal saturation(const Ideal& I, const Polynomial& p);
Ideal saturation(const Ideal& I, const Ideal& J);

// I intersected with the subring omitting `vars` (block-order elimination).
// The result lives in the same ring; its generators avoid `vars`.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars);

// Krull dimension of R/I from the leading-term staircase; -1 for I = (1).
int krull_dimension(const Ideal& I);

// Number of standard monomials = dim_Q R/I; requires dim(R/I) <= 0.
std::uint64_t vector_space_dimension(const Ideal& I);

// The origin-primary component Q = I : (I : m^infinity), m = (x_1..x_n).
// Requires the origin to be an isolated point of V(I) (checked: the
// result must be m-primary); V(I) may otherwise have positive dimension.
Ideal origin_primary_component(const Ideal& I);

// Spec'd local component at an affine rational point: requires dim(R/I)=0
// and p in V(I); returns the primary component in origin coordinates
// (p translated to 0).
Ideal local_primary_component(const Ideal& I, const RationalPoint& p);

// dim_Q (R_p / I_p) via the local primary component.
std::uint64_t local_vector_space_dimension(const Ideal& I, const RationalPoint& p);

} // namespace aluffi
