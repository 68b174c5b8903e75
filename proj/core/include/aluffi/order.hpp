#pragma once

#include "aluffi/monomial.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace aluffi {

// Global (1 is smallest), total, multiplicative monomial orders.
//
// Tie convention throughout: earlier-declared variables are larger, so in
// Q[x,y] both lex and degrevlex have x > y.
//
// block() takes explicit variable-index groups, compared group by group
// with the given inner orders; the groups must partition 0..n-1.  An
// elimination order for a subset S is block({S, rest}, {degrevlex, degrevlex}).
class MonomialOrder {
public:
    enum class Kind { lex, degrevlex, weighted_degrevlex, block };

    static MonomialOrder lex(std::size_t nvars);
    static MonomialOrder degrevlex(std::size_t nvars);
    // weights must all be >= 1 (keeps the order global).
    static MonomialOrder weighted_degrevlex(std::vector<std::uint64_t> weights);
    static MonomialOrder block(std::vector<std::vector<std::size_t>> groups,
                               std::vector<MonomialOrder> inner);
    // Convenience: eliminated variables >> the rest, degrevlex inside each group.
    static MonomialOrder elimination(std::vector<std::size_t> eliminated, std::size_t nvars);

    Kind kind() const noexcept { return kind_; }
    std::size_t var_count() const noexcept { return nvars_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // Canonical serialization; equal strings iff same order.  Used as a
    // Groebner-cache key.
    std::string cache_key() const;

    bool operator==(const MonomialOrder& other) const { return cache_key() == other.cache_key(); }

private:
    MonomialOrder(Kind kind, std::size_t nvars) : kind_(kind), nvars_(nvars) {}

    std::strong_ordering compare_mapped(const Monomial& a, const Monomial& b,
                                        const std::vector<std::size_t>* map) const;

    Kind kind_;
    std::size_t nvars_;
    std::vector<std::uint64_t> weights_;            // weighted_degrevlex
    std::vector<std::vector<std::size_t>> groups_;  // block
    std::vector<MonomialOrder> inner_;              // block
};

} // namespace aluffi
