#pragma once

#include "aluffi/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace aluffi {

// A rational point, affine or projective.  Projective points are stored
// through a canonical representative (last nonzero coordinate scaled to 1);
// `chart` is the index of that coordinate and `coords` the affine
// coordinates in that chart, so local computations can run verbatim on the
// dehomogenized equation.
struct RationalPoint {
    enum class Kind { affine, projective };

    Kind kind = Kind::affine;
    std::vector<Rational> coords; // affine coordinates (chart coordinates if projective)
    std::vector<Rational> rep;    // homogeneous representative (projective only)
    std::size_t chart = 0;        // index of the coordinate normalized to 1

    static RationalPoint affine(std::vector<Rational> coords);
    // Canonicalizes a nonzero representative; throws DomainError on zero.
    static RationalPoint projective(std::vector<Rational> representative);

    bool operator==(const RationalPoint& other) const;
    bool operator!=(const RationalPoint& other) const { return !(*this == other); }

    // "(1, -2/3)" for affine, "(1 : 0 : 1)" for projective.
    std::string to_string() const;
};

} // namespace aluffi
