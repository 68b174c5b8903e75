#include "aluffi/point.hpp"

#include "aluffi/errors.hpp"

namespace aluffi {

RationalPoint RationalPoint::affine(std::vector<Rational> coords) {
    if (coords.empty())
        throw DomainError("affine point needs at least one coordinate");
    for (auto& c : coords)
        c.canonicalize(); // mpq comparison assumes canonical form
    RationalPoint p;
    p.kind = Kind::affine;
    p.coords = std::move(coords);
    return p;
}

RationalPoint RationalPoint::projective(std::vector<Rational> representative) {
    if (representative.size() < 2)
        throw DomainError("projective point needs at least two coordinates");
    for (auto& c : representative)
        c.canonicalize();
    std::size_t last_nonzero = representative.size();
    for (std::size_t i = representative.size(); i-- > 0;) {
        if (representative[i] != 0) {
            last_nonzero = i;
            break;
        }
    }
    if (last_nonzero == representative.size())
        throw DomainError("projective point needs a nonzero representative");
    RationalPoint p;
    p.kind = Kind::projective;
    p.chart = last_nonzero;
    const Rational scale = representative[last_nonzero];
    p.rep.reserve(representative.size());
    for (const auto& c : representative)
        p.rep.push_back(c / scale);
    for (std::size_t i = 0; i < p.rep.size(); ++i)
        if (i != last_nonzero)
            p.coords.push_back(p.rep[i]);
    return p;
}

bool RationalPoint::operator==(const RationalPoint& other) const {
    if (kind != other.kind)
        return false;
    if (kind == Kind::affine)
        return coords == other.coords;
    return rep == other.rep;
}

std::string RationalPoint::to_string() const {
    const auto& cs = kind == Kind::affine ? coords : rep;
    const char* sep = kind == Kind::affine ? ", " : " : ";
    std::string s = "(";
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i)
            s += sep;
        s += aluffi::to_string(cs[i]);
    }
    return s + ")";
}

} // namespace aluffi
