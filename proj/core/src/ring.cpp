#include "aluffi/ring.hpp"

#include "aluffi/errors.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace aluffi {

namespace {

bool identifier_shaped(const std::string& s) {
    if (s.empty())
        return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
        return false;
    return std::all_of(s.begin() + 1, s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

} // namespace

PolynomialRing::PolynomialRing(std::vector<std::string> variables)
    : variables_(std::move(variables)) {
    if (variables_.empty())
        throw DomainError("a polynomial ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& v : variables_) {
        if (!identifier_shaped(v))
            throw DomainError("variable name '" + v + "' is not identifier-shaped");
        if (!seen.insert(v).second)
            throw DomainError("duplicate variable name '" + v + "'");
    }
}

std::optional<std::size_t> PolynomialRing::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i] == name)
            return i;
    return std::nullopt;
}

RingPtr make_ring(std::vector<std::string> variables) {
    return std::make_shared<const PolynomialRing>(std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return *a == *b;
}

RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra) {
    std::vector<std::string> names = ring->var_names();
    for (const auto& v : extra) {
        if (ring->var_index(v))
            throw DomainError("variable name '" + v + "' already present in the ring");
        names.push_back(v);
    }
    return make_ring(std::move(names));
}

RingPtr remove_variable(const RingPtr& ring, std::size_t i) {
    if (i >= ring->var_count())
        throw DomainError("variable index out of range");
    std::vector<std::string> names = ring->var_names();
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(i));
    return make_ring(std::move(names));
}

} // namespace aluffi
