#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aluffi {

// A polynomial ring Q[x_0, ..., x_{n-1}], identified by its ordered list of
// variable names.  Immutable; shared between polynomials via RingPtr.
// Variable declaration order fixes the order-tie convention everywhere:
// earlier-declared variables are larger.
class PolynomialRing {
public:
    // Throws DomainError unless the names are nonempty, distinct,
    // identifier-shaped ([A-Za-z_][A-Za-z0-9_]*).
    explicit PolynomialRing(std::vector<std::string> variables);

    std::size_t var_count() const noexcept { return variables_.size(); }
    const std::string& var_name(std::size_t i) const { return variables_.at(i); }
    const std::vector<std::string>& var_names() const noexcept { return variables_; }
    std::optional<std::size_t> var_index(std::string_view name) const;

    bool operator==(const PolynomialRing& other) const { return variables_ == other.variables_; }
    bool operator!=(const PolynomialRing& other) const { return !(*this == other); }

private:
    std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const PolynomialRing>;

RingPtr make_ring(std::vector<std::string> variables);

// Same mathematical ring?  True on pointer equality or equal variable lists.
bool same_ring(const RingPtr& a, const RingPtr& b);

// New ring with extra variables appended; throws DomainError on collisions.
RingPtr extend_ring(const RingPtr& ring, const std::vector<std::string>& extra);

// New ring with variable i removed.
RingPtr remove_variable(const RingPtr& ring, std::size_t i);

} // namespace aluffi
