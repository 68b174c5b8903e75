#pragma once

#include <cstddef>

namespace aluffi {

// Ceilings for basis computations.  Defaults are generous for the intended
// scale (<= 6 variables, degree <= 10); hitting one throws LimitError.
struct ResourceLimits {
    std::size_t max_pair_queue = 500000;   // pending critical pairs
    std::size_t max_basis_terms = 4000000; // total stored terms across a basis
};

// Thread-local active limits, so concurrent analyses can carry their own.
const ResourceLimits& current_limits();

// RAII override of the thread-local limits.
class LimitScope {
public:
    explicit LimitScope(const ResourceLimits& limits);
    ~LimitScope();
    LimitScope(const LimitScope&) = delete;
    LimitScope& operator=(const LimitScope&) = delete;

private:
    ResourceLimits saved_;
};

} // namespace aluffi
