#include "aluffi/limits.hpp"

namespace aluffi {

namespace {

thread_local ResourceLimits g_limits{};

} // namespace

const ResourceLimits& current_limits() {
    return g_limits;
}

LimitScope::LimitScope(const ResourceLimits& limits) : saved_(g_limits) {
    g_limits = limits;
}

LimitScope::~LimitScope() {
    g_limits = saved_;
}

} // namespace aluffi
