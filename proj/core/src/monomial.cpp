#include "aluffi/monomial.hpp"

#include "aluffi/errors.hpp"

#include <algorithm>
#include <numeric>

namespace aluffi {

Monomial::Monomial(std::vector<std::uint32_t> exponents)
    : exps_(std::move(exponents)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::one(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, std::uint32_t e) {
    if (i >= nvars)
        throw DomainError("variable index out of range");
    std::vector<std::uint32_t> exps(nvars, 0);
    exps[i] = e;
    return Monomial(std::move(exps));
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (var_count() != other.var_count())
        throw InternalError("monomial arity mismatch in product");
    std::vector<std::uint32_t> exps(exps_);
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] += other.exps_[i];
    return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& other) const {
    if (var_count() != other.var_count())
        throw InternalError("monomial arity mismatch in divisibility test");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i])
            return false;
    return true;
}

Monomial Monomial::divide(const Monomial& other) const {
    if (!other.divides(*this))
        throw InternalError("inexact monomial division");
    std::vector<std::uint32_t> exps(exps_);
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] -= other.exps_[i];
    return Monomial(std::move(exps));
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && other.exps_[i] > 0)
            return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.var_count() != b.var_count())
        throw InternalError("monomial arity mismatch in lcm");
    std::vector<std::uint32_t> exps(a.exps_);
    for (std::size_t i = 0; i < exps.size(); ++i)
        exps[i] = std::max(exps[i], b.exps_[i]);
    return Monomial(std::move(exps));
}

} // namespace aluffi
