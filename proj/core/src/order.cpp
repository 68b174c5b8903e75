#include "aluffi/order.hpp"

#include "aluffi/errors.hpp"

#include <algorithm>

namespace aluffi {

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
    if (nvars == 0)
        throw DomainError("order needs at least one variable");
    return MonomialOrder(Kind::lex, nvars);
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
    if (nvars == 0)
        throw DomainError("order needs at least one variable");
    return MonomialOrder(Kind::degrevlex, nvars);
}

MonomialOrder MonomialOrder::weighted_degrevlex(std::vector<std::uint64_t> weights) {
    if (weights.empty())
        throw DomainError("order needs at least one variable");
    for (auto w : weights)
        if (w == 0)
            throw DomainError("weighted order needs strictly positive weights");
    MonomialOrder o(Kind::weighted_degrevlex, weights.size());
    o.weights_ = std::move(weights);
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::vector<std::size_t>> groups,
                                   std::vector<MonomialOrder> inner) {
    if (groups.empty() || groups.size() != inner.size())
        throw DomainError("block order needs matching groups and inner orders");
    std::size_t nvars = 0;
    for (const auto& g : groups)
        nvars += g.size();
    std::vector<bool> seen(nvars, false);
    for (std::size_t k = 0; k < groups.size(); ++k) {
        if (groups[k].size() != inner[k].var_count())
            throw DomainError("block group size does not match its inner order");
        for (auto i : groups[k]) {
            if (i >= nvars || seen[i])
                throw DomainError("block groups must partition the variables");
            seen[i] = true;
        }
    }
    MonomialOrder o(Kind::block, nvars);
    o.groups_ = std::move(groups);
    o.inner_ = std::move(inner);
    return o;
}

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> eliminated, std::size_t nvars) {
    std::vector<bool> in_first(nvars, false);
    for (auto i : eliminated) {
        if (i >= nvars)
            throw DomainError("eliminated variable index out of range");
        in_first[i] = true;
    }
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < nvars; ++i)
        if (!in_first[i])
            rest.push_back(i);
    if (eliminated.empty() || rest.empty())
        throw DomainError("elimination order needs a proper nonempty variable subset");
    std::vector<MonomialOrder> inner{degrevlex(eliminated.size()), degrevlex(rest.size())};
    return block({std::move(eliminated), std::move(rest)}, std::move(inner));
}

namespace {

inline std::uint32_t exp_at(const Monomial& m, const std::vector<std::size_t>* map,
                            std::size_t j) {
    return m.exponent(map ? (*map)[j] : j);
}

} // namespace

std::strong_ordering MonomialOrder::compare_mapped(const Monomial& a, const Monomial& b,
                                                   const std::vector<std::size_t>* map) const {
    const std::size_t n = nvars_;
    switch (kind_) {
    case Kind::lex: {
        for (std::size_t j = 0; j < n; ++j) {
            auto ea = exp_at(a, map, j), eb = exp_at(b, map, j);
            if (ea != eb)
                return ea <=> eb;
        }
        return std::strong_ordering::equal;
    }
    case Kind::degrevlex: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t j = 0; j < n; ++j) {
            da += exp_at(a, map, j);
            db += exp_at(b, map, j);
        }
        if (da != db)
            return da <=> db;
        // Reverse-lex tie break: scan from the last variable; the monomial
        // with the *smaller* exponent at the first difference is larger.
        for (std::size_t j = n; j-- > 0;) {
            auto ea = exp_at(a, map, j), eb = exp_at(b, map, j);
            if (ea != eb)
                return eb <=> ea;
        }
        return std::strong_ordering::equal;
    }
    case Kind::weighted_degrevlex: {
        std::uint64_t da = 0, db = 0;
        for (std::size_t j = 0; j < n; ++j) {
            da += weights_[j] * exp_at(a, map, j);
            db += weights_[j] * exp_at(b, map, j);
        }
        if (da != db)
            return da <=> db;
        for (std::size_t j = n; j-- > 0;) {
            auto ea = exp_at(a, map, j), eb = exp_at(b, map, j);
            if (ea != eb)
                return eb <=> ea;
        }
        return std::strong_ordering::equal;
    }
    case Kind::block: {
        for (std::size_t k = 0; k < groups_.size(); ++k) {
            std::strong_ordering c = std::strong_ordering::equal;
            if (!map) {
                c = inner_[k].compare_mapped(a, b, &groups_[k]);
            } else {
                // Nested block: compose the index maps.
                std::vector<std::size_t> composed(groups_[k].size());
                for (std::size_t j = 0; j < groups_[k].size(); ++j)
                    composed[j] = (*map)[groups_[k][j]];
                c = inner_[k].compare_mapped(a, b, &composed);
            }
            if (c != 0)
                return c;
        }
        return std::strong_ordering::equal;
    }
    }
    throw InternalError("unreachable monomial-order kind");
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.var_count() != nvars_ || b.var_count() != nvars_)
        throw InternalError("monomial arity does not match the order");
    if (kind_ == Kind::degrevlex) {
        // Hot path: cached total degrees, no map indirection.
        if (a.degree() != b.degree())
            return a.degree() <=> b.degree();
        const auto& ea = a.exponents();
        const auto& eb = b.exponents();
        for (std::size_t j = nvars_; j-- > 0;)
            if (ea[j] != eb[j])
                return eb[j] <=> ea[j];
        return std::strong_ordering::equal;
    }
    return compare_mapped(a, b, nullptr);
}

std::string MonomialOrder::cache_key() const {
    switch (kind_) {
    case Kind::lex:
        return "lex(" + std::to_string(nvars_) + ")";
    case Kind::degrevlex:
        return "drl(" + std::to_string(nvars_) + ")";
    case Kind::weighted_degrevlex: {
        std::string s = "wdrl(";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(weights_[i]);
        }
        return s + ")";
    }
    case Kind::block: {
        std::string s = "block(";
        for (std::size_t k = 0; k < groups_.size(); ++k) {
            if (k)
                s += ';';
            s += '[';
            for (std::size_t j = 0; j < groups_[k].size(); ++j) {
                if (j)
                    s += ',';
                s += std::to_string(groups_[k][j]);
            }
            s += "]:" + inner_[k].cache_key();
        }
        return s + ")";
    }
    }
    throw InternalError("unreachable monomial-order kind");
}

} // namespace aluffi
