#include "aluffi/groebner.hpp"

#include "aluffi/errors.hpp"
#include "aluffi/limits.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace aluffi {

namespace {

// ===================== scalar engine =====================
//
// Working polynomials are term vectors sorted strictly descending under
// the *active* order (not necessarily the canonical storage order).

using TermVec = std::vector<Term>;

TermVec sorted_terms(const Polynomial& p, const MonomialOrder& order) {
    TermVec t = p.terms();
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
        return order.greater(a.monomial, b.monomial);
    });
    return t;
}

Polynomial to_polynomial(const RingPtr& ring, TermVec t) {
    return Polynomial::from_terms(ring, std::move(t));
}

// a - b with both inputs descending; result descending.
TermVec sub_merge(const TermVec& a, std::size_t a_from, const TermVec& b,
                  const MonomialOrder& order) {
    TermVec out;
    out.reserve((a.size() - a_from) + b.size());
    std::size_t i = a_from, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = order.compare(a[i].monomial, b[j].monomial);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].monomial, -b[j].coeff});
            ++j;
        } else {
            Rational s = a[i].coeff - b[j].coeff;
            if (s != 0)
                out.push_back({a[i].monomial, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({b[j].monomial, -b[j].coeff});
    return out;
}

TermVec scaled(const TermVec& g, const Monomial& shift, const Rational& c) {
    TermVec out;
    out.reserve(g.size());
    for (const auto& t : g)
        out.push_back({t.monomial * shift, t.coeff * c});
    return out;
}

// Scale in place to coprime integer coefficients with a positive lead;
// keeps Buchberger coefficient growth in check.
void make_primitive(TermVec& v) {
    if (v.empty())
        return;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& t : v) {
        den_lcm = lcm(den_lcm, t.coeff.get_den());
        num_gcd = gcd(num_gcd, t.coeff.get_num());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sign(v.front().coeff) < 0)
        scale = -scale;
    for (auto& t : v)
        t.coeff *= scale;
}

struct BasisElem {
    TermVec poly; // descending under the active order, never empty
    Monomial lm;
    Rational lc;
    std::uint64_t sugar;
};

// Full reduction: returns the normal form; every term of the result is
// irreducible modulo the leading monomials of `basis`.  Updates `sugar`
// with the sugar degree of the result.
TermVec reduce_full(TermVec p, const std::vector<BasisElem>& basis,
                    const MonomialOrder& order, std::uint64_t* sugar) {
    const auto& limits = current_limits();
    TermVec out;
    std::size_t head = 0;
    while (head < p.size()) {
        const Term& lead = p[head];
        const BasisElem* reducer = nullptr;
        for (const auto& e : basis) {
            if (e.lm.divides(lead.monomial)) {
                reducer = &e;
                break;
            }
        }
        if (!reducer) {
            out.push_back(lead);
            ++head;
            continue;
        }
        Monomial shift = lead.monomial.divide(reducer->lm);
        if (sugar)
            *sugar = std::max(*sugar, reducer->sugar + shift.degree());
        TermVec sg = scaled(reducer->poly, shift, lead.coeff / reducer->lc);
        if ((p.size() - head) + sg.size() > limits.max_basis_terms)
            throw LimitError("term ceiling exceeded during reduction");
        p = sub_merge(p, head, sg, order);
        head = 0;
    }
    return out;
}

struct CriticalPair {
    std::uint32_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
};

struct PairLess {
    const MonomialOrder* order;
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        if (a.lcm.degree() != b.lcm.degree())
            return a.lcm.degree() < b.lcm.degree();
        auto c = order->compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
    if (i > j)
        std::swap(i, j);
    return (static_cast<std::uint64_t>(i) << 32) | j;
}

// Buchberger loop; returns a (non-reduced) basis extending the input
// generators.  Deterministic: pair selection and reducer choice are fixed.
std::vector<BasisElem> buchberger(const std::vector<Polynomial>& generators,
                                  const MonomialOrder& order) {
    const auto& limits = current_limits();
    std::vector<BasisElem> basis;
    std::set<CriticalPair, PairLess> queue(PairLess{&order});
    std::unordered_set<std::uint64_t> treated;
    std::size_t total_terms = 0;

    auto push_element = [&](TermVec poly, std::uint64_t sugar) {
        BasisElem e;
        e.lm = poly.front().monomial;
        e.lc = poly.front().coeff;
        e.sugar = sugar;
        e.poly = std::move(poly);
        total_terms += e.poly.size();
        if (total_terms > limits.max_basis_terms)
            throw LimitError("term ceiling exceeded in basis");
        const auto n = static_cast<std::uint32_t>(basis.size());
        basis.push_back(std::move(e));
        for (std::uint32_t i = 0; i < n; ++i) {
            Monomial l = Monomial::lcm(basis[i].lm, basis[n].lm);
            if (basis[i].lm.coprime(basis[n].lm)) {
                // Product criterion: the S-polynomial reduces to zero.
                treated.insert(pair_key(i, n));
                continue;
            }
            std::uint64_t sug =
                std::max(basis[i].sugar + l.degree() - basis[i].lm.degree(),
                         basis[n].sugar + l.degree() - basis[n].lm.degree());
            queue.insert({i, n, std::move(l), sug});
            if (queue.size() > limits.max_pair_queue)
                throw LimitError("pair queue ceiling exceeded");
        }
    };

    for (const auto& g : generators) {
        if (g.is_zero())
            continue;
        Polynomial pp = primitive_part(g);
        push_element(sorted_terms(pp, order), pp.total_degree());
    }

    while (!queue.empty()) {
        CriticalPair pair = *queue.begin();
        queue.erase(queue.begin());
        treated.insert(pair_key(pair.i, pair.j));

        // Chain criterion: skip when some k with lm_k | lcm(i,j) has both
        // (i,k) and (k,j) already treated.
        bool skip = false;
        for (std::uint32_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pair.i || k == pair.j)
                continue;
            if (basis[k].lm.divides(pair.lcm) &&
                treated.count(pair_key(pair.i, k)) &&
                treated.count(pair_key(k, pair.j)))
                skip = true;
        }
        if (skip)
            continue;

        const BasisElem& fi = basis[pair.i];
        const BasisElem& fj = basis[pair.j];
        TermVec lhs = scaled(fi.poly, pair.lcm.divide(fi.lm), Rational(1) / fi.lc);
        TermVec rhs = scaled(fj.poly, pair.lcm.divide(fj.lm), Rational(1) / fj.lc);
        TermVec spoly = sub_merge(lhs, 0, rhs, order);
        std::uint64_t sugar = pair.sugar;
        TermVec nf = reduce_full(std::move(spoly), basis, order, &sugar);
        if (nf.empty())
            continue;
        make_primitive(nf);
        push_element(std::move(nf), sugar);
    }
    return basis;
}

GroebnerBasis finish_reduced(const RingPtr& ring, const MonomialOrder& order,
                             std::vector<BasisElem> basis) {
    // Minimal basis: drop elements whose lm is divisible by another kept lm.
    std::vector<std::size_t> kept;
    std::vector<std::size_t> by_lm(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        by_lm[i] = i;
    // Ascending leading monomials so that keepers are found smallest-first.
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t a, std::size_t b) {
        auto c = order.compare(basis[a].lm, basis[b].lm);
        if (c != 0)
            return c < 0;
        return a < b;
    });
    for (std::size_t idx : by_lm) {
        bool divisible = false;
        for (std::size_t k : kept) {
            if (basis[k].lm.divides(basis[idx].lm)) {
                divisible = true;
                break;
            }
        }
        if (!divisible)
            kept.push_back(idx);
    }

    // Inter-reduce tails against the other kept elements.
    std::vector<BasisElem> minimal;
    minimal.reserve(kept.size());
    for (std::size_t idx : kept)
        minimal.push_back(std::move(basis[idx]));
    std::vector<Polynomial> elements;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BasisElem> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        TermVec nf = reduce_full(minimal[i].poly, others, order, nullptr);
        if (nf.empty())
            throw InternalError("minimal basis element reduced to zero");
        Rational inv = Rational(1) / nf.front().coeff;
        for (auto& t : nf)
            t.coeff *= inv;
        elements.push_back(to_polynomial(ring, std::move(nf)));
    }
    std::sort(elements.begin(), elements.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.greater(a.leading_term(order).monomial, b.leading_term(order).monomial);
    });
    return GroebnerBasis{ring, order, std::move(elements)};
}

} // namespace

bool GroebnerBasis::contains_one() const {
    return elements.size() == 1 && elements.front().is_constant() &&
           !elements.front().is_zero();
}

bool GroebnerBasis::operator==(const GroebnerBasis& other) const {
    return same_ring(ring, other.ring) && order == other.order &&
           elements == other.elements;
}

GroebnerBasis reduced_groebner_basis(const std::vector<Polynomial>& generators,
                                     const MonomialOrder& order) {
    if (generators.empty())
        throw DomainError("Groebner basis of an empty generator list");
    const RingPtr& ring = generators.front().ring();
    for (const auto& g : generators)
        if (!same_ring(g.ring(), ring))
            throw DomainError("mixed rings in generator list");
    if (order.var_count() != ring->var_count())
        throw DomainError("order arity does not match the ring");

    bool all_zero = std::all_of(generators.begin(), generators.end(),
                                [](const Polynomial& g) { return g.is_zero(); });
    if (all_zero)
        return GroebnerBasis{ring, order, {}};

    auto basis = buchberger(generators, order);
    return finish_reduced(ring, order, std::move(basis));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    if (!same_ring(p.ring(), basis.ring))
        throw DomainError("ring mismatch in normal form");
    if (basis.elements.empty())
        return p;
    std::vector<BasisElem> elems;
    elems.reserve(basis.elements.size());
    for (const auto& e : basis.elements) {
        const Term& lt = e.leading_term(basis.order);
        elems.push_back({sorted_terms(e, basis.order), lt.monomial, lt.coeff, 0});
    }
    TermVec nf = reduce_full(sorted_terms(p, basis.order), elems, basis.order, nullptr);
    return to_polynomial(p.ring(), std::move(nf));
}

// ===================== module engine =====================

namespace {

struct MTerm {
    std::uint32_t comp;
    Monomial monomial;
    Rational coeff;
};

using MTermVec = std::vector<MTerm>;

// Position-over-term: lower component index dominates; ties by the
// ambient order.
std::strong_ordering mcompare(const MTerm& a, const MTerm& b, const MonomialOrder& order) {
    if (a.comp != b.comp)
        return b.comp <=> a.comp;
    return order.compare(a.monomial, b.monomial);
}

MTermVec msorted(const std::vector<Polynomial>& v, const MonomialOrder& order) {
    MTermVec out;
    for (std::uint32_t c = 0; c < v.size(); ++c)
        for (const auto& t : v[c].terms())
            out.push_back({c, t.monomial, t.coeff});
    std::sort(out.begin(), out.end(), [&](const MTerm& a, const MTerm& b) {
        return mcompare(a, b, order) > 0;
    });
    return out;
}

std::vector<Polynomial> munpack(const RingPtr& ring, std::size_t components,
                                const MTermVec& v) {
    std::vector<std::vector<Term>> slots(components);
    for (const auto& t : v)
        slots[t.comp].push_back({t.monomial, t.coeff});
    std::vector<Polynomial> out;
    out.reserve(components);
    for (auto& s : slots)
        out.push_back(Polynomial::from_terms(ring, std::move(s)));
    return out;
}

MTermVec msub_merge(const MTermVec& a, std::size_t a_from, const MTermVec& b,
                    const MonomialOrder& order) {
    MTermVec out;
    out.reserve((a.size() - a_from) + b.size());
    std::size_t i = a_from, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = mcompare(a[i], b[j], order);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back({b[j].comp, b[j].monomial, -b[j].coeff});
            ++j;
        } else {
            Rational s = a[i].coeff - b[j].coeff;
            if (s != 0)
                out.push_back({a[i].comp, a[i].monomial, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.size(); ++i)
        out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back({b[j].comp, b[j].monomial, -b[j].coeff});
    return out;
}

MTermVec mscaled(const MTermVec& g, const Monomial& shift, const Rational& c) {
    MTermVec out;
    out.reserve(g.size());
    for (const auto& t : g)
        out.push_back({t.comp, t.monomial * shift, t.coeff * c});
    return out;
}

void make_mprimitive(MTermVec& v) {
    if (v.empty())
        return;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& t : v) {
        den_lcm = lcm(den_lcm, t.coeff.get_den());
        num_gcd = gcd(num_gcd, t.coeff.get_num());
    }
    Rational scale = make_rational(den_lcm, num_gcd);
    if (sign(v.front().coeff) < 0)
        scale = -scale;
    for (auto& t : v)
        t.coeff *= scale;
}

struct MBasisElem {
    MTermVec poly;
    std::uint32_t comp;
    Monomial lm;
    Rational lc;
};

MTermVec mreduce_full(MTermVec p, const std::vector<MBasisElem>& basis,
                      const MonomialOrder& order) {
    const auto& limits = current_limits();
    MTermVec out;
    std::size_t head = 0;
    while (head < p.size()) {
        const MTerm& lead = p[head];
        const MBasisElem* reducer = nullptr;
        for (const auto& e : basis) {
            if (e.comp == lead.comp && e.lm.divides(lead.monomial)) {
                reducer = &e;
                break;
            }
        }
        if (!reducer) {
            out.push_back(lead);
            ++head;
            continue;
        }
        MTermVec sg = mscaled(reducer->poly, lead.monomial.divide(reducer->lm),
                              lead.coeff / reducer->lc);
        if ((p.size() - head) + sg.size() > limits.max_basis_terms)
            throw LimitError("term ceiling exceeded during module reduction");
        p = msub_merge(p, head, sg, order);
        head = 0;
    }
    return out;
}

struct MPair {
    std::uint32_t i, j;
    Monomial lcm;
};

struct MPairLess {
    const MonomialOrder* order;
    bool operator()(const MPair& a, const MPair& b) const {
        if (a.lcm.degree() != b.lcm.degree())
            return a.lcm.degree() < b.lcm.degree();
        auto c = order->compare(a.lcm, b.lcm);
        if (c != 0)
            return c < 0;
        if (a.i != b.i)
            return a.i < b.i;
        return a.j < b.j;
    }
};

std::vector<MBasisElem> module_buchberger(const std::vector<std::vector<Polynomial>>& gens,
                                          const MonomialOrder& order) {
    const auto& limits = current_limits();
    std::vector<MBasisElem> basis;
    std::set<MPair, MPairLess> queue(MPairLess{&order});
    std::size_t total_terms = 0;

    auto push_element = [&](MTermVec poly) {
        MBasisElem e;
        e.comp = poly.front().comp;
        e.lm = poly.front().monomial;
        e.lc = poly.front().coeff;
        e.poly = std::move(poly);
        total_terms += e.poly.size();
        if (total_terms > limits.max_basis_terms)
            throw LimitError("term ceiling exceeded in module basis");
        const auto n = static_cast<std::uint32_t>(basis.size());
        basis.push_back(std::move(e));
        for (std::uint32_t i = 0; i < n; ++i) {
            // Critical pairs only between leads in the same component.
            if (basis[i].comp != basis[n].comp)
                continue;
            queue.insert({i, n, Monomial::lcm(basis[i].lm, basis[n].lm)});
            if (queue.size() > limits.max_pair_queue)
                throw LimitError("pair queue ceiling exceeded in module engine");
        }
    };

    for (const auto& g : gens) {
        MTermVec v = msorted(g, order);
        if (!v.empty())
            push_element(std::move(v));
    }

    while (!queue.empty()) {
        MPair pair = *queue.begin();
        queue.erase(queue.begin());
        const MBasisElem& fi = basis[pair.i];
        const MBasisElem& fj = basis[pair.j];
        MTermVec lhs = mscaled(fi.poly, pair.lcm.divide(fi.lm), Rational(1) / fi.lc);
        MTermVec rhs = mscaled(fj.poly, pair.lcm.divide(fj.lm), Rational(1) / fj.lc);
        MTermVec spoly = msub_merge(lhs, 0, rhs, order);
        MTermVec nf = mreduce_full(std::move(spoly), basis, order);
        if (!nf.empty()) {
            make_mprimitive(nf);
            push_element(std::move(nf));
        }
    }
    return basis;
}

std::vector<MBasisElem> module_reduce_basis(std::vector<MBasisElem> basis,
                                            const MonomialOrder& order) {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> idxs(basis.size());
    for (std::size_t i = 0; i < idxs.size(); ++i)
        idxs[i] = i;
    std::sort(idxs.begin(), idxs.end(), [&](std::size_t a, std::size_t b) {
        auto c = mcompare({basis[a].comp, basis[a].lm, Rational(1)},
                          {basis[b].comp, basis[b].lm, Rational(1)}, order);
        if (c != 0)
            return c < 0;
        return a < b;
    });
    for (std::size_t idx : idxs) {
        bool divisible = false;
        for (std::size_t k : kept)
            if (basis[k].comp == basis[idx].comp && basis[k].lm.divides(basis[idx].lm)) {
                divisible = true;
                break;
            }
        if (!divisible)
            kept.push_back(idx);
    }
    std::vector<MBasisElem> minimal;
    for (std::size_t idx : kept)
        minimal.push_back(std::move(basis[idx]));
    std::vector<MBasisElem> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MBasisElem> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        MTermVec nf = mreduce_full(minimal[i].poly, others, order);
        if (nf.empty())
            throw InternalError("minimal module basis element reduced to zero");
        Rational inv = Rational(1) / nf.front().coeff;
        for (auto& t : nf)
            t.coeff *= inv;
        MBasisElem e;
        e.comp = nf.front().comp;
        e.lm = nf.front().monomial;
        e.lc = Rational(1);
        e.poly = std::move(nf);
        reduced.push_back(std::move(e));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const MBasisElem& a, const MBasisElem& b) {
        return mcompare({a.comp, a.lm, Rational(1)}, {b.comp, b.lm, Rational(1)}, order) > 0;
    });
    return reduced;
}

} // namespace

ModuleGroebnerBasis module_groebner_basis(const std::vector<std::vector<Polynomial>>& generators,
                                          const MonomialOrder& order) {
    if (generators.empty())
        throw DomainError("module Groebner basis of an empty generator list");
    const std::size_t components = generators.front().size();
    if (components == 0)
        throw DomainError("module elements need at least one component");
    RingPtr ring;
    for (const auto& g : generators) {
        if (g.size() != components)
            throw DomainError("mixed component counts in module generators");
        for (const auto& p : g) {
            if (!ring)
                ring = p.ring();
            else if (!same_ring(ring, p.ring()))
                throw DomainError("mixed rings in module generators");
        }
    }
    auto basis = module_buchberger(generators, order);
    basis = module_reduce_basis(std::move(basis), order);
    ModuleGroebnerBasis out{ring, order, components, {}};
    for (const auto& e : basis)
        out.elements.push_back(munpack(ring, components, e.poly));
    return out;
}

std::vector<Polynomial> module_normal_form(const std::vector<Polynomial>& v,
                                           const ModuleGroebnerBasis& basis) {
    if (v.size() != basis.components)
        throw DomainError("component count mismatch in module normal form");
    std::vector<MBasisElem> elems;
    for (const auto& e : basis.elements) {
        MTermVec t = msorted(e, basis.order);
        if (t.empty())
            continue;
        MBasisElem b;
        b.comp = t.front().comp;
        b.lm = t.front().monomial;
        b.lc = t.front().coeff;
        b.poly = std::move(t);
        elems.push_back(std::move(b));
    }
    MTermVec nf = mreduce_full(msorted(v, basis.order), elems, basis.order);
    return munpack(basis.ring, basis.components, nf);
}

SyzygyBasis syzygy_basis(const std::vector<Polynomial>& generators) {
    if (generators.empty())
        throw DomainError("syzygies of an empty generator list");
    const RingPtr& ring = generators.front().ring();
    for (const auto& g : generators)
        if (!same_ring(g.ring(), ring))
            throw DomainError("mixed rings in generator list");
    const std::size_t m = generators.size();
    MonomialOrder order = MonomialOrder::degrevlex(ring->var_count());

    // Augmented module in R^{1+m}: w_k = (g_k, e_k).  Under the
    // position-over-term order, component 0 is eliminated: the Groebner
    // basis elements with zero first slot are exactly a Groebner basis of
    // the syzygy module of the tuple.
    std::vector<std::vector<Polynomial>> augmented;
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<Polynomial> w;
        w.push_back(generators[k]);
        for (std::size_t j = 0; j < m; ++j)
            w.push_back(Polynomial::constant(ring, Rational(j == k ? 1 : 0)));
        augmented.push_back(std::move(w));
    }
    ModuleGroebnerBasis gb = module_groebner_basis(augmented, order);

    SyzygyBasis out{ring, m, {}, ModuleGroebnerBasis{ring, order, m, {}}};
    for (const auto& e : gb.elements) {
        if (!e.front().is_zero())
            continue;
        std::vector<Polynomial> col(e.begin() + 1, e.end());
        out.columns.push_back(col);
        out.module_basis.elements.push_back(std::move(col));
    }
    return out;
}

} // namespace aluffi
