#include "aluffi/ideal.hpp"

#include "aluffi/errors.hpp"

#include <algorithm>

namespace aluffi {

namespace {

// A variable name not used by the ring: base, then base_, base__, ...
std::string fresh_var_name(const PolynomialRing& ring, std::string base) {
    while (ring.var_index(base))
        base += '_';
    return base;
}

// Rebuild p in the ring with variable var removed; p must not use var.
Polynomial drop_variable(const Polynomial& p, std::size_t var, const RingPtr& smaller) {
    std::vector<Term> out;
    out.reserve(p.term_count());
    for (const auto& t : p.terms()) {
        if (t.monomial.exponent(var) != 0)
            throw InternalError("dropping a variable still in use");
        auto exps = t.monomial.exponents();
        exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(var));
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return Polynomial::from_terms(smaller, std::move(out));
}

std::vector<Polynomial> nonzero_generators(const Ideal& I) {
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero())
            gens.push_back(g);
    return gens;
}

} // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)),
      cache_(std::make_shared<Cache>()) {
    if (!ring_)
        throw DomainError("ideal needs a ring");
    for (const auto& g : generators_)
        if (!same_ring(g.ring(), ring_))
            throw DomainError("generator ring mismatch");
    if (generators_.empty())
        generators_.push_back(Polynomial::zero(ring_));
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
    if (order.var_count() != ring_->var_count())
        throw DomainError("order arity does not match the ring");
    const std::string key = order.cache_key();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end())
            return it->second;
    }
    GroebnerBasis gb = reduced_groebner_basis(generators_, order);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    // Map nodes are stable, so handing out references is safe.
    return cache_->entries.emplace(key, std::move(gb)).first->second;
}

const GroebnerBasis& Ideal::groebner() const {
    return groebner(MonomialOrder::degrevlex(ring_->var_count()));
}

bool ideal_membership(const Polynomial& p, const Ideal& I) {
    if (!same_ring(p.ring(), I.ring()))
        throw DomainError("ring mismatch in ideal membership");
    return normal_form(p, I.groebner()).is_zero();
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw DomainError("ring mismatch in ideal equality");
    return I.groebner() == J.groebner();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw DomainError("ring mismatch in ideal sum");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw DomainError("ring mismatch in ideal intersection");
    const RingPtr& R = I.ring();
    const std::size_t n = R->var_count();

    // t-trick: I \cap J = (t I + (1-t) J) \cap R.
    const std::string tname = fresh_var_name(*R, "t");
    RingPtr Rt = extend_ring(R, {tname});
    const std::size_t t_index = n;
    Polynomial t = Polynomial::variable(Rt, t_index);
    Polynomial one_minus_t = Polynomial::constant(Rt, Rational(1)) - t;

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators())
        if (!g.is_zero())
            gens.push_back(t * g.map_into(Rt));
    for (const auto& h : J.generators())
        if (!h.is_zero())
            gens.push_back(one_minus_t * h.map_into(Rt));
    if (gens.empty())
        return Ideal(R, {});

    const GroebnerBasis gb =
        reduced_groebner_basis(gens, MonomialOrder::elimination({t_index}, n + 1));
    std::vector<Polynomial> kept;
    for (const auto& e : gb.elements) {
        bool uses_t = false;
        for (const auto& term : e.terms())
            if (term.monomial.exponent(t_index) != 0) {
                uses_t = true;
                break;
            }
        if (!uses_t)
            kept.push_back(drop_variable(e, t_index, R));
    }
    return Ideal(R, std::move(kept));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& p) {
    if (!same_ring(p.ring(), I.ring()))
        throw DomainError("ring mismatch in ideal quotient");
    if (p.is_zero())
        throw DomainError("ideal quotient by zero");
    Ideal principal(I.ring(), {p});
    Ideal inter = ideal_intersection(I, principal);
    std::vector<Polynomial> gens;
    for (const auto& g : inter.generators())
        if (!g.is_zero())
            gens.push_back(exact_quotient(g, p));
    return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    if (!same_ring(I.ring(), J.ring()))
        throw DomainError("ring mismatch in ideal quotient");
    std::vector<Polynomial> gens = nonzero_generators(J);
    if (gens.empty()) {
        // (I : 0) is the whole ring.
        return Ideal(I.ring(), {Polynomial::constant(I.ring(), Rational(1))});
    }
    bool first = true;
    Ideal acc = I;
    for (const auto& g : gens) {
        Ideal q = ideal_quotient(I, g);
        acc = first ? q : ideal_intersection(acc, q);
        first = false;
    }
    return acc;
}

Ideal saturation(const Ideal& I, const Polynomial& p) {
    if (p.is_zero())
        throw DomainError("saturation by zero");
    Ideal current = I;
    for (;;) {
        Ideal next = ideal_quotient(current, p);
        if (ideal_equal(next, current))
            return current;
        current = next;
    }
}

Ideal saturation(const Ideal& I, const Ideal& J) {
    Ideal current = I;
    for (;;) {
        Ideal next = ideal_quotient(current, J);
        if (ideal_equal(next, current))
            return current;
        current = next;
    }
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars) {
    const RingPtr& R = I.ring();
    const std::size_t n = R->var_count();
    if (vars.empty())
        return I;
    std::vector<bool> eliminated(n, false);
    for (auto v : vars) {
        if (v >= n)
            throw DomainError("eliminated variable index out of range");
        eliminated[v] = true;
    }
    if (std::all_of(eliminated.begin(), eliminated.end(), [](bool b) { return b; }))
        throw DomainError("cannot eliminate every variable");

    std::vector<Polynomial> gens = nonzero_generators(I);
    if (gens.empty())
        return Ideal(R, {});
    const GroebnerBasis gb =
        reduced_groebner_basis(gens, MonomialOrder::elimination(vars, n));
    std::vector<Polynomial> kept;
    for (const auto& e : gb.elements) {
        bool uses = false;
        for (const auto& term : e.terms())
            for (auto v : vars)
                if (term.monomial.exponent(v) != 0) {
                    uses = true;
                    break;
                }
        if (!uses)
            kept.push_back(e);
    }
    return Ideal(R, std::move(kept));
}

int krull_dimension(const Ideal& I) {
    const GroebnerBasis& gb = I.groebner();
    if (gb.contains_one())
        return -1;
    const std::size_t n = I.ring()->var_count();
    if (gb.elements.empty())
        return static_cast<int>(n);
    if (n > 24)
        throw DomainError("dimension enumeration limited to 24 variables");

    std::vector<std::uint32_t> supports;
    supports.reserve(gb.elements.size());
    for (const auto& e : gb.elements) {
        std::uint32_t mask = 0;
        const Monomial& lm = e.leading_term(gb.order).monomial;
        for (std::size_t i = 0; i < n; ++i)
            if (lm.exponent(i) > 0)
                mask |= (1u << i);
        supports.push_back(mask);
    }
    // dim R/I = max |S| with no leading-term support contained in S.
    int best = 0;
    for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
        const int size = __builtin_popcount(subset);
        if (size <= best)
            continue;
        bool independent = true;
        for (auto m : supports)
            if ((m & ~subset) == 0) {
                independent = false;
                break;
            }
        if (independent)
            best = size;
    }
    return best;
}

std::uint64_t vector_space_dimension(const Ideal& I) {
    const GroebnerBasis& gb = I.groebner();
    if (gb.contains_one())
        return 0;
    const int dim = krull_dimension(I);
    if (dim != 0)
        throw DomainError("vector-space dimension needs a zero-dimensional ideal");
    const std::size_t n = I.ring()->var_count();

    std::vector<Monomial> lms;
    lms.reserve(gb.elements.size());
    for (const auto& e : gb.elements)
        lms.push_back(e.leading_term(gb.order).monomial);

    // Pure-power bounds exist in every variable (zero-dimensionality).
    std::vector<std::uint32_t> bound(n, 0);
    for (const auto& lm : lms) {
        std::size_t support_var = n;
        bool pure = true;
        for (std::size_t i = 0; i < n && pure; ++i) {
            if (lm.exponent(i) > 0) {
                if (support_var == n)
                    support_var = i;
                else
                    pure = false;
            }
        }
        if (pure && support_var < n) {
            const std::uint32_t e = lm.exponent(support_var);
            if (bound[support_var] == 0 || e < bound[support_var])
                bound[support_var] = e;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0)
            throw InternalError("missing pure power in a zero-dimensional staircase");

    // Count standard monomials by walking the bounded exponent box.
    std::uint64_t count = 0;
    std::vector<std::uint32_t> exps(n, 0);
    for (;;) {
        Monomial candidate{std::vector<std::uint32_t>(exps)};
        bool reducible = false;
        for (const auto& lm : lms)
            if (lm.divides(candidate)) {
                reducible = true;
                break;
            }
        if (!reducible)
            ++count;
        std::size_t i = 0;
        while (i < n && ++exps[i] >= bound[i])
            exps[i++] = 0;
        if (i == n)
            break;
    }
    return count;
}

Ideal origin_primary_component(const Ideal& I) {
    const RingPtr& R = I.ring();
    const std::size_t n = R->var_count();
    std::vector<Rational> origin(n, Rational(0));
    for (const auto& g : I.generators())
        if (g.evaluate(origin) != 0)
            throw DomainError("origin does not lie on V(I)");

    std::vector<Polynomial> mgens;
    mgens.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        mgens.push_back(Polynomial::variable(R, i));
    Ideal m(R, std::move(mgens));

    Ideal away = saturation(I, m);        // removes the origin component
    Ideal Q = ideal_quotient(I, away);    // what is left: the origin-primary part

    // The double colon is m-primary precisely when the origin is isolated
    // in V(I); verify by checking every coordinate eliminant is a pure power.
    if (Q.contains_one())
        throw DomainError("origin is not an isolated point of V(I)");
    if (krull_dimension(Q) != 0)
        throw DomainError("origin is not an isolated point of V(I)");
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                others.push_back(j);
        // Coordinate eliminant; Q itself in the univariate case.
        std::vector<Polynomial> eliminant =
            others.empty() ? Q.groebner().elements : eliminate(Q, others).generators();
        for (const auto& g : eliminant) {
            if (g.is_zero())
                continue;
            if (g.term_count() != 1 || g.leading_term().monomial.exponent(i) == 0)
                throw DomainError("origin is not an isolated point of V(I)");
        }
    }
    return Q;
}

Ideal local_primary_component(const Ideal& I, const RationalPoint& p) {
    const RingPtr& R = I.ring();
    if (p.kind != RationalPoint::Kind::affine)
        throw DomainError("local component expects an affine point");
    if (p.coords.size() != R->var_count())
        throw DomainError("point arity does not match the ring");
    for (const auto& g : I.generators())
        if (g.evaluate(p.coords) != 0)
            throw DomainError("point does not lie on V(I)");
    if (krull_dimension(I) != 0)
        throw DomainError("local component needs a zero-dimensional ideal");

    std::vector<Polynomial> translated;
    translated.reserve(I.generators().size());
    for (const auto& g : I.generators())
        translated.push_back(g.translate(p.coords));
    return origin_primary_component(Ideal(R, std::move(translated)));
}

std::uint64_t local_vector_space_dimension(const Ideal& I, const RationalPoint& p) {
    return vector_space_dimension(local_primary_component(I, p));
}

} // namespace aluffi
