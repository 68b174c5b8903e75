#include "aluffi/polynomial.hpp"

#include "aluffi/errors.hpp"

#include <algorithm>
#include <map>

namespace aluffi {

namespace {

// Descending canonical degrevlex comparison for term sorting.
struct CanonicalDesc {
    const MonomialOrder& order;
    bool operator()(const Term& a, const Term& b) const {
        return order.greater(a.monomial, b.monomial);
    }
};

void check_same_ring(const RingPtr& a, const RingPtr& b, const char* op) {
    if (!same_ring(a, b))
        throw DomainError(std::string("ring mismatch in ") + op);
}

std::vector<Term> normalize_terms(std::size_t nvars, std::vector<Term> terms) {
    for (auto& t : terms) {
        if (t.monomial.var_count() != nvars)
            throw DomainError("term arity does not match the ring");
        // mpq arithmetic and comparison assume canonical form; enforce it
        // here so caller-built rationals like mpq_class(4, 2) cannot leak in
        t.coeff.canonicalize();
    }
    MonomialOrder canon = MonomialOrder::degrevlex(nvars);
    std::sort(terms.begin(), terms.end(), CanonicalDesc{canon});
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0)
            out.pop_back();
    }
    return out;
}

} // namespace

Polynomial Polynomial::zero(RingPtr ring) {
    return Polynomial(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, Rational value) {
    value.canonicalize();
    std::vector<Term> terms;
    if (value != 0)
        terms.push_back({Monomial::one(ring->var_count()), std::move(value)});
    return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
    const std::size_t n = ring->var_count();
    if (i >= n)
        throw DomainError("variable index out of range");
    std::vector<Term> terms{{Monomial::variable(n, i), Rational(1)}};
    return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Rational coeff) {
    if (m.var_count() != ring->var_count())
        throw DomainError("term arity does not match the ring");
    coeff.canonicalize();
    std::vector<Term> terms;
    if (coeff != 0)
        terms.push_back({std::move(m), std::move(coeff)});
    return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    auto normalized = normalize_terms(ring->var_count(), std::move(terms));
    return Polynomial(std::move(ring), std::move(normalized));
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    return terms_.front();
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty())
        throw DomainError("leading term of the zero polynomial");
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.greater(t.monomial, best->monomial))
            best = &t;
    return *best;
}

std::uint64_t Polynomial::total_degree() const {
    if (terms_.empty())
        throw DomainError("degree of the zero polynomial is undefined");
    // Canonical order puts a maximal-degree term first.
    return terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const std::uint64_t d = terms_.front().monomial.degree();
    return terms_.back().monomial.degree() == d;
}

std::uint64_t Polynomial::multiplicity_at_origin() const {
    if (terms_.empty())
        throw DomainError("multiplicity of the zero polynomial is undefined");
    // Canonical order is degree-first, so the last term has minimal degree.
    return terms_.back().monomial.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.monomial == m)
            return t.coeff;
    return Rational(0);
}

Rational Polynomial::constant_coefficient() const {
    if (!terms_.empty() && terms_.back().monomial.is_one())
        return terms_.back().coeff;
    return Rational(0);
}

Polynomial Polynomial::homogeneous_component(std::uint64_t degree) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.monomial.degree() == degree)
            out.push_back(t);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Term> out(terms_);
    for (auto& t : out)
        t.coeff = -t.coeff;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    check_same_ring(ring_, other.ring_, "addition");
    MonomialOrder canon = MonomialOrder::degrevlex(ring_->var_count());
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        auto c = canon.compare(terms_[i].monomial, other.terms_[j].monomial);
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(other.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + other.terms_[j].coeff;
            if (s != 0)
                out.push_back({terms_[i].monomial, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j)
        out.push_back(other.terms_[j]);
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_ring(ring_, other.ring_, "multiplication");
    std::vector<Term> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : other.terms_)
            out.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Rational factor = c;
    factor.canonicalize();
    if (factor == 0)
        return zero(ring_);
    std::vector<Term> out(terms_);
    for (auto& t : out)
        t.coeff *= factor;
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial result = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u)
            result *= base;
        e >>= 1u;
        if (e)
            base *= base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_))
        return false;
    if (terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].monomial != other.terms_[i].monomial ||
            terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    if (var >= ring_->var_count())
        throw DomainError("variable index out of range");
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const std::uint32_t e = t.monomial.exponent(var);
        if (e == 0)
            continue;
        auto exps = t.monomial.exponents();
        exps[var] = e - 1;
        out.push_back({Monomial(std::move(exps)), t.coeff * Rational(e)});
    }
    // Differentiation keeps distinct monomials distinct; just reuse the
    // normalizing constructor for safety.
    return from_terms(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != ring_->var_count())
        throw DomainError("evaluation point arity does not match the ring");
    std::vector<Rational> canon(point.begin(), point.end());
    for (auto& c : canon)
        c.canonicalize();
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < canon.size(); ++i) {
            const std::uint32_t e = t.monomial.exponent(i);
            if (e)
                v *= aluffi::pow(canon[i], e);
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
    if (var >= ring_->var_count())
        throw DomainError("variable index out of range");
    check_same_ring(ring_, value.ring_, "substitution");
    std::uint32_t max_e = 0;
    for (const auto& t : terms_)
        max_e = std::max(max_e, t.monomial.exponent(var));
    // value^0 .. value^max_e, computed once.
    std::vector<Polynomial> powers;
    powers.push_back(constant(ring_, Rational(1)));
    for (std::uint32_t e = 1; e <= max_e; ++e)
        powers.push_back(powers.back() * value);
    Polynomial acc = zero(ring_);
    for (const auto& t : terms_) {
        const std::uint32_t e = t.monomial.exponent(var);
        auto exps = t.monomial.exponents();
        exps[var] = 0;
        acc += Polynomial::term(ring_, Monomial(std::move(exps)), t.coeff) * powers[e];
    }
    return acc;
}

Polynomial Polynomial::translate(std::span<const Rational> point) const {
    if (point.size() != ring_->var_count())
        throw DomainError("translation point arity does not match the ring");
    Polynomial result = *this;
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i] == 0)
            continue;
        Polynomial shifted = variable(ring_, i) + constant(ring_, point[i]);
        result = result.substitute(i, shifted);
    }
    return result;
}

Polynomial Polynomial::homogenize(const std::string& new_var) const {
    RingPtr bigger = extend_ring(ring_, {new_var});
    if (terms_.empty())
        return zero(bigger);
    const std::uint64_t d = total_degree();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto exps = t.monomial.exponents();
        exps.push_back(static_cast<std::uint32_t>(d - t.monomial.degree()));
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return from_terms(bigger, std::move(out));
}

Polynomial Polynomial::dehomogenize(std::size_t var) const {
    if (var >= ring_->var_count())
        throw DomainError("variable index out of range");
    if (!is_homogeneous())
        throw DomainError("dehomogenize requires a homogeneous polynomial");
    RingPtr smaller = remove_variable(ring_, var);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        auto full = t.monomial.exponents();
        full.erase(full.begin() + static_cast<std::ptrdiff_t>(var));
        out.push_back({Monomial(std::move(full)), t.coeff});
    }
    return from_terms(smaller, std::move(out));
}

Polynomial Polynomial::map_into(const RingPtr& bigger) const {
    std::vector<bool> used(ring_->var_count(), false);
    for (const auto& t : terms_)
        for (std::size_t i = 0; i < ring_->var_count(); ++i)
            if (t.monomial.exponent(i) != 0)
                used[i] = true;
    std::vector<std::size_t> where(ring_->var_count(), 0);
    for (std::size_t i = 0; i < ring_->var_count(); ++i) {
        if (!used[i])
            continue;
        auto idx = bigger->var_index(ring_->var_name(i));
        if (!idx)
            throw DomainError("target ring lacks variable '" + ring_->var_name(i) + "'");
        where[i] = *idx;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> exps(bigger->var_count(), 0);
        for (std::size_t i = 0; i < ring_->var_count(); ++i)
            if (used[i])
                exps[where[i]] = t.monomial.exponent(i);
        out.push_back({Monomial(std::move(exps)), t.coeff});
    }
    return from_terms(bigger, std::move(out));
}

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        const bool negative = sign(t.coeff) < 0;
        if (k == 0) {
            if (negative)
                s += '-';
        } else {
            s += negative ? " - " : " + ";
        }
        Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        std::string factors;
        for (std::size_t i = 0; i < ring_->var_count(); ++i) {
            const std::uint32_t e = t.monomial.exponent(i);
            if (e == 0)
                continue;
            if (!factors.empty())
                factors += '*';
            factors += ring_->var_name(i);
            if (e > 1)
                factors += '^' + std::to_string(e);
        }
        if (factors.empty()) {
            s += aluffi::to_string(mag);
        } else if (mag == 1) {
            s += factors;
        } else {
            s += aluffi::to_string(mag) + '*' + factors;
        }
    }
    return s;
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero())
        throw DomainError("division by the zero polynomial");
    if (!same_ring(f.ring(), g.ring()))
        throw DomainError("ring mismatch in division");
    Polynomial r = f;
    std::vector<Term> quotient;
    const Term& gl = g.leading_term();
    while (!r.is_zero()) {
        const Term& rl = r.leading_term();
        if (!gl.monomial.divides(rl.monomial))
            throw InternalError("inexact polynomial division");
        Term q{rl.monomial.divide(gl.monomial), rl.coeff / gl.coeff};
        r -= Polynomial::term(r.ring(), q.monomial, q.coeff) * g;
        quotient.push_back(std::move(q));
    }
    return Polynomial::from_terms(f.ring(), std::move(quotient));
}

Polynomial primitive_part(const Polynomial& f) {
    if (f.is_zero())
        return f;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& t : f.terms()) {
        den_lcm = lcm(den_lcm, t.coeff.get_den());
        num_gcd = gcd(num_gcd, t.coeff.get_num());
    }
    Rational scale = make_rational(den_lcm, num_gcd); // positive: gcd, lcm are
    // Sign convention: positive canonical leading coefficient.
    if (sign(f.leading_term().coeff) < 0)
        scale = -scale;
    return f * scale;
}

Polynomial monic(const Polynomial& f, const MonomialOrder& order) {
    if (f.is_zero())
        return f;
    return f * (Rational(1) / f.leading_term(order).coeff);
}

} // namespace aluffi
