#include "aluffi/blowup.hpp"

#include "aluffi/errors.hpp"
#include "aluffi/groebner.hpp"
#include "aluffi/hypersurface.hpp"

#include <algorithm>
#include <utility>

namespace aluffi {

std::string to_string(PresentationKind kind) {
    switch (kind) {
    case PresentationKind::sym:
        return "sym";
    case PresentationKind::rees:
        return "rees";
    case PresentationKind::aluffi:
        return "aluffi";
    }
    throw InternalError("unknown presentation kind");
}

namespace {

// base ring + T0..Tm; extend_ring rejects name collisions.
RingPtr t_extended_ring(const RingPtr& base, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        names.push_back("T" + std::to_string(j));
    return extend_ring(base, names);
}

// T-degree of a T-homogeneous polynomial; throws if mixed.
std::uint64_t t_degree(const Polynomial& p, std::size_t base_vars) {
    std::uint64_t deg = 0;
    bool first = true;
    for (const auto& term : p.terms()) {
        std::uint64_t d = 0;
        for (std::size_t i = base_vars; i < p.ring()->var_count(); ++i)
            d += term.monomial.exponent(i);
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            throw InternalError("presentation generator is not homogeneous in the T variables");
        }
    }
    return deg;
}

std::vector<Polynomial> reduced_basis_of(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens) {
    if (gens.empty())
        return {}; // zero ideal (no relations)
    return reduced_groebner_basis(gens, MonomialOrder::degrevlex(ring->var_count())).elements;
}

void tag_degrees(PresentationIdeal& pres) {
    pres.t_degrees.clear();
    pres.t_degrees.reserve(pres.generators.size());
    for (const auto& g : pres.generators)
        pres.t_degrees.push_back(t_degree(g, pres.base_vars));
}

std::vector<Polynomial> sym_generators(const Ideal& I, const RingPtr& extended) {
    const std::size_t n = I.ring()->var_count();
    const auto syz = syzygy_basis(I.generators());
    std::vector<Polynomial> gens;
    gens.reserve(syz.columns.size());
    for (const auto& column : syz.columns) {
        Polynomial g = Polynomial::zero(extended);
        for (std::size_t j = 0; j < column.size(); ++j)
            g += Polynomial::variable(extended, n + j) * column[j].map_into(extended);
        gens.push_back(std::move(g));
    }
    return gens;
}

} // namespace

PresentationIdeal sym_ideal(const Ideal& I) {
    if (I.is_zero())
        throw DomainError("Sym presentation of the zero ideal");
    PresentationIdeal pres;
    pres.kind = PresentationKind::sym;
    pres.base_vars = I.ring()->var_count();
    pres.extended_ring = t_extended_ring(I.ring(), I.generators().size());
    pres.generators = sym_generators(I, pres.extended_ring);
    tag_degrees(pres);
    for (auto d : pres.t_degrees)
        if (d != 1)
            throw InternalError("Sym relation of T-degree other than 1");
    pres.reduced_basis = reduced_basis_of(pres.extended_ring, pres.generators);
    return pres;
}

PresentationIdeal rees_ideal(const Ideal& I) {
    if (I.is_zero())
        throw DomainError("Rees presentation of the zero ideal");
    PresentationIdeal pres;
    pres.kind = PresentationKind::rees;
    pres.base_vars = I.ring()->var_count();
    pres.extended_ring = t_extended_ring(I.ring(), I.generators().size());

    std::string t_name = "t";
    while (pres.extended_ring->var_index(t_name))
        t_name += "_";
    const RingPtr working = extend_ring(pres.extended_ring, {t_name});
    const std::size_t t_var = working->var_count() - 1;

    const auto& gens = I.generators();
    const Polynomial t = Polynomial::variable(working, t_var);
    std::vector<Polynomial> graph;
    graph.reserve(gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j)
        graph.push_back(Polynomial::variable(working, pres.base_vars + j) -
                        t * gens[j].map_into(working));

    const Ideal eliminated = eliminate(Ideal(working, std::move(graph)), {t_var});
    for (const auto& g : eliminated.generators())
        if (!g.is_zero())
            pres.generators.push_back(g.map_into(pres.extended_ring));
    tag_degrees(pres);
    for (auto d : pres.t_degrees)
        if (d < 1)
            throw InternalError("Rees relation of T-degree 0");
    pres.reduced_basis = reduced_basis_of(pres.extended_ring, pres.generators);
    return pres;
}

LinearTypeVerdict is_linear_type(const Ideal& I) {
    return compare_presentations(sym_ideal(I), rees_ideal(I));
}

LinearTypeVerdict compare_presentations(const PresentationIdeal& sym,
                                        const PresentationIdeal& rees) {
    if (!same_ring(sym.extended_ring, rees.extended_ring))
        throw InternalError("Sym and Rees presentations disagree on the extended ring");

    const MonomialOrder order = MonomialOrder::degrevlex(sym.extended_ring->var_count());
    const auto as_basis = [&](const PresentationIdeal& p) {
        if (p.reduced_basis.empty())
            return GroebnerBasis{p.extended_ring, order, {}};
        return reduced_groebner_basis(p.reduced_basis, order);
    };
    const GroebnerBasis sym_gb = as_basis(sym);
    const GroebnerBasis rees_gb = as_basis(rees);
    for (const auto& g : sym_gb.elements)
        if (!normal_form(g, rees_gb).is_zero())
            throw InternalError("Sym relation escapes the Rees relation ideal");

    LinearTypeVerdict verdict;
    if (sym_gb.elements == rees_gb.elements) {
        verdict.is_linear_type = true;
        return verdict;
    }
    verdict.is_linear_type = false;
    std::uint64_t best_deg = 0;
    for (const auto& g : rees_gb.elements) {
        if (normal_form(g, sym_gb).is_zero())
            continue;
        const std::uint64_t d = t_degree(g, sym.base_vars);
        if (!verdict.witness || d < best_deg) {
            verdict.witness = g;
            best_deg = d;
        }
    }
    if (!verdict.witness)
        throw InternalError("unequal presentations without a witness");
    if (best_deg < 2)
        throw InternalError("linear-type witness of T-degree below 2");
    return verdict;
}

PresentationIdeal aluffi_presentation(const Polynomial& f) {
    const AffineHypersurface X(f); // rejects constants
    if (!check_reduced(X))
        throw DomainError("hypersurface is not reduced");
    if (!has_isolated_singularities(X))
        throw DomainError("singular locus is not zero-dimensional");

    const Ideal I = jacobian_ideal(f);
    PresentationIdeal pres = rees_ideal(I);
    pres.kind = PresentationKind::aluffi;
    const std::size_t n = pres.base_vars;
    const RingPtr& E = pres.extended_ring;
    pres.generators.push_back(f.map_into(E));
    pres.generators.push_back(Polynomial::variable(E, n)); // T0 = degree-one lift of f
    tag_degrees(pres);
    pres.reduced_basis = reduced_basis_of(E, pres.generators);
    const Ideal general(E, pres.generators);

    if (const auto qh = quasi_homogeneous_type(f)) {
        // (f, T0, sum_i r_i x_i T_{i+1}, Koszul minors of the partials)
        std::vector<Polynomial> shape;
        shape.push_back(f.map_into(E));
        shape.push_back(Polynomial::variable(E, n));
        Polynomial euler = Polynomial::zero(E);
        for (std::size_t i = 0; i < n; ++i)
            euler += Rational(qh->weights[i]) * Polynomial::variable(E, i) *
                     Polynomial::variable(E, n + 1 + i);
        shape.push_back(std::move(euler));
        std::vector<Polynomial> partials;
        for (std::size_t i = 0; i < n; ++i)
            partials.push_back(f.derivative(i).map_into(E));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                shape.push_back(partials[i] * Polynomial::variable(E, n + 1 + j) -
                                partials[j] * Polynomial::variable(E, n + 1 + i));
        if (!ideal_equal(general, Ideal(E, shape)))
            throw InternalError("quasi-homogeneous Aluffi shape disagrees with the general construction");
        pres.quasi_homogeneous_shape = std::move(shape);
    }

    if (is_locally_eulerian(X)) {
        // (f, T0, columns of [T1..Tn] * (syzygy matrix minus its first row))
        std::vector<Polynomial> shape;
        shape.push_back(f.map_into(E));
        shape.push_back(Polynomial::variable(E, n));
        const auto syz = syzygy_basis(I.generators());
        for (const auto& column : syz.columns) {
            Polynomial g = Polynomial::zero(E);
            for (std::size_t j = 1; j < column.size(); ++j)
                g += Polynomial::variable(E, n + j) * column[j].map_into(E);
            if (!g.is_zero())
                shape.push_back(std::move(g));
        }
        if (!ideal_equal(general, Ideal(E, shape)))
            throw InternalError("locally-Eulerian Aluffi shape disagrees with the general construction");
        pres.eulerian_shape = std::move(shape);
    }
    return pres;
}

} // namespace aluffi
