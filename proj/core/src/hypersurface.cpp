#include "aluffi/hypersurface.hpp"

#include "aluffi/errors.hpp"
#include "aluffi/limits.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace aluffi {

namespace {

bool is_constant(const Polynomial& f) {
    return f.is_zero() || f.total_degree() == 0;
}

std::vector<Rational> affine_coords(const RingPtr& ring, const RationalPoint& p) {
    if (p.kind != RationalPoint::Kind::affine)
        throw DomainError("expected an affine point");
    if (p.coords.size() != ring->var_count())
        throw DomainError("point arity does not match the ring");
    return p.coords;
}

// Validates "reduced with isolated singularities" for affine f and hands
// back the Jacobian ideal for reuse.
Ideal validated_jacobian(const Polynomial& f) {
    Ideal I = jacobian_ideal(f);
    const int n = static_cast<int>(f.ring()->var_count());
    const int k = krull_dimension(I);
    if (k > n - 2)
        throw DomainError("hypersurface is not reduced");
    if (k > 0)
        throw DomainError("singular locus is not zero-dimensional");
    return I;
}

// 1 in I(f) + (J(f) : f), the point-free locally-Eulerian criterion.
// I must be the Jacobian ideal of f.
bool locally_eulerian_criterion(const Polynomial& f, const Ideal& I) {
    const Ideal colon = ideal_quotient(gradient_ideal(f), f);
    return ideal_sum(I, colon).contains_one();
}

// Some element of a generating set of (J(f) : f) survives at p.
bool locally_eulerian_at(const Polynomial& f, const std::vector<Rational>& coords) {
    const Ideal colon = ideal_quotient(gradient_ideal(f), f);
    for (const auto& g : colon.groebner().elements)
        if (g.evaluate(coords) != 0)
            return true;
    return false;
}

} // namespace

AffineHypersurface::AffineHypersurface(Polynomial f) : f_(std::move(f)) {
    if (is_constant(f_))
        throw DomainError("an affine hypersurface needs a nonconstant polynomial");
}

ProjectiveHypersurface::ProjectiveHypersurface(Polynomial f) : f_(std::move(f)) {
    if (f_.is_zero())
        throw DomainError("a projective hypersurface needs a nonzero polynomial");
    if (!f_.is_homogeneous())
        throw DomainError("a projective hypersurface needs a homogeneous polynomial");
    if (f_.total_degree() < 2)
        throw DomainError("a projective hypersurface needs degree at least 2");
    if (f_.ring()->var_count() < 2)
        throw DomainError("a projective hypersurface needs at least two variables");
}

std::string SingularityReport::label_string() const {
    switch (label) {
    case SingularityLabel::smooth:
        return "smooth";
    case SingularityLabel::a_k:
        return "A_" + std::to_string(a_index);
    case SingularityLabel::non_double_point:
        return "non-double-point";
    }
    throw InternalError("unknown singularity label");
}

Ideal gradient_ideal(const Polynomial& f) {
    if (is_constant(f))
        throw DomainError("gradient ideal of a constant polynomial");
    const std::size_t n = f.ring()->var_count();
    std::vector<Polynomial> gens;
    gens.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(f.derivative(i));
    return Ideal(f.ring(), std::move(gens));
}

Ideal jacobian_ideal(const Polynomial& f) {
    if (is_constant(f))
        throw DomainError("Jacobian ideal of a constant polynomial");
    const std::size_t n = f.ring()->var_count();
    std::vector<Polynomial> gens;
    gens.reserve(n + 1);
    gens.push_back(f);
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(f.derivative(i));
    return Ideal(f.ring(), std::move(gens));
}

bool check_reduced(const AffineHypersurface& X) {
    const int n = static_cast<int>(X.ring()->var_count());
    return krull_dimension(jacobian_ideal(X.poly())) <= n - 2;
}

bool check_reduced(const ProjectiveHypersurface& X) {
    const int n = static_cast<int>(X.ring()->var_count());
    return krull_dimension(gradient_ideal(X.poly())) <= n - 2;
}

bool has_isolated_singularities(const AffineHypersurface& X) {
    const Ideal I = jacobian_ideal(X.poly());
    const int k = krull_dimension(I);
    if (k > static_cast<int>(X.ring()->var_count()) - 2)
        throw DomainError("hypersurface is not reduced");
    return k <= 0;
}

bool has_isolated_singularities(const ProjectiveHypersurface& X) {
    const Ideal J = gradient_ideal(X.poly());
    const int k = krull_dimension(J);
    if (k > static_cast<int>(X.ring()->var_count()) - 2)
        throw DomainError("hypersurface is not reduced");
    return k <= 1;
}

// ---------------------------------------------------------------------------
// Rational point search

namespace {

// Distinct prime factors of |v| by trial division up to 10^6.  A leftover
// cofactor is kept as one pseudo-prime; if it is composite, some candidate
// roots are missed, which only de-asserts the completeness flag.
std::vector<Integer> prime_factors(Integer v) {
    std::vector<Integer> out;
    if (v < 0)
        v = -v;
    if (v <= 1)
        return out;
    const auto strip = [&](const Integer& p) {
        if (v % p == 0) {
            out.push_back(p);
            while (v % p == 0)
                v /= p;
        }
    };
    strip(2);
    for (Integer p = 3; p <= 1000000 && p * p <= v; p += 2)
        strip(p);
    if (v > 1)
        out.push_back(v);
    return out;
}

// All positive divisors assembled from the prime factors of |v|.
std::vector<Integer> divisors(const Integer& v) {
    std::vector<Integer> out{1};
    Integer rest = v < 0 ? Integer(-v) : v;
    for (const auto& p : prime_factors(rest)) {
        std::uint64_t e = 0;
        Integer q = rest;
        while (q % p == 0) {
            q /= p;
            ++e;
        }
        const std::size_t base = out.size();
        Integer pk = 1;
        for (std::uint64_t k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i)
                out.push_back(out[i] * pk);
        }
        if (out.size() > 100000)
            throw LimitError("too many divisor candidates in the rational-root search");
    }
    return out;
}

// Rational roots of a nonzero polynomial using only variable `var`.
std::vector<Rational> rational_roots(const Polynomial& g, std::size_t var) {
    const Polynomial prim = primitive_part(g);
    std::map<std::uint32_t, Integer> coeff;
    for (const auto& t : prim.terms()) {
        for (std::size_t j = 0; j < prim.ring()->var_count(); ++j)
            if (j != var && t.monomial.exponent(j) != 0)
                throw InternalError("eliminant is not univariate");
        if (!is_integer(t.coeff))
            throw InternalError("primitive part has a non-integer coefficient");
        coeff[t.monomial.exponent(var)] = t.coeff.get_num();
    }
    std::set<Rational> roots;
    const std::uint32_t low = coeff.begin()->first;
    const std::uint32_t high = coeff.rbegin()->first;
    if (low > 0)
        roots.insert(Rational(0));
    if (high > low) {
        const auto eval = [&](const Rational& r) {
            Rational acc(0);
            for (const auto& [e, c] : coeff)
                acc += Rational(c) * pow(r, e - low);
            return acc;
        };
        for (const auto& num : divisors(coeff.at(low)))
            for (const auto& den : divisors(coeff.at(high))) {
                const Rational cand = make_rational(num, den);
                if (eval(cand) == 0)
                    roots.insert(cand);
                if (eval(-cand) == 0)
                    roots.insert(-cand);
            }
    }
    return {roots.begin(), roots.end()};
}

// Rational points of V(I) for a zero-dimensional (or unit) ideal, plus the
// completeness flag: found local multiplicities account for dim R/I.
RationalPointSearch rational_points_zero_dim(const Ideal& I) {
    RationalPointSearch out;
    if (I.contains_one()) {
        out.complete = true;
        return out;
    }
    const std::size_t n = I.ring()->var_count();
    const std::uint64_t total = vector_space_dimension(I);

    std::vector<std::vector<Rational>> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                others.push_back(j);
        const Ideal elim = others.empty() ? I : eliminate(I, others);
        const auto& gb = elim.groebner().elements;
        if (gb.size() != 1)
            throw InternalError("eliminant of a zero-dimensional ideal is not principal");
        const Polynomial& g = gb[0];
        Polynomial sf = g;
        const Polynomial dg = g.derivative(i);
        if (!dg.is_zero()) {
            // gcd(g, g') is the single element of the reduced basis of (g, g')
            const Ideal pair(I.ring(), {g, dg});
            const auto& pair_gb = pair.groebner().elements;
            if (pair_gb.size() != 1)
                throw InternalError("univariate gcd came out non-principal");
            if (pair_gb[0].total_degree() > 0)
                sf = exact_quotient(g, pair_gb[0]);
        }
        values[i] = rational_roots(sf, i);
    }

    std::uint64_t grid = 1;
    for (const auto& v : values) {
        grid *= v.size();
        if (grid > 200000)
            throw LimitError("too many candidate singular points");
        if (grid == 0)
            break;
    }

    std::vector<std::vector<Rational>> found;
    if (grid > 0) {
        std::vector<std::size_t> idx(n, 0);
        while (true) {
            std::vector<Rational> pt;
            pt.reserve(n);
            for (std::size_t i = 0; i < n; ++i)
                pt.push_back(values[i][idx[i]]);
            bool onV = true;
            for (const auto& g : I.generators())
                if (!g.is_zero() && g.evaluate(pt) != 0) {
                    onV = false;
                    break;
                }
            if (onV)
                found.push_back(std::move(pt));
            std::size_t i = 0;
            while (i < n && ++idx[i] >= values[i].size())
                idx[i++] = 0;
            if (i == n)
                break;
        }
    }

    std::sort(found.begin(), found.end());
    std::uint64_t accounted = 0;
    for (auto& pt : found) {
        RationalPoint p = RationalPoint::affine(pt);
        accounted += local_vector_space_dimension(I, p);
        out.points.push_back(std::move(p));
    }
    out.complete = (accounted == total);
    return out;
}

} // namespace

RationalPointSearch rational_singular_points(const AffineHypersurface& X) {
    const Ideal I = validated_jacobian(X.poly());
    return rational_points_zero_dim(I);
}

RationalPointSearch rational_singular_points(const ProjectiveHypersurface& X) {
    const Ideal J = gradient_ideal(X.poly());
    const int k = krull_dimension(J);
    const std::size_t nv = X.ring()->var_count();
    if (k > static_cast<int>(nv) - 2)
        throw DomainError("hypersurface is not reduced");
    if (k > 1)
        throw DomainError("singular locus is not isolated");

    RationalPointSearch out;
    out.complete = true;
    std::set<std::vector<Rational>> seen;
    for (std::size_t i = 0; i < nv; ++i) {
        const Polynomial F = X.poly().dehomogenize(i);
        if (is_constant(F))
            continue; // f = c*x_i^d: no points of X in this chart
        const auto chart = rational_points_zero_dim(jacobian_ideal(F));
        out.complete = out.complete && chart.complete;
        for (const auto& p : chart.points) {
            std::vector<Rational> rep = p.coords;
            rep.insert(rep.begin() + static_cast<std::ptrdiff_t>(i), Rational(1));
            RationalPoint proj = RationalPoint::projective(std::move(rep));
            if (seen.insert(proj.rep).second)
                out.points.push_back(std::move(proj));
        }
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const RationalPoint& a, const RationalPoint& b) { return a.rep < b.rep; });
    return out;
}

MilnorTjurina milnor_tjurina(const Polynomial& f, const RationalPoint& p) {
    if (is_constant(f))
        throw DomainError("constant polynomial");
    const auto coords = affine_coords(f.ring(), p);
    if (f.evaluate(coords) != 0)
        throw DomainError("point does not lie on the hypersurface");
    const std::size_t n = f.ring()->var_count();
    for (std::size_t i = 0; i < n; ++i)
        if (f.derivative(i).evaluate(coords) != 0)
            throw DomainError("point is not a singular point");
    const Polynomial ft = f.translate(coords);
    MilnorTjurina out;
    out.milnor = vector_space_dimension(origin_primary_component(gradient_ideal(ft)));
    out.tjurina = vector_space_dimension(origin_primary_component(jacobian_ideal(ft)));
    if (out.tjurina < 1 || out.milnor < out.tjurina)
        throw InternalError("Milnor/Tjurina inequality violated");
    return out;
}

bool is_locally_eulerian(const AffineHypersurface& X) {
    const Ideal I = validated_jacobian(X.poly());
    return locally_eulerian_criterion(X.poly(), I);
}

bool is_locally_eulerian(const AffineHypersurface& X, const RationalPoint& p) {
    const auto coords = affine_coords(X.ring(), p);
    (void)validated_jacobian(X.poly());
    if (X.poly().evaluate(coords) != 0)
        throw DomainError("point does not lie on the hypersurface");
    return locally_eulerian_at(X.poly(), coords);
}

// ---------------------------------------------------------------------------
// Quasi-homogeneity

namespace {

struct AffineSolutionSpace {
    std::vector<Rational> particular;             // one solution of <a, r> = 1
    std::vector<std::vector<Rational>> nullspace; // basis of <a, r> = 0
};

// Row-reduce the system <a, r> = 1 over all a in the support; nullopt when
// inconsistent.
std::optional<AffineSolutionSpace> solve_support_system(const Polynomial& f) {
    const std::size_t n = f.ring()->var_count();
    std::vector<std::vector<Rational>> rows;
    for (const auto& t : f.terms()) {
        std::vector<Rational> row(n + 1, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            row[i] = Rational(t.monomial.exponent(i));
        row[n] = 1;
        rows.push_back(std::move(row));
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0)
            ++sel;
        if (sel == rows.size())
            continue;
        std::swap(rows[r], rows[sel]);
        const Rational inv = rows[r][c];
        for (auto& x : rows[r])
            x /= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            const Rational factor = rows[i][c];
            for (std::size_t j = 0; j <= n; ++j)
                rows[i][j] -= factor * rows[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][n] != 0)
            return std::nullopt;

    AffineSolutionSpace out;
    out.particular.assign(n, Rational(0));
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
        out.particular[pivot_cols[i]] = rows[i][n];
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols)
        is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        std::vector<Rational> v(n, Rational(0));
        v[c] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i)
            v[pivot_cols[i]] = -rows[i][c];
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

// sum coeff_j t_j <= rhs, strict when `strict`.
struct FMConstraint {
    std::vector<Rational> coeff;
    Rational rhs;
    bool strict = false;
};

// Fourier-Motzkin feasibility with solution recovery.
std::optional<std::vector<Rational>> fm_solve(std::vector<FMConstraint> system, std::size_t nvar) {
    std::vector<std::vector<FMConstraint>> stages;
    stages.push_back(std::move(system));
    for (std::size_t k = 0; k < nvar; ++k) {
        const auto& cur = stages.back();
        std::vector<FMConstraint> next;
        std::vector<const FMConstraint*> lower, upper;
        for (const auto& cst : cur) {
            if (cst.coeff[k] == 0)
                next.push_back(cst);
            else if (cst.coeff[k] > 0)
                upper.push_back(&cst);
            else
                lower.push_back(&cst);
        }
        for (const auto* lo : lower)
            for (const auto* up : upper) {
                const Rational a = up->coeff[k];  // > 0
                const Rational b = -lo->coeff[k]; // > 0
                FMConstraint cmb;
                cmb.coeff.assign(nvar, Rational(0));
                for (std::size_t j = k + 1; j < nvar; ++j)
                    cmb.coeff[j] = a * lo->coeff[j] + b * up->coeff[j];
                cmb.rhs = a * lo->rhs + b * up->rhs;
                cmb.strict = lo->strict || up->strict;
                next.push_back(std::move(cmb));
            }
        stages.push_back(std::move(next));
    }
    for (const auto& cst : stages.back())
        if (cst.strict ? !(cst.rhs > 0) : !(cst.rhs >= 0))
            return std::nullopt;

    std::vector<Rational> t(nvar, Rational(0));
    for (std::size_t k = nvar; k-- > 0;) {
        bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
        Rational lo(0), hi(0);
        for (const auto& cst : stages[k]) {
            if (cst.coeff[k] == 0)
                continue;
            Rational rest = cst.rhs;
            for (std::size_t j = k + 1; j < nvar; ++j)
                rest -= cst.coeff[j] * t[j];
            const Rational bound = rest / cst.coeff[k];
            if (cst.coeff[k] > 0) {
                if (!has_hi || bound < hi) {
                    hi = bound;
                    hi_strict = cst.strict;
                    has_hi = true;
                } else if (bound == hi) {
                    hi_strict = hi_strict || cst.strict;
                }
            } else {
                if (!has_lo || bound > lo) {
                    lo = bound;
                    lo_strict = cst.strict;
                    has_lo = true;
                } else if (bound == lo) {
                    lo_strict = lo_strict || cst.strict;
                }
            }
        }
        if (has_lo && has_hi) {
            if (lo < hi)
                t[k] = (lo + hi) / 2;
            else if (lo == hi && !lo_strict && !hi_strict)
                t[k] = lo;
            else
                throw InternalError("empty interval while recovering a feasible point");
        } else if (has_lo) {
            t[k] = lo + 1;
        } else if (has_hi) {
            t[k] = hi - 1;
        } else {
            t[k] = 0;
        }
    }
    return t;
}

} // namespace

std::optional<QuasiHomogeneousType> quasi_homogeneous_type(const Polynomial& f) {
    if (f.is_zero())
        throw DomainError("quasi-homogeneity of the zero polynomial");
    const std::size_t n = f.ring()->var_count();
    const auto space = solve_support_system(f);
    if (!space)
        return std::nullopt;

    // positivity of r = particular + nullspace * t, as -(V t)_i < particular_i
    const std::size_t nu = space->nullspace.size();
    std::vector<FMConstraint> system;
    system.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FMConstraint cst;
        cst.coeff.assign(nu, Rational(0));
        for (std::size_t j = 0; j < nu; ++j)
            cst.coeff[j] = -space->nullspace[j][i];
        cst.rhs = space->particular[i];
        cst.strict = true;
        system.push_back(std::move(cst));
    }
    const auto t = fm_solve(std::move(system), nu);
    if (!t)
        return std::nullopt;

    std::vector<Rational> r = space->particular;
    for (std::size_t j = 0; j < nu; ++j)
        for (std::size_t i = 0; i < n; ++i)
            r[i] += (*t)[j] * space->nullspace[j][i];

    Integer den_lcm = 1;
    for (const auto& w : r) {
        if (!(w > 0))
            throw InternalError("recovered weight is not positive");
        den_lcm = lcm(den_lcm, w.get_den());
    }
    std::vector<Integer> weights;
    Integer num_gcd = 0;
    for (const auto& w : r) {
        const Rational scaled = w * Rational(den_lcm);
        if (!is_integer(scaled))
            throw InternalError("weight scaling failed");
        weights.push_back(scaled.get_num());
        num_gcd = gcd(num_gcd, weights.back());
    }
    for (auto& w : weights)
        w /= num_gcd;

    Integer degree = 0;
    bool first = true;
    for (const auto& term : f.terms()) {
        Integer d = 0;
        for (std::size_t i = 0; i < n; ++i)
            d += weights[i] * term.monomial.exponent(i);
        if (first) {
            degree = d;
            first = false;
        } else if (d != degree) {
            throw InternalError("inconsistent quasi-homogeneous weights");
        }
    }
    return QuasiHomogeneousType{std::move(degree), std::move(weights)};
}

// ---------------------------------------------------------------------------
// Classification

SingularityReport singular_point_report(const Polynomial& f, const RationalPoint& p) {
    const auto coords = affine_coords(f.ring(), p);
    const MilnorTjurina mt = milnor_tjurina(f, p); // validates singular + isolated
    SingularityReport rep;
    rep.point = p;
    rep.milnor = mt.milnor;
    rep.tjurina = mt.tjurina;

    const Polynomial ft = f.translate(coords);
    rep.multiplicity = ft.multiplicity_at_origin();
    if (rep.multiplicity < 2)
        throw InternalError("singular point with multiplicity below 2");

    const bool by_numbers = (mt.milnor == mt.tjurina);
    const bool by_colon = locally_eulerian_at(f, coords);
    if (by_numbers != by_colon)
        throw InternalError("locally-Eulerian verdicts disagree at a singular point");
    rep.locally_eulerian = by_numbers;

    if (rep.multiplicity == 2) {
        rep.label = SingularityLabel::a_k;
        rep.a_index = mt.milnor;
    } else {
        rep.label = SingularityLabel::non_double_point;
    }

    if (f.ring()->var_count() == 2 && rep.multiplicity == 2) {
        const auto mono = [](std::uint32_t i, std::uint32_t j) {
            return Monomial(std::vector<std::uint32_t>{i, j});
        };
        const Rational a = ft.coefficient(mono(2, 0));
        const Rational b = ft.coefficient(mono(1, 1));
        const Rational c = ft.coefficient(mono(0, 2));
        rep.quadratic_discriminant = b * b - 4 * a * c;
        if (*rep.quadratic_discriminant == 0) {
            if (mt.milnor < 2)
                throw InternalError("repeated tangent with Milnor number 1");
            // the repeated tangent: (2a x + b y)^2 = 4a q, or y^2 when a = 0
            Polynomial tangent = a != 0
                ? Polynomial::term(f.ring(), mono(1, 0), 2 * a) +
                      Polynomial::term(f.ring(), mono(0, 1), b)
                : Polynomial::variable(f.ring(), 1);
            tangent = primitive_part(tangent);
            const Ideal contact(f.ring(), {ft, tangent});
            if (krull_dimension(contact) == 0) {
                const RationalPoint origin = RationalPoint::affine({Rational(0), Rational(0)});
                rep.tangent_contact = local_vector_space_dimension(contact, origin);
            }
            rep.tangent_line = std::move(tangent);
        } else if (mt.milnor != 1) {
            throw InternalError("node with Milnor number above 1");
        }
    }
    return rep;
}

SingularityReport classify_plane_singularity(const Polynomial& f, const RationalPoint& p) {
    if (f.ring()->var_count() != 2)
        throw DomainError("plane classification needs exactly two variables");
    return singular_point_report(f, p);
}

std::uint64_t intersection_multiplicity_with_line(const Polynomial& f,
                                                  const RationalPoint& p,
                                                  const Polynomial& line) {
    if (f.ring()->var_count() != 2)
        throw DomainError("intersection multiplicity needs exactly two variables");
    if (!same_ring(f.ring(), line.ring()))
        throw DomainError("curve and line live in different rings");
    if (is_constant(f))
        throw DomainError("constant polynomial");
    if (line.is_zero() || line.total_degree() != 1)
        throw DomainError("line must have degree 1");
    const auto coords = affine_coords(f.ring(), p);
    if (line.evaluate(coords) != 0)
        throw DomainError("line does not pass through the point");
    const Ideal I(f.ring(), {f, line});
    if (I.contains_one())
        return 0;
    if (krull_dimension(I) != 0)
        throw DomainError("line is a component of the curve");
    if (f.evaluate(coords) != 0)
        return 0;
    return local_vector_space_dimension(I, p);
}

GradientLinearTypeVerdict gradient_linear_type(const ProjectiveHypersurface& X) {
    const Ideal J = gradient_ideal(X.poly());
    const int k = krull_dimension(J);
    const std::size_t nv = X.ring()->var_count();
    if (k > static_cast<int>(nv) - 2)
        throw DomainError("hypersurface is not reduced");
    if (k > 1)
        throw DomainError("singular locus is not isolated");

    GradientLinearTypeVerdict out;
    for (std::size_t i = 0; i < nv; ++i) {
        const Polynomial F = X.poly().dehomogenize(i);
        bool chart_ok = true;
        if (!is_constant(F))
            chart_ok = locally_eulerian_criterion(F, jacobian_ideal(F));
        out.verdict = out.verdict && chart_ok;
        out.charts.push_back(ChartVerdict{i, X.ring()->var_name(i), F, chart_ok});
    }
    return out;
}

// ---------------------------------------------------------------------------
// The x^a + x^c y^d + y^b family

Polynomial family_member(const RingPtr& ring, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c, std::uint64_t d) {
    if (ring->var_count() != 2)
        throw DomainError("family members live in two variables");
    const auto cap = [](std::uint64_t e) {
        if (e > 100000)
            throw DomainError("family exponent too large");
        return static_cast<std::uint32_t>(e);
    };
    std::vector<Term> terms;
    terms.push_back({Monomial(std::vector<std::uint32_t>{cap(a), 0}), Rational(1)});
    terms.push_back({Monomial(std::vector<std::uint32_t>{cap(c), cap(d)}), Rational(1)});
    terms.push_back({Monomial(std::vector<std::uint32_t>{0, cap(b)}), Rational(1)});
    return Polynomial::from_terms(ring, std::move(terms));
}

FamilyMemberVerdict family_member_verdict(std::uint64_t a, std::uint64_t b,
                                          std::uint64_t c, std::uint64_t d) {
    const RingPtr ring = make_ring({"x", "y"});
    Polynomial f = family_member(ring, a, b, c, d);
    FamilyMemberVerdict v{a, b, c, d,           std::move(f), FamilyStatus::ok, "",
                          false, std::nullopt, false,        0,                "",
                          std::nullopt, true};

    // Paper prediction.  Cases (1)-(8) are proven-true claims and take
    // precedence; the regions' "not locally Eulerian unless quasi-
    // homogeneous" claim applies to members whose middle monomial is
    // genuinely mixed (c, d >= 1) and inside the Newton triangle
    // (c <= a-1, d <= b-1).  Outside that range it fails: x^3 + y^2 + y^3
    // is an A_2 cusp, and x^3 + x*y^3 + y^3 = x^3 + (1+x)y^3 has
    // mu = tau = 4 -- both locally Eulerian, neither quasi-homogeneous
    // in these coordinates.
    const std::int64_t A = static_cast<std::int64_t>(a), B = static_cast<std::int64_t>(b);
    const std::int64_t C = static_cast<std::int64_t>(c), D = static_cast<std::int64_t>(d);
    if (C >= A && D >= B)
        v.prediction_case = 1;
    else if (A >= 2 && B >= 2 && C == A - 1 && D == B - 1)
        v.prediction_case = 2;
    else if (A >= 2 && B >= 2 && C == 1 && D == 1)
        v.prediction_case = 3;
    else if (A >= 3 && B >= 3 && C == 1 && 2 * D <= B + 1)
        v.prediction_case = 4;
    else if (A >= 3 && B >= 3 && D == 1 && 2 * C <= A + 1)
        v.prediction_case = 5;
    else if (A >= 3 && B >= 3 && C == A - 1 && 2 * D >= B - 1)
        v.prediction_case = 6;
    else if (A >= 3 && B >= 3 && D == B - 1 && 2 * C >= A - 1)
        v.prediction_case = 7;
    else if (A == 2 || B == 2)
        v.prediction_case = 8;
    if (v.prediction_case == 0 && A >= 3 && B >= 3) {
        if (C >= 2 && C <= A - 2 && D >= 2 && D <= B - 2)
            v.region = "I";
        else if ((C == 1 && 2 * D > B + 1 && D <= B - 1) ||
                 (D == B - 1 && C >= 1 && 2 * C < A - 1))
            v.region = "II";
        else if ((D == 1 && 2 * C > A + 1 && C <= A - 1) ||
                 (C == A - 1 && D >= 1 && 2 * D < B - 1))
            v.region = "III";
    }

    if (is_constant(v.f)) {
        v.status = FamilyStatus::degenerate;
        v.status_reason = "constant polynomial";
        return v;
    }
    const Ideal I = jacobian_ideal(v.f);
    if (krull_dimension(I) > 0) {
        v.status = FamilyStatus::degenerate;
        v.status_reason = "positive-dimensional singular locus (member is not reduced)";
        return v;
    }
    v.smooth = I.contains_one();
    v.quasi_homogeneous = quasi_homogeneous_type(v.f).has_value();
    v.locally_eulerian = v.smooth || locally_eulerian_criterion(v.f, I);
    if (v.prediction_case != 0)
        v.predicted = true;
    else if (!v.region.empty())
        v.predicted = v.quasi_homogeneous;
    v.agreement = !v.predicted || *v.predicted == *v.locally_eulerian;
    return v;
}

} // namespace aluffi
