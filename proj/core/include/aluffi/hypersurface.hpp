#pragma once

#include "aluffi/ideal.hpp"
#include "aluffi/point.hpp"
#include "aluffi/polynomial.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace aluffi {

// X = V(f) in affine space; f nonconstant.  Reducedness and isolatedness
// are certified by check_reduced / has_isolated_singularities, not by the
// constructor.
class AffineHypersurface {
public:
    explicit AffineHypersurface(Polynomial f);

    const Polynomial& poly() const noexcept { return f_; }
    const RingPtr& ring() const noexcept { return f_.ring(); }

private:
    Polynomial f_;
};

// X = V(f) in projective space; f homogeneous of degree >= 2 in a ring
// with at least two variables.
class ProjectiveHypersurface {
public:
    explicit ProjectiveHypersurface(Polynomial f);

    const Polynomial& poly() const noexcept { return f_; }
    const RingPtr& ring() const noexcept { return f_.ring(); }
    std::uint64_t degree() const { return f_.total_degree(); }

private:
    Polynomial f_;
};

// f is quasi-homogeneous of degree `degree` for the weights: every
// exponent vector a in supp(f) satisfies <weights, a> = degree.  The
// weights are positive integers with gcd 1.
struct QuasiHomogeneousType {
    Integer degree;
    std::vector<Integer> weights;
};

enum class SingularityLabel { smooth, a_k, non_double_point };

// Everything the analysis reports about one singular point.  The tangent
// evidence fields are filled for plane double points with a repeated
// tangent; tangent_contact is absent when the tangent line is a component
// of the curve (infinite contact).
struct SingularityReport {
    RationalPoint point;
    std::uint64_t multiplicity = 0;
    std::uint64_t milnor = 0;
    std::uint64_t tjurina = 0;
    bool locally_eulerian = false;
    SingularityLabel label = SingularityLabel::smooth;
    std::uint64_t a_index = 0;
    std::optional<Rational> quadratic_discriminant;
    std::optional<Polynomial> tangent_line;
    std::optional<std::uint64_t> tangent_contact;

    std::string label_string() const;
};

struct MilnorTjurina {
    std::uint64_t milnor = 0;
    std::uint64_t tjurina = 0;
};

// Result of the rational singular point search.  `complete` is true iff
// the local multiplicities of the found points account for the whole
// singular scheme, i.e. every singular point is rational.
struct RationalPointSearch {
    std::vector<RationalPoint> points;
    bool complete = false;
};

// One affine chart of a projective verdict: chart = index of the
// variable set to 1, equation = the dehomogenized polynomial.
struct ChartVerdict {
    std::size_t chart = 0;
    std::string variable;
    Polynomial equation;
    bool locally_eulerian = true;
};

struct GradientLinearTypeVerdict {
    bool verdict = true;
    std::vector<ChartVerdict> charts;
};

enum class FamilyStatus { ok, degenerate };

// Verdict record for one member f = x^a + x^c y^d + y^b.
struct FamilyMemberVerdict {
    std::uint64_t a = 0, b = 0, c = 0, d = 0;
    Polynomial f;
    FamilyStatus status = FamilyStatus::ok;
    std::string status_reason;
    bool smooth = false;
    std::optional<bool> locally_eulerian;  // absent when degenerate
    bool quasi_homogeneous = false;
    int prediction_case = 0;          // first of cases (1)-(8) that applies, 0 if none
    std::string region;          // "I", "II", "III", or empty
    std::optional<bool> predicted;
    bool agreement = true;
};

// J(f) = (df/dx_1, ..., df/dx_n); f must be nonconstant.
Ideal gradient_ideal(const Polynomial& f);

// I(f) = (f, df/dx_1, ..., df/dx_n).  The generator order is fixed so
// that f is generator 0 (it becomes T0 in the blowup presentations).
Ideal jacobian_ideal(const Polynomial& f);

// f squarefree, via the char-0 criterion codim I(f) >= 2.
bool check_reduced(const AffineHypersurface& X);
bool check_reduced(const ProjectiveHypersurface& X);

// Affine: dim V(I(f)) <= 0.  Projective: dim V(J(f)) <= 1 (the cone over
// finitely many points, or irrelevant-supported).  Requires X reduced.
bool has_isolated_singularities(const AffineHypersurface& X);
bool has_isolated_singularities(const ProjectiveHypersurface& X);

// All rational points of the singular locus, found by coordinate
// eliminants and rational-root search, verified by substitution.
// Requires reduced + isolated singularities.
RationalPointSearch rational_singular_points(const AffineHypersurface& X);
RationalPointSearch rational_singular_points(const ProjectiveHypersurface& X);

// Local Milnor and Tjurina numbers at a rational singular point p; the
// singularity at p must be isolated.  Always milnor >= tjurina >= 1.
MilnorTjurina milnor_tjurina(const Polynomial& f, const RationalPoint& p);

// Global, point-free:  true iff 1 in I(f) + (J(f) : f).  Covers
// non-rational singular points.  Requires reduced + isolated.
bool is_locally_eulerian(const AffineHypersurface& X);
// At one rational point p of X: true iff (J(f) : f) is not contained in
// the maximal ideal of p.
bool is_locally_eulerian(const AffineHypersurface& X, const RationalPoint& p);

// Exact linear feasibility <weights, a> = degree over supp(f) with
// positive weights, in the given coordinates; no change of coordinates
// is attempted.
std::optional<QuasiHomogeneousType> quasi_homogeneous_type(const Polynomial& f);

// Full report at a rational singular point of an affine hypersurface in
// any number of variables.  Double points are labelled A_k with k = the
// Milnor number; higher multiplicity is labelled non-double-point.
SingularityReport singular_point_report(const Polynomial& f, const RationalPoint& p);

// The two-variable classifier, with quadratic-discriminant and
// tangent-contact evidence.  Errors on a smooth point.
SingularityReport classify_plane_singularity(const Polynomial& f, const RationalPoint& p);

// mult_p(V(f), V(line)) = dim of the local ring of (f, line) at p.
// Requires a two-variable ring, deg(line) = 1, line(p) = 0 and line not
// a component of f.
std::uint64_t intersection_multiplicity_with_line(const Polynomial& f,
                                                  const RationalPoint& p,
                                                  const Polynomial& line);

// Chart-wise gradient linear type: true iff the dehomogenization in
// every chart is locally Eulerian.  Requires reduced + isolated.
GradientLinearTypeVerdict gradient_linear_type(const ProjectiveHypersurface& X);

// The member x^a + x^c y^d + y^b of the plane-curve family (duplicate
// monomials merge).
Polynomial family_member(const RingPtr& ring, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c, std::uint64_t d);

// Actual locally-Eulerian verdict vs. the case/region prediction for the
// family member.  Cases (1)-(8) predict true; inside regions I-III with
// a,b >= 3 the verdict is predicted to match quasi-homogeneity; cases
// take precedence where both apply.
FamilyMemberVerdict family_member_verdict(std::uint64_t a, std::uint64_t b,
                                          std::uint64_t c, std::uint64_t d);

} // namespace aluffi
