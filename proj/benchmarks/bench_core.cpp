#include <benchmark/benchmark.h>

#include "aluffi/analysis.hpp"
#include "aluffi/parse.hpp"

using namespace aluffi;

namespace {

Polynomial p(const RingPtr& ring, std::string_view text) {
    return parse_polynomial(text, ring);
}

void BM_groebner_jacobian(benchmark::State& state) {
    const auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "x^4 - x^2*y^2 + y^5");
    const auto generators = jacobian_ideal(f).generators();
    const auto order = MonomialOrder::degrevlex(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(reduced_groebner_basis(generators, order));
}
BENCHMARK(BM_groebner_jacobian);

void BM_rees_elimination(benchmark::State& state) {
    const auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "x^4 - x^2*y^2 + y^5");
    for (auto _ : state) {
        const Ideal I = jacobian_ideal(f);
        benchmark::DoNotOptimize(rees_ideal(I));
    }
}
BENCHMARK(BM_rees_elimination);

void BM_linear_type_verdict(benchmark::State& state) {
    const auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "x^4 - x^2*y^2 + y^5");
    for (auto _ : state) {
        const Ideal I = jacobian_ideal(f);
        benchmark::DoNotOptimize(is_linear_type(I));
    }
}
BENCHMARK(BM_linear_type_verdict);

void BM_cayley_chartwise(benchmark::State& state) {
    const auto R = make_ring({"x", "y", "z", "w"});
    const Polynomial f = p(R, "x*y*z + x*y*w + x*z*w + y*z*w");
    const ProjectiveHypersurface X(f);
    for (auto _ : state)
        benchmark::DoNotOptimize(gradient_linear_type(X));
}
BENCHMARK(BM_cayley_chartwise);

void BM_milnor_tjurina(benchmark::State& state) {
    const auto R = make_ring({"x", "y"});
    const Polynomial f = p(R, "x^4 - x^2*y^2 + y^5");
    const RationalPoint origin = RationalPoint::affine({Rational(0), Rational(0)});
    for (auto _ : state)
        benchmark::DoNotOptimize(milnor_tjurina(f, origin));
}
BENCHMARK(BM_milnor_tjurina);

void BM_family_member_verdict(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(family_member_verdict(5, 6, 2, 3));
}
BENCHMARK(BM_family_member_verdict);

void BM_family_scan_4_4(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(family_scan(4, 4, 1));
}
BENCHMARK(BM_family_scan_4_4);

} // namespace

BENCHMARK_MAIN();
