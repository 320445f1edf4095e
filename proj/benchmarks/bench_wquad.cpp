// Microbenchmarks for the hot paths: the reference integrator, seminorms,
// bound evaluation, the composite rule and the closed-form means cases.
// Run with --benchmark_filter=... to select a subset.

#include <benchmark/benchmark.h>

#include <cmath>

#include "wquad/bounds.hpp"
#include "wquad/means.hpp"
#include "wquad/oracle.hpp"
#include "wquad/quadrature.hpp"
#include "wquad/verify.hpp"

using namespace wquad;

namespace {

void BM_ReferenceIntegralSmooth(benchmark::State& state) {
    const RealFn g = [](double t) { return std::exp(-t) * std::sin(3.0 * t); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference_integral(g, 0.0, 2.0).value);
    }
}
BENCHMARK(BM_ReferenceIntegralSmooth);

void BM_ReferenceIntegralNearSingular(benchmark::State& state) {
    // steep but finite at the endpoints; forces deep refinement
    const RealFn g = [](double t) { return 1.0 / std::sqrt(t); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference_integral(g, 1e-6, 1.0).value);
    }
}
BENCHMARK(BM_ReferenceIntegralNearSingular);

void BM_SeminormL1(benchmark::State& state) {
    const TestFunction f = function("sqrt_ln");
    const Weight& w = weight("inv_sqrt");
    const Interval iv = make_interval(1.0, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_seminorm(f, w, iv, 2, SeminormP::One));
    }
}
BENCHMARK(BM_SeminormL1);

void BM_SeminormSup(benchmark::State& state) {
    const TestFunction f = function("poly6");
    const Weight& w = weight("unit");
    const Interval iv = make_interval(-2.0, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(weighted_seminorm(f, w, iv, 1, SeminormP::Infinity));
    }
}
BENCHMARK(BM_SeminormSup);

void BM_EvaluateBoundWeighted(benchmark::State& state) {
    const TestFunction f = function("inv_sqrt_f");
    const Weight& w = weight("inv_sqrt");
    const Interval iv = make_interval(1.0, 2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            evaluate_bound(InequalityId::Weighted_2_1, f, w, iv, 1.5));
    }
}
BENCHMARK(BM_EvaluateBoundWeighted);

void BM_CompositeEstimate(benchmark::State& state) {
    const TestFunction f = function("exp");
    const Weight& w = weight("unit");
    const Partition part =
        Partition::uniform(make_interval(0.0, 1.0), static_cast<int>(state.range(0)));
    const Xi xi = Xi::midpoints(part);
    for (auto _ : state) {
        benchmark::DoNotOptimize(composite_estimate(f, w, part, xi));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CompositeEstimate)->Arg(8)->Arg(64)->Arg(256)->Complexity();

void BM_AdaptiveIntegrate(benchmark::State& state) {
    const TestFunction f = function("sqrt_ln");
    const Weight& w = weight("inv_sqrt");
    const Interval iv = make_interval(1.0, 4.0);
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adaptive_integrate(f, w, iv, tol).estimate);
    }
}
BENCHMARK(BM_AdaptiveIntegrate)->Arg(4)->Arg(6)->Arg(8);

void BM_MeansCaseClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            means_case(MeansCaseId::C3_6, 1.0, 2.0, std::nullopt, 2.0));
    }
}
BENCHMARK(BM_MeansCaseClosedForm);

void BM_IdentityResidual(benchmark::State& state) {
    const TestFunction f = function("exp");
    const Weight& w = weight("inv_sqrt");
    const Interval iv = make_interval(0.5, 3.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(identity_residual(f, w, iv, 1.25));
    }
}
BENCHMARK(BM_IdentityResidual);

void BM_SuiteSample(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_suite(SuiteKind::UnweightedDefault, 5, 42).violations());
    }
}
BENCHMARK(BM_SuiteSample);

}  // namespace

BENCHMARK_MAIN();
