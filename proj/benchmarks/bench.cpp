#include <benchmark/benchmark.h>

#include "stripcolor/adversary.hpp"
#include "stripcolor/curves.hpp"
#include "stripcolor/engine.hpp"
#include "stripcolor/generators.hpp"
#include "stripcolor/oracle.hpp"
#include "stripcolor/strip_coloring.hpp"

namespace sc = stripcolor;

namespace {

bool strip_intersects(const sc::StripObject& a, const sc::StripObject& b) {
    return sc::intersects(a, b);
}

void BM_TripleColoringRun(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto objects = sc::gen_quasi_convex(sc::GenOptions{n, 11, 5});
    for (auto _ : state) {
        sc::StripColorer colorer;
        auto t = sc::play<sc::StripObject>(objects, colorer, strip_intersects);
        benchmark::DoNotOptimize(t.colors.data());
    }
    state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_TripleColoringRun)->Arg(10)->Arg(20)->Arg(40);

void BM_CliqueNumber(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto objects = sc::gen_segments(sc::GenOptions{n, 3, 6});
    sc::SimpleGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sc::intersects(objects[i], objects[j])) g.add_edge(i, j);
    for (auto _ : state) {
        int omega = sc::oracle::clique_number(g);
        benchmark::DoNotOptimize(omega);
    }
}
BENCHMARK(BM_CliqueNumber)->Arg(20)->Arg(40);

void BM_Adversary(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        sc::FirstFitColorer<sc::AttachedSegment> ff(
            [](const sc::AttachedSegment& a, const sc::AttachedSegment& b) {
                return sc::intersects_attached(a, b);
            });
        auto outcome =
            sc::run_adversary(k, ff, sc::Region{sc::Rational(0), sc::Rational(1), sc::Rational(1)});
        benchmark::DoNotOptimize(outcome.family.data());
    }
}
BENCHMARK(BM_Adversary)->Arg(3)->Arg(5);

void BM_CurveInsertion(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        sc::CurveSystem sys;
        for (int i = 0; i < n; ++i) sys = sc::insert_element(sys, {}, {});
        benchmark::DoNotOptimize(sys.curves.size());
    }
}
BENCHMARK(BM_CurveInsertion)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
