// Microbenchmarks for the evaluation cores, the slice-graph game solver and
// one representative reduction. Inputs are generated once per benchmark from
// fixed seeds so runs are comparable.

#include <benchmark/benchmark.h>

#include <imc/agap.hpp>
#include <imc/fastcheck.hpp>
#include <imc/gen.hpp>
#include <imc/kripke.hpp>
#include <imc/reductions.hpp>
#include <imc/rng.hpp>
#include <imc/semantics.hpp>

using namespace imc;

namespace {

void BM_EvalInt(benchmark::State& state) {
    Rng rng(1);
    const std::vector<std::string> vars = {"p", "q", "r"};
    KripkeModel model = random_int_model(rng, LogicClass::IPC,
                                         static_cast<std::size_t>(state.range(0)),
                                         vars);
    FormulaArena arena;
    IntF f = random_int_formula(arena, rng, 60, vars);
    for (auto _ : state) {
        SatTable table = eval_int(arena, model, f);
        benchmark::DoNotOptimize(table.row(f).count());
    }
}

void BM_EvalModal(benchmark::State& state) {
    Rng rng(2);
    KripkeModel model = random_strict_order_model(
        rng, static_cast<std::size_t>(state.range(0)), {});
    FormulaArena arena;
    ModalF f = random_modal_formula(arena, rng, 60);
    for (auto _ : state) {
        SatTable table = eval_modal(arena, model, f);
        benchmark::DoNotOptimize(table.row(f).count());
    }
}

void BM_TransitiveClosure(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    Relation rel = make_relation(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && rng.chance(1, 5)) rel[i].set(j);
    for (auto _ : state) {
        Relation closed = transitive_closure(rel);
        benchmark::DoNotOptimize(closed.back().count());
    }
}

void BM_ApathSliceDP(benchmark::State& state) {
    Rng rng(4);
    AsAgapInstance inst = random_asagap(rng, static_cast<std::size_t>(state.range(0)), 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(apath(inst.graph, inst.source, inst.target));
}

void BM_ToKcImpl(benchmark::State& state) {
    Rng rng(5);
    AsAgapInstance inst = random_asagap(rng, static_cast<std::size_t>(state.range(0)), 4);
    for (auto _ : state) {
        KcImplReduction red = to_kc_impl(inst);
        benchmark::DoNotOptimize(red.instance.model.size());
    }
}

void BM_CheckFpl0(benchmark::State& state) {
    Rng rng(6);
    KripkeModel model = random_int_model(
        rng, LogicClass::FPL, static_cast<std::size_t>(state.range(0)), {});
    FormulaArena arena;
    IntF f = random_int_formula(arena, rng, 60, {});
    const std::string at = model.state_name(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(check_fpl0(arena, model, f, at));
}

} // namespace

BENCHMARK(BM_EvalInt)->Arg(8)->Arg(32);
BENCHMARK(BM_EvalModal)->Arg(8)->Arg(32);
BENCHMARK(BM_TransitiveClosure)->Arg(16)->Arg(64);
BENCHMARK(BM_ApathSliceDP)->Arg(6)->Arg(10);
BENCHMARK(BM_ToKcImpl)->Arg(4)->Arg(8);
BENCHMARK(BM_CheckFpl0)->Arg(8)->Arg(32);

BENCHMARK_MAIN();
