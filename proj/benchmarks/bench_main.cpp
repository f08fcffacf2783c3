#include <benchmark/benchmark.h>

#include "fqrigid/belyi.hpp"
#include "fqrigid/drinfeldian.hpp"
#include "fqrigid/modular.hpp"
#include "fqrigid/text_format.hpp"

using namespace fqrigid;

static void BM_FieldMul(benchmark::State& state) {
  Field f = Field::make_q(static_cast<std::uint64_t>(state.range(0)));
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem a = 1; a < f.q(); ++a) acc = f.mul(f.add(acc, a), a);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (f.q() - 1));
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(49)->Arg(256)->Arg(3125);

static void BM_Irreducibles(benchmark::State& state) {
  Field f = Field::make_q(3);
  for (auto _ : state) benchmark::DoNotOptimize(poly_irreducibles(f, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Irreducibles)->Arg(4)->Arg(6)->Arg(8);

static void BM_CountPoints(benchmark::State& state) {
  auto c = parse_curve("q=3 kind=hyperelliptic poly=x^5+2*x+1");
  for (auto _ : state) benchmark::DoNotOptimize(count_points(c, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_CountPoints)->DenseRange(1, 6);

static void BM_Zeta(benchmark::State& state) {
  auto c = parse_curve("q=4 kind=smooth-plane poly=x^3*y+y^3*z+z^3*x");
  for (auto _ : state) benchmark::DoNotOptimize(zeta_numerator(c));
}
BENCHMARK(BM_Zeta);

static void BM_RigidSearch(benchmark::State& state) {
  SearchOptions opts{static_cast<unsigned>(state.range(1)), {}};
  for (auto _ : state) benchmark::DoNotOptimize(search_rigid_domains(static_cast<std::uint64_t>(state.range(0)), 2, opts));
}
BENCHMARK(BM_RigidSearch)->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_NormalCore(benchmark::State& state) {
  Field f = Field::make_q(3);
  Poly mod = parse_poly(f, "T^2", 'T');
  auto G = AmbientGroup::make(mod);
  Subgroup h = generate(*G, {G->unipotent(1)});
  for (auto _ : state) benchmark::DoNotOptimize(normal_core(*G, h));
}
BENCHMARK(BM_NormalCore);

static void BM_CuspCount(benchmark::State& state) {
  auto fr = SubgroupFrame::gamma_T(Field::make_q(static_cast<std::uint64_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(cusp_count(fr));
}
BENCHMARK(BM_CuspCount)->Arg(4)->Arg(9);

static void BM_CollapsePipeline(benchmark::State& state) {
  auto m = parse_map("q=5 num=x^3-x");
  for (auto _ : state) benchmark::DoNotOptimize(collapse_pipeline(m, {ProjPoint::at(0), ProjPoint::inf()}));
}
BENCHMARK(BM_CollapsePipeline);

BENCHMARK_MAIN();
