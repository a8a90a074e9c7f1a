#include <benchmark/benchmark.h>

#include "chainorder/no_body.hpp"

using namespace chainorder;

namespace {

void BM_ValueSetSL3Level2(benchmark::State& state) {
  SectionSpace space = level_space(TypeTag::A, 2, {1, 1}, Partition::all_chain(3), 2);
  VarOrder ord = VarOrder::from_one_based({3, 1, 2});
  for (auto _ : state) {
    auto vs = value_set(space.span, ord, ValMode::Low);
    benchmark::DoNotOptimize(vs);
  }
}
BENCHMARK(BM_ValueSetSL3Level2);

void BM_VerticesGTC2Rho(benchmark::State& state) {
  DominantWeight rho(TypeTag::C, 2, {1, 1});
  MarkedPoset poset = gt_poset(TypeTag::C, 2, rho);
  HPolytope h = mco_hrep(poset, Partition::all_order(4));
  for (auto _ : state) {
    auto v = vertices(h);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_VerticesGTC2Rho);

void BM_LatticePointsSL4Rho(benchmark::State& state) {
  DominantWeight rho(TypeTag::A, 3, {1, 1, 1});
  MarkedPoset poset = gt_poset(TypeTag::A, 3, rho);
  Partition part = Partition::from_bitmask("010101");
  for (auto _ : state) {
    auto pts = mco_lattice_points(poset, part);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_LatticePointsSL4Rho);

void BM_OmegaSp6(benchmark::State& state) {
  Partition part = Partition::all_chain(9);
  for (auto _ : state) {
    auto om = omega_product(TypeTag::C, 3, part);
    benchmark::DoNotOptimize(om);
  }
}
BENCHMARK(BM_OmegaSp6);

void BM_UnimodularEquivSp4(benchmark::State& state) {
  const VPolytope& gt = gt_c2_rho_reference();
  const VPolytope& de = delta_reference();
  for (auto _ : state) {
    auto t = unimodular_equiv(gt, de);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_UnimodularEquivSp4);

}  // namespace

BENCHMARK_MAIN();
