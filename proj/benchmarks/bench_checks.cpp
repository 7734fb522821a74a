// Serial reference vs OpenMP kernels on the hom-grid fills, plus one
// end-to-end law suite. The grids are embarrassingly parallel; the point of
// the serial numbers is a baseline for the agreement tests, not a horse race.

#include <benchmark/benchmark.h>

#include <memory>

#include "qvs/monad.hpp"
#include "qvs/monadicity.hpp"
#include "qvs/parallel.hpp"
#include "qvs/presheaf.hpp"
#include "qvs/quantale.hpp"
#include "qvs/quantaloid.hpp"

using namespace qvs;

namespace {

const EnumCaps CAPS{2'000'000, 2'000'000};

std::shared_ptr<const Quantaloid> two() {
  auto Q = std::make_shared<const FiniteQuantale>(FiniteQuantale::boolean2());
  return std::make_shared<const Quantaloid>(build_dstar(Q));
}

// 257 weights on the discrete three-atom carrier: the 257 x 257 grid is the
// hot loop the kernel switch guards
QCategory grid_carrier() { return symmetrize(subset_lattice(two(), {"p", "q", "r"})); }

QCategory crisp2() {
  auto K = two();
  TypedSet ts{{"a", "b"}, {1, 1}};
  return QCategory(K, ts, {1, 0, 0, 1});
}

void BM_weight_grid(benchmark::State& state) {
  const QCategory X = grid_carrier();
  set_parallel_kernels(state.range(0) != 0);
  for (auto _ : state) {
    PresheafCat PX = presheaf_category(X, CAPS);
    benchmark::DoNotOptimize(PX.cat.hom(0, 0));
  }
  set_parallel_kernels(true);
}

void BM_dual_grid(benchmark::State& state) {
  const QCategory X = grid_carrier();
  set_parallel_kernels(state.range(0) != 0);
  for (auto _ : state) {
    CopresheafCat CX = copresheaf_category(X, CAPS);
    benchmark::DoNotOptimize(CX.cat.hom(0, 0));
  }
  set_parallel_kernels(true);
}

void BM_monad_suite(benchmark::State& state) {
  const QCategory X = crisp2();
  set_parallel_kernels(state.range(0) != 0);
  for (auto _ : state) {
    Reports rs = check_monad_laws(X, CAPS, {});
    benchmark::DoNotOptimize(all_passed(rs));
  }
  set_parallel_kernels(true);
}

} // namespace

BENCHMARK(BM_weight_grid)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dual_grid)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_monad_suite)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
