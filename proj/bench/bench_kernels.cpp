// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "framiz/verify.hpp"

using namespace framiz;

namespace {

const FramedSetup<ModularField>& bmw_setup() {
  static auto s = [] {
    auto f = std::get<ModularHandle>(make_field({Backend::Modular, 2, false, std::nullopt, primes_for(2, 1)[0], 1}));
    return make_setup(f, std::vector<BlockKind>(2, parse_block_kind("SO6")), 3);
  }();
  return s;
}

// A dense-ish element of the image: a product of several generators.
const SparseMatrix<ModularField>& word() {
  static auto w = [] {
    const auto& s = bmw_setup();
    auto a = add(e_op(s, 1), sigma(s, 2));
    return mul(mul(a, add(e_op(s, 2), tau(s, 1))), a, Exec::Serial);
  }();
  return w;
}

void BM_spmm(benchmark::State& st) {
  Exec e = st.range(0) ? Exec::Parallel : Exec::Serial;
  const auto& w = word();
  for (auto _ : st) benchmark::DoNotOptimize(mul(w, w, e));
  st.SetLabel(e == Exec::Parallel ? "omp" : "serial");
  st.counters["nnz"] = static_cast<double>(w.nnz());
}

void BM_closure(benchmark::State& st) {
  ClosureOptions opt;
  opt.exec = st.range(0) ? Exec::Parallel : Exec::Serial;
  auto gens = assignment_for(bmw_setup(), Preset::Framed).generators();
  for (auto _ : st) benchmark::DoNotOptimize(subalgebra_dimension(gens, opt).dimension);
  st.SetLabel(opt.exec == Exec::Parallel ? "omp" : "serial");
}

void BM_block_split(benchmark::State& st) {
  Exec e = st.range(0) ? Exec::Parallel : Exec::Serial;
  const auto& s = bmw_setup();
  ClosureOptions opt;
  opt.exec = Exec::Serial;
  auto basis = subalgebra_dimension(assignment_for(s, Preset::Framed).generators(), opt).elements;
  std::vector<SparseMatrix<ModularField>> idem;
  for (const auto& nu : enumerate_compositions(s.n, s.d)) idem.push_back(proj_nu(s, nu));
  for (auto _ : st) benchmark::DoNotOptimize(block_split(basis, idem, e).residue);
  st.SetLabel(e == Exec::Parallel ? "omp" : "serial");
}

}  // namespace

BENCHMARK(BM_spmm)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_block_split)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
