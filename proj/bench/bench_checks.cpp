#include <benchmark/benchmark.h>

#include "bipermkit/biperm.hpp"
#include "bipermkit/report.hpp"
#include "bipermkit/suites.hpp"

using namespace bpk;

static void BM_bipermutative_fskel(benchmark::State &st)
{
  set_jobs(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    Report r = check_bipermutative(*instance_fskel(), DBound{3, 0, 0});
    benchmark::DoNotOptimize(r.lines.size());
  }
}
BENCHMARK(BM_bipermutative_fskel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_laplaza_sequences(benchmark::State &st)
{
  set_jobs(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    Report r = check_laplaza(*instance_mandellA(), DBound{0, 2, 2}, 3);
    benchmark::DoNotOptimize(r.lines.size());
  }
}
BENCHMARK(BM_laplaza_sequences)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_run_check(benchmark::State &st)
{
  set_jobs(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    CheckLine l = run_check("x", "y", 200000, [](long i) {
      long h = i * 2654435761L;
      return (h & 0xfff) == 7 && i < 0 ? std::string("x") : std::string();
    });
    benchmark::DoNotOptimize(l.instances);
  }
}
BENCHMARK(BM_run_check)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
