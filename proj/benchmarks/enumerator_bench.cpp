#include <benchmark/benchmark.h>

#include "iwb/enumerator/length_lex.hpp"
#include "iwb/qlang/program.hpp"
#include "iwb/qlang/table.hpp"

namespace {

using iwb::Natural;
namespace en = iwb::enumerator;

void BM_ShortlexUnrank(benchmark::State& state) {
  const auto alphabet = en::Alphabet::from_chars("01");
  Natural k = Natural(1) << state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(en::unrank(alphabet, {k}));
    ++k;
  }
}
BENCHMARK(BM_ShortlexUnrank)->Arg(16)->Arg(64)->Arg(256);

void BM_ShortlexCursor(benchmark::State& state) {
  en::ShortlexCursor cursor(57, 0);
  for (auto _ : state) {
    cursor.advance();
    benchmark::DoNotOptimize(cursor.digits().data());
  }
}
BENCHMARK(BM_ShortlexCursor);

void BM_GrammarUnrank(benchmark::State& state) {
  const auto& e = iwb::qlang::program_enumerator();
  Natural k = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.unrank(k));
    ++k;
  }
}
BENCHMARK(BM_GrammarUnrank)->Arg(0)->Arg(100'000)->Arg(10'000'000);

void BM_QlangIsValid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(iwb::qlang::is_valid("((x%7)=(x+3))"));
}
BENCHMARK(BM_QlangIsValid);

void BM_Diagonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(iwb::qlang::diagonal(n));
}
BENCHMARK(BM_Diagonal)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
