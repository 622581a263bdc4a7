// Serial vs OpenMP level extension on boards with large complexes.
#include <benchmark/benchmark.h>

#include "wgame/complex.hpp"

using namespace wgame;

namespace {

Board board_for(int family, int n) {
  switch (family) {
    case 0: return Board::path(n);
    case 1: return Board::cycle(n);
    default: return Board::complete(n);
  }
}

void complex_build(benchmark::State& state, Execution exec) {
  const Board board = board_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const WeightGame game(1, static_cast<int>(state.range(2)));
  std::size_t faces = 0;
  for (auto _ : state) {
    const LegalComplex complex = legal_complex(game, board, exec);
    faces = 0;
    for (std::size_t k = 0; k < complex.level_count(); ++k) faces += complex.face_count(k);
    benchmark::DoNotOptimize(faces);
  }
  state.counters["faces"] = static_cast<double>(faces);
  state.counters["faces/s"] = benchmark::Counter(static_cast<double>(faces), benchmark::Counter::kIsIterationInvariantRate);
}

void BM_Serial(benchmark::State& state) { complex_build(state, Execution::Serial); }
void BM_Parallel(benchmark::State& state) { complex_build(state, Execution::Parallel); }

void BM_DepthFirst(benchmark::State& state) {
  const Board board = board_for(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  const WeightGame game(1, static_cast<int>(state.range(2)));
  const auto pieces = basic_positions(game, board);
  const kernels::ConflictTable table(pieces, board.size());
  for (auto _ : state) {
    std::size_t faces = 0;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(max_pieces(game, board)); ++k)
      faces += kernels::enumerate_faces_dfs(table, k).size() / k;
    benchmark::DoNotOptimize(faces);
  }
}

// {family (0 path, 1 cycle, 2 complete), n, right weight}
#define WGAME_CASES ->Args({0, 12, 1})->Args({1, 16, 2})->Args({2, 10, 2})->Unit(benchmark::kMillisecond)

BENCHMARK(BM_Serial) WGAME_CASES;
BENCHMARK(BM_Parallel) WGAME_CASES;
BENCHMARK(BM_DepthFirst) WGAME_CASES;

}  // namespace

BENCHMARK_MAIN();
