#include <benchmark/benchmark.h>

#include "kauction/config.hpp"

namespace {

using namespace kauction;

const GroupParams& params_for(int bits) {
  static const GroupParams p64 = generate_group_params(64, "bench-64");
  static const GroupParams p256 = generate_group_params(256, "bench-256");
  return bits == 64 ? p64 : p256;
}

void BM_Commit(benchmark::State& state) {
  const GroupParams& params = params_for(static_cast<int>(state.range(0)));
  Rng rng("commit");
  Scalar x = params.scalar(rng.uniform_below(params.q));
  for (auto _ : state) benchmark::DoNotOptimize(commit(params, params.g_b, x));
}
BENCHMARK(BM_Commit)->Arg(64)->Arg(256);

void BM_GroupGeneration(benchmark::State& state) {
  unsigned bits = static_cast<unsigned>(state.range(0));
  int i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(generate_group_params(bits, "gen-" + std::to_string(i++)));
}
BENCHMARK(BM_GroupGeneration)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_ObliviousTransfer(benchmark::State& state) {
  const GroupParams& params = params_for(256);
  std::size_t k = static_cast<std::size_t>(state.range(0));
  std::vector<Bytes> messages(k, Bytes(params.scalar_bytes(), 0x5a));
  Rng rng("ot");
  for (auto _ : state) {
    auto [req, st] = ot_request(k, k, params, rng);
    OtResponse resp = ot_respond(messages, req, params, rng);
    benchmark::DoNotOptimize(ot_recover(resp, st, params));
  }
}
BENCHMARK(BM_ObliviousTransfer)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_KnapsackSolve(benchmark::State& state) {
  const GroupParams& params = params_for(256);
  std::size_t k = static_cast<std::size_t>(state.range(0));
  Rng rng("knapsack");
  CodeBook book = generate_codes(k, params.q, rng);
  FlagVector flags(k);
  for (std::size_t i = 0; i < k; i += 2) flags.set(i, true);
  Scalar sigma = encode(book, flags);
  for (auto _ : state) benchmark::DoNotOptimize(solve(book, sigma));
}
BENCHMARK(BM_KnapsackSolve)->Arg(12)->Arg(64);

void BM_Auction(benchmark::State& state) {
  Mode mode = state.range(0) == 0 ? Mode::kHonest : Mode::kMalicious;
  std::size_t n = static_cast<std::size_t>(state.range(1));
  std::vector<Money> prices;
  for (Money p = 10; p <= 120; p += 10) prices.push_back(p);
  AuctionConfig config(params_for(256), PriceTable(prices), n);
  config.mode = mode;
  BidPlan plan;
  for (std::size_t j = 0; j < n; ++j) plan.choices.push_back(j + 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_auction(config, plan));
}
BENCHMARK(BM_Auction)->Args({0, 4})->Args({1, 4})->Args({1, 8})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
