#include <benchmark/benchmark.h>

#include <random>

#include "lpa/matreg.hpp"
#include "lpa/obstruction.hpp"
#include "lpa/parse.hpp"
#include "lpa/span.hpp"
#include "lpa/subalg.hpp"
#include "lpa/theta.hpp"

namespace {

using namespace lpa;

const Field Q = Field::rationals();

GraphPtr rose(int n) {
  Graph::Builder b;
  b.vertex("v");
  for (int i = 1; i <= n; ++i) b.edge("y" + std::to_string(i), "v", "v");
  return b.build();
}

GraphPtr line(int n) {
  Graph::Builder b;
  for (int i = 1; i <= n; ++i) b.vertex("v" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    b.edge("e" + std::to_string(i), "v" + std::to_string(i),
           "v" + std::to_string(i + 1));
  return b.build();
}

Element random_element(const GraphPtr& g, std::mt19937_64& rng, int terms,
                       int len) {
  RawTerms raw;
  auto random_path = [&](std::uint32_t v) {
    Path p = Path::at_vertex(v);
    int l = std::uniform_int_distribution<int>(0, len)(rng);
    for (int i = 0; i < l; ++i) {
      const auto& in = g->in_edges(p.src);
      if (in.empty()) break;
      p = *concat(Path::of_edge(*g, in[std::uniform_int_distribution<
                                       std::size_t>(0, in.size() - 1)(rng)]),
                  p);
    }
    return p;
  };
  for (int t = 0; t < terms; ++t) {
    std::uint32_t v = std::uniform_int_distribution<std::uint32_t>(
        0, std::uint32_t(g->vertex_count()) - 1)(rng);
    raw.emplace_back(Monomial(*g, random_path(v), random_path(v)),
                     Scalar::from_int(Q, 1 + int(t)));
  }
  return normalize(g, Q, raw);
}

void BM_Multiply(benchmark::State& state) {
  auto g = rose(int(state.range(0)));
  std::mt19937_64 rng(7);
  Element a = random_element(g, rng, 6, 4);
  Element b = random_element(g, rng, 6, 4);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(a, b));
}
BENCHMARK(BM_Multiply)->Arg(2)->Arg(4);

void BM_NormalizeDeepRewrite(benchmark::State& state) {
  // gamma(v)-tails of increasing depth force rewrite cascades.
  auto g = rose(3);
  Path p = Path::at_vertex(0);
  for (long i = 0; i < state.range(0); ++i)
    p = *concat(p, Path::of_edge(*g, 0));
  RawTerms raw;
  raw.emplace_back(Monomial(*g, p, p), Scalar::one(Q));
  for (auto _ : state) benchmark::DoNotOptimize(normalize(g, Q, raw));
}
BENCHMARK(BM_NormalizeDeepRewrite)->Arg(2)->Arg(4)->Arg(6);

void BM_ThetaCheck(benchmark::State& state) {
  auto g = rose(int(state.range(0)));
  std::vector<std::string> f;
  for (int i = 1; i < state.range(0); ++i) f.push_back("y" + std::to_string(i));
  for (auto _ : state) {
    auto t = build_theta(g, f);
    benchmark::DoNotOptimize(check_relations(t).all_pass());
  }
}
BENCHMARK(BM_ThetaCheck)->Arg(2)->Arg(3)->Arg(4);

void BM_ImageContains(benchmark::State& state) {
  auto g = rose(2);
  auto t = build_theta(g, {"y1"});
  Element target = Element::edge(g, Q, "y1");
  for (auto _ : state) benchmark::DoNotOptimize(image_contains(t, target, 4));
}
BENCHMARK(BM_ImageContains);

void BM_Decompose(benchmark::State& state) {
  auto g = line(int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(decompose(g, Q).block_sizes());
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8);

void BM_UnitRegular(benchmark::State& state) {
  auto g = line(int(state.range(0)));
  auto d = decompose(g, Q);
  std::mt19937_64 rng(11);
  Element a = random_element(g, rng, 5, 3);
  for (auto _ : state) {
    auto cert = unit_regular_inverse(d, a);
    benchmark::DoNotOptimize(verify_certificate(d, cert));
  }
}
BENCHMARK(BM_UnitRegular)->Arg(4)->Arg(6);

void BM_ForcedCoefficients(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(forced_coefficients(1, 3, int(state.range(0))));
}
BENCHMARK(BM_ForcedCoefficients)->Arg(8)->Arg(32);

void BM_SolveInnerInverse(benchmark::State& state) {
  auto g = rose(1);  // one loop
  Path c = Path::of_edge(*g, 0);
  Element x = vertex_plus_cycle(g, Q, c);
  auto basis = default_inner_inverse_basis(g, c, int(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_inner_inverse_bounded(g, x, 2, basis));
}
BENCHMARK(BM_SolveInnerInverse)->Arg(4)->Arg(6);

void BM_ParsePrintRoundTrip(benchmark::State& state) {
  auto g = line(5);
  std::mt19937_64 rng(13);
  Element a = random_element(g, rng, 8, 4);
  std::string text = a.to_string();
  for (auto _ : state)
    benchmark::DoNotOptimize(parse_element(text, g, Q));
}
BENCHMARK(BM_ParsePrintRoundTrip);

}  // namespace

BENCHMARK_MAIN();
