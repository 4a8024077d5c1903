#include <benchmark/benchmark.h>

#include "pdme/dvariety.hpp"
#include "pdme/hopf.hpp"
#include "pdme/parse.hpp"
#include "pdme/poisson.hpp"

using namespace pdme;

namespace {

RingPtr sl2_ring() {
  return RingSpec::make({{"e", VarKind::Polynomial},
                         {"h", VarKind::Polynomial},
                         {"f", VarKind::Polynomial}});
}

PoissonStructure sl2(const RingPtr& r) {
  return PoissonStructure::from_entries(r, {{0, 1, parse_poly("-2*e", r)},
                                            {0, 2, parse_poly("h", r)},
                                            {1, 2, parse_poly("-2*f", r)}});
}

void BM_BracketDeg4(benchmark::State& state) {
  auto r = sl2_ring();
  PoissonStructure P = sl2(r);
  Poly f = parse_poly("(e + h + f)^4", r);
  Poly g = parse_poly("(e - f)^4 + h^2", r);
  for (auto _ : state) benchmark::DoNotOptimize(P.bracket(f, g).term_count());
}
BENCHMARK(BM_BracketDeg4);

void BM_JacobiCheck(benchmark::State& state) {
  auto r = sl2_ring();
  PoissonStructure P = sl2(r);
  for (auto _ : state) benchmark::DoNotOptimize(P.check_jacobi().has_value());
}
BENCHMARK(BM_JacobiCheck);

void BM_CenterDegree2(benchmark::State& state) {
  auto r = sl2_ring();
  PoissonStructure P = sl2(r);
  for (auto _ : state) {
    Ideal zero = Ideal::zero(r);
    benchmark::DoNotOptimize(poisson_center_upto(P, zero, 2).size());
  }
}
BENCHMARK(BM_CenterDegree2);

void BM_PoissonHopfLaurent(benchmark::State& state) {
  auto r = RingSpec::make({{"x", VarKind::Polynomial}, {"y", VarKind::Invertible}});
  PoissonStructure P = PoissonStructure::from_entries(r, {{0, 1, parse_poly("x*y", r)}});
  HopfSignature H = HopfSignature::make(r, {HopfKind::Primitive, HopfKind::Grouplike});
  for (auto _ : state) benchmark::DoNotOptimize(is_poisson_hopf(P, H).ok);
}
BENCHMARK(BM_PoissonHopfLaurent);

void BM_DCoreChainCap5(benchmark::State& state) {
  auto r = RingSpec::make({{"x", VarKind::Polynomial}, {"y", VarKind::Polynomial}});
  std::vector<Derivation> ders = {
      Derivation::make(r, {parse_poly("y", r), parse_poly("0", r)})};
  for (auto _ : state) {
    DVariety V = DVariety::make(r, Ideal::zero(r), ders);
    CoreResult res = d_core(V, Ideal(r, {parse_poly("x", r)}), 5);
    benchmark::DoNotOptimize(res.iterations);
  }
}
BENCHMARK(BM_DCoreChainCap5);

} // namespace

BENCHMARK_MAIN();
