#include <benchmark/benchmark.h>

#include "pdme/groebner.hpp"
#include "pdme/parse.hpp"

using namespace pdme;

namespace {

RingPtr ring3() {
  return RingSpec::make({{"x", VarKind::Polynomial},
                         {"y", VarKind::Polynomial},
                         {"z", VarKind::Polynomial}});
}

std::vector<Poly> katsura3(const RingPtr& r) {
  return {parse_poly("x + 2*y + 2*z - 1", r),
          parse_poly("x^2 + 2*y^2 + 2*z^2 - x", r),
          parse_poly("2*x*y + 2*y*z - y", r)};
}

std::vector<Poly> cyclic3(const RingPtr& r) {
  return {parse_poly("x + y + z", r), parse_poly("x*y + y*z + z*x", r),
          parse_poly("x*y*z - 1", r)};
}

void BM_GroebnerKatsura3(benchmark::State& state) {
  auto r = ring3();
  auto gens = katsura3(r);
  for (auto _ : state) {
    Ideal I(r, gens); // fresh cache each round
    benchmark::DoNotOptimize(I.groebner().polys.size());
  }
}
BENCHMARK(BM_GroebnerKatsura3);

void BM_GroebnerCyclic3(benchmark::State& state) {
  auto r = ring3();
  auto gens = cyclic3(r);
  for (auto _ : state) {
    Ideal I(r, gens);
    benchmark::DoNotOptimize(I.groebner().polys.size());
  }
}
BENCHMARK(BM_GroebnerCyclic3);

void BM_NormalForm(benchmark::State& state) {
  auto r = ring3();
  Ideal I(r, katsura3(r));
  I.groebner();
  Poly f = parse_poly("(x + y + z)^6 - x*y*z", r);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(f, I).term_count());
}
BENCHMARK(BM_NormalForm);

void BM_Saturate(benchmark::State& state) {
  auto r = ring3();
  std::vector<Poly> gens = {parse_poly("x^2*y - z^2", r), parse_poly("x*z - y", r)};
  Poly f = parse_poly("x", r);
  for (auto _ : state) {
    Ideal I(r, gens);
    benchmark::DoNotOptimize(saturate(I, f).generators().size());
  }
}
BENCHMARK(BM_Saturate);

} // namespace

BENCHMARK_MAIN();
