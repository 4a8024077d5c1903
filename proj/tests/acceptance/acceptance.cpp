// Acceptance suite: end-to-end criteria with pinned expected values and
// runtime ceilings. Prints one line per criterion and exits nonzero if
// any fails. Usage: acceptance_tests <path-to-tests-dir>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "pdme/dme.hpp"
#include "pdme/dvariety.hpp"
#include "pdme/hopf.hpp"
#include "pdme/linalg.hpp"
#include "pdme/parse.hpp"
#include "pdme/poisson.hpp"
#include "pdme/syzygy.hpp"

#include "../oracles.hpp"
#include "../util.hpp"

using namespace pdme;
using testutil::P;
using testutil::ring_of;

namespace {

std::string g_data_dir;

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void()> body;
};

struct Failure {
  std::string message;
};

void require(bool cond, const std::string& message) {
  if (!cond) throw Failure{message};
}

std::string slurp(const std::string& rel) {
  std::ifstream in(g_data_dir + "/" + rel);
  require(in.good(), "cannot open " + rel);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PoissonStructure sl2(const RingPtr& r) {
  return PoissonStructure::from_entries(
      r, {{0, 1, P(r, "-2*e")}, {0, 2, P(r, "h")}, {1, 2, P(r, "-2*f")}});
}

struct HopfFixture {
  std::string name;
  RingPtr ring;
  PoissonStructure poisson;
  HopfSignature hopf;
  bool expected;
};

std::vector<HopfFixture> hopf_corpus() {
  std::vector<HopfFixture> out;
  auto sl2r = ring_of({"e", "h", "f"});
  out.push_back({"sl2", sl2r, sl2(sl2r),
                 HopfSignature::make(sl2r, {HopfKind::Primitive, HopfKind::Primitive,
                                            HopfKind::Primitive}),
                 true});
  auto heis = ring_of({"x", "y", "z"});
  out.push_back({"heisenberg", heis,
                 PoissonStructure::from_entries(heis, {{0, 1, P(heis, "z")}}),
                 HopfSignature::make(heis, {HopfKind::Primitive, HopfKind::Primitive,
                                            HopfKind::Primitive}),
                 true});
  auto ab = ring_of({"x", "y"});
  out.push_back({"abelian", ab, PoissonStructure::from_entries(ab, {}),
                 HopfSignature::make(ab, {HopfKind::Primitive, HopfKind::Primitive}),
                 true});
  auto solv = ring_of({"x", "y"});
  out.push_back({"solvable2", solv,
                 PoissonStructure::from_entries(solv, {{0, 1, P(solv, "y")}}),
                 HopfSignature::make(solv, {HopfKind::Primitive, HopfKind::Primitive}),
                 true});
  auto lxy = ring_of({"x"}, {"y"});
  out.push_back({"laurent_xy", lxy,
                 PoissonStructure::from_entries(lxy, {{0, 1, P(lxy, "x*y")}}),
                 HopfSignature::make(lxy, {HopfKind::Primitive, HopfKind::Grouplike}),
                 true});
  auto lx = ring_of({"x"}, {"y"});
  out.push_back({"laurent_x", lx,
                 PoissonStructure::from_entries(lx, {{0, 1, P(lx, "x")}}),
                 HopfSignature::make(lx, {HopfKind::Primitive, HopfKind::Grouplike}),
                 false});
  return out;
}

// ---- criterion bodies -----------------------------------------------------

void criterion_jacobi() {
  auto r = ring_of({"e", "h", "f"});
  LieData lie = LieData::make(3, {{0, 1, 0, Scalar(-2)},
                                  {0, 2, 1, Scalar(1)},
                                  {1, 2, 2, Scalar(-2)}});
  require(!from_lie_algebra(lie, r).check_jacobi().has_value(),
          "sl2 must satisfy the Jacobi identity");

  auto r3 = ring_of({"x", "y", "z"});
  PoissonStructure bad = PoissonStructure::from_entries(
      r3, {{0, 1, P(r3, "z + x^2")}, {1, 2, P(r3, "x")}, {2, 0, P(r3, "y")}});
  auto triple = bad.check_jacobi();
  require(triple.has_value(), "perturbed so3 must fail the Jacobi identity");
  require(*triple == std::array<std::size_t, 3>{0, 1, 2},
          "failure must name the triple (x, y, z)");
}

void criterion_casimir() {
  auto r = ring_of({"e", "h", "f"});
  PoissonStructure Ps = sl2(r);
  std::vector<Poly> basis = poisson_center_upto(Ps, Ideal::zero(r), 2);
  require(basis.size() == 2, "center basis must be 2-dimensional");
  require(basis[0] == P(r, "1"), "first basis element must be 1");

  // independent route: brute-force linear solve over all 10 monomials of
  // degree <= 2, no normal forms or standard-monomial filtering involved
  std::vector<Monomial> monos = monomials_upto(r, 2);
  require(monos.size() == 10, "there are 10 monomials of degree <= 2 in 3 variables");
  // one equation row per (generator, monomial of the bracket image)
  std::map<std::pair<std::size_t, Monomial>, std::size_t> eq_ix;
  std::vector<ScalarRow> mat;
  for (std::size_t g = 0; g < 3; ++g) {
    Poly zg = Poly::variable(r, g);
    for (std::size_t k = 0; k < monos.size(); ++k) {
      Poly br = Ps.bracket(zg, Poly::monomial(r, monos[k], Scalar(1)));
      for (const auto& [m, c] : br.terms()) {
        auto key = std::make_pair(g, m);
        auto [it, fresh] = eq_ix.emplace(key, eq_ix.size());
        if (fresh) mat.emplace_back(monos.size(), Scalar(0));
        mat[it->second][k] = c;
      }
    }
  }
  ScalarMatrix kernel = nullspace(std::move(mat), monos.size());
  require(kernel.size() == 2, "brute-force nullspace must be 2-dimensional");

  // the nonconstant library element must be a scalar multiple of h^2+4ef
  Poly casimir = P(r, "h^2 + 4*e*f");
  const Poly& found = basis[1];
  require(!found.is_constant(), "second basis element must be nonconstant");
  Scalar ratio(0);
  bool ratio_set = false;
  for (const auto& [m, c] : casimir.terms()) {
    auto it = found.terms().find(m);
    require(it != found.terms().end(), "candidate misses a casimir monomial");
    if (!ratio_set) {
      ratio = it->second / c;
      ratio_set = true;
    }
  }
  require(ratio_set && found == casimir.scaled(ratio),
          "nonconstant center element must be a scalar multiple of h^2+4*e*f");
  // and the brute-force kernel must contain it as well
  bool found_in_kernel = false;
  for (const auto& vec : kernel) {
    Poly p = Poly::zero(r);
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (!vec[k].is_zero()) p += Poly::monomial(r, monos[k], vec[k]);
    if (p.is_constant()) continue;
    for (const auto& [m, c] : casimir.terms())
      if (p.terms().count(m) == 0) goto next_vec;
    found_in_kernel = true;
  next_vec:;
  }
  require(found_in_kernel, "brute-force kernel must contain a casimir representative");
}

void criterion_poisson_hopf() {
  auto fixtures = hopf_corpus();
  for (const auto& fx : fixtures) {
    PairCheck check = is_poisson_hopf(fx.poisson, fx.hopf);
    if (fx.name == "sl2")
      require(check.ok, "the symmetric algebra of sl2 must be Poisson-Hopf");
    if (fx.name == "laurent_xy")
      require(check.ok, "the bracket {x,y} = x*y must be Poisson-Hopf");
    if (fx.name == "laurent_x") {
      require(!check.ok, "the bracket {x,y} = x must fail");
      require(check.i == 0 && check.j == 1, "failure must name the pair (x, y)");
    }
  }
}

void criterion_prop_key_equivalence() {
  for (const auto& fx : hopf_corpus()) {
    auto D = prop_key_derivations(fx.poisson, fx.hopf);
    bool ph = is_poisson_hopf(fx.poisson, fx.hopf).ok;
    bool dh = is_differential_hopf(D, fx.hopf).ok;
    require(ph == fx.expected, fx.name + ": unexpected poisson-hopf verdict");
    require(ph == dh, fx.name + ": poisson-hopf and differential-hopf must agree");
  }
}

void criterion_d_core() {
  {
    auto r = ring_of({"x"});
    DVariety V = DVariety::make(r, Ideal::zero(r), {Derivation::make(r, {P(r, "x")})});
    CoreResult res = d_core(V, Ideal(r, {P(r, "x")}), 10);
    require(res.status == CoreResult::Status::Exact && res.iterations == 0,
            "euler field: (x) must be an exact fixpoint in 0 iterations");
    require(ideal_eq(res.ideal, Ideal(r, {P(r, "x")})), "euler field: core must be (x)");
  }
  {
    auto r = ring_of({"x", "y"});
    DVariety V =
        DVariety::make(r, Ideal::zero(r), {Derivation::make(r, {P(r, "y"), P(r, "0")})});
    CoreResult res = d_core(V, Ideal(r, {P(r, "x")}), 5);
    require(res.status == CoreResult::Status::UpperBound,
            "shear field: the descending chain must hit the cap");
    require(ideal_eq(res.ideal, Ideal(r, {P(r, "x^6")})),
            "shear field: cap 5 must stop at (x^6)");
  }
  {
    auto r = ring_of({"x", "y"});
    PoissonStructure Ps = PoissonStructure::from_entries(r, {{0, 1, P(r, "y")}});
    DVariety V = DVariety::make(r, Ideal::zero(r), Ps.generator_hamiltonians());
    CoreResult res = d_core(V, Ideal(r, {P(r, "y"), P(r, "x-1")}), 10);
    require(res.status == CoreResult::Status::Exact && res.iterations == 0,
            "hamiltonian case: (y, x-1) must be an exact fixpoint");
    require(ideal_eq(res.ideal, Ideal(r, {P(r, "y"), P(r, "x-1")})),
            "hamiltonian case: core must be (y, x-1)");
  }
}

void criterion_prolongations() {
  auto r = ring_of({"x", "y"});
  auto render = [](const Ideal& I) {
    std::string out;
    for (const auto& g : I.generators()) out += g.to_string() + "\n";
    return out;
  };
  require(render(prolongation_ideal(Ideal(r, {P(r, "x^2+y^2-1")}), 1)) ==
              slurp("golden/prolongation_circle.txt"),
          "circle prolongation must match the golden file");
  require(render(prolongation_ideal(Ideal(r, {P(r, "y-x^2")}), 1)) ==
              slurp("golden/prolongation_parabola.txt"),
          "parabola prolongation must match the golden file");

  Ideal circle(r, {P(r, "x^2+y^2-1")});
  require(validate_dvariety(circle, {Derivation::make(r, {P(r, "-y"), P(r, "x")})}).ok,
          "the rotation field must be accepted on the circle");
  require(!validate_dvariety(circle, {Derivation::make(r, {P(r, "1"), P(r, "0")})}).ok,
          "the constant field must be rejected on the circle");
}

void criterion_forcom() {
  auto r = ring_of({"x"}, {"y"});
  HopfSignature H = HopfSignature::make(r, {HopfKind::Primitive, HopfKind::Grouplike});

  {
    Derivation s = Derivation::make(r, {P(r, "0"), P(r, "x*y")});
    require(d_group_check(H, {s}), "the ga x gm section must pass the d-group check");
    auto comps = forcom_map(H, {s});
    require(comps.size() == 2 && comps[0].is_zero() && comps[1] == P(r, "x"),
            "the ga x gm section components must be (0, x)");
    ForcomImageKernel ik = forcom_image_kernel(H, {s});
    const RingPtr& w = ik.target_ring;
    require(ideal_eq(ik.image, Ideal(w, {P(w, "w1")})), "the ga x gm image must be (w1)");
    require(ideal_eq(ik.kernel, Ideal(r, {P(r, "x")})), "the ga x gm kernel must be (x)");
  }
  {
    PoissonStructure Ps = PoissonStructure::from_entries(r, {{0, 1, P(r, "x*y")}});
    auto D = prop_key_derivations(Ps, H);
    auto comps = forcom_map(H, D);
    require(comps.size() == 4 && comps[0].is_zero() && comps[1] == P(r, "x") &&
                comps[2] == P(r, "-x") && comps[3].is_zero(),
            "laurent components must be ((0, x), (-x, 0))");
    ForcomImageKernel ik = forcom_image_kernel(H, D);
    const RingPtr& w = ik.target_ring;
    require(ideal_eq(ik.image, Ideal(w, {P(w, "w1"), P(w, "w4"), P(w, "w2 + w3")})),
            "laurent image must be (w1, w4, w2 + w3)");
    require(ideal_eq(ik.kernel, Ideal(r, {P(r, "x")})), "laurent kernel must be (x)");
  }
}

void criterion_dme_harness() {
  DMEConfig config;
  config.point_budget = 8;
  {
    AlgebraSpec spec = parse_algebra_spec(slurp("fixtures/solvable2.json"));
    DMEReport report = dme_report(spec, "zero", config);
    require(report.poisson_stable, "solvable2: (0) must be Poisson stable");
    require(report.rationality.status() == "rational_up_to_bound(d=4)",
            "solvable2: rationality must hold up to degree 4");
    require(report.local_closedness.witnessed &&
                *report.local_closedness.witness == P(spec.ring, "y"),
            "solvable2: local closedness must be witnessed by y");
    require(report.local_closedness.candidates_used ==
                std::vector<std::string>{"Py", "Pyx", "Pyx1"},
            "solvable2: the candidate family is (y), (y,x), (y,x-1)");
    for (const auto& c : report.consistency)
      require(c.passed, "solvable2: consistency check " + c.name + " failed");
  }
  {
    AlgebraSpec spec = parse_algebra_spec(slurp("fixtures/sl2.json"));
    DMEReport report = dme_report(spec, "zero", config);
    require(!report.rationality.rational_up_to_bound &&
                *report.rationality.witness == P(spec.ring, "h^2 + 4*e*f"),
            "sl2: rationality must be refuted via h^2 + 4*e*f");
    require(report.primitivity.state != PrimitivityResult::Status::Certified,
            "sl2: no primitivity certificate may be emitted");
    for (const auto& c : report.consistency)
      require(c.passed, "sl2: consistency check " + c.name + " failed");
  }
}

void criterion_groebner_oracle() {
  auto r = ring_of({"x", "y", "z"});
  testutil::Rng rng(20240817);
  int checked = 0;
  while (checked < 100) {
    std::vector<Poly> gens;
    int count = static_cast<int>(rng.range(1, 3));
    for (int i = 0; i < count; ++i) {
      Poly g = testutil::random_poly(rng, r, 3, 3);
      Monomial constant(3, 0);
      if (g.terms().count(constant))
        g -= Poly::constant(r, g.terms().at(constant));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I(r, gens);

    bool constructed = rng.range(0, 1) == 1;
    Poly probe;
    if (constructed) {
      probe = Poly::zero(r);
      for (const auto& g : gens) probe += testutil::random_poly(rng, r, 2, 2) * g;
    } else {
      probe = testutil::random_poly(rng, r, 3, 3);
    }
    const int bound = static_cast<int>(probe.is_zero() ? 0 : probe.degree()) + 5;
    bool by_groebner = ideal_member(probe, I);
    bool by_macaulay = testutil::macaulay_member(probe, gens, std::max(bound, 5));
    if (constructed)
      require(by_groebner && by_macaulay, "constructed member must be detected by both");
    if (by_macaulay) require(by_groebner, "oracle certificate contradicts the basis");
    if (by_groebner && !constructed)
      require(testutil::macaulay_member(probe, gens, bound + 4),
              "membership must have a bounded certificate");

    // syzygy soundness on the same generators
    SyzygyBasis syz = syzygies(gens);
    for (const auto& v : syz.generators) {
      Poly acc = Poly::zero(r);
      for (std::size_t i = 0; i < gens.size(); ++i) acc += v[i] * gens[i];
      require(acc.is_zero(), "syzygy generator is not a relation");
    }
    ++checked;
  }
}

void criterion_property_suites() {
  // Leibniz / antisymmetry / Jacobiator, 50 random cases each
  {
    auto r = ring_of({"x", "y", "z"});
    PoissonStructure so3 = PoissonStructure::from_entries(
        r, {{0, 1, P(r, "z")}, {1, 2, P(r, "x")}, {2, 0, P(r, "y")}});
    require(!so3.check_jacobi().has_value(), "so3 passes the generator Jacobi test");
    testutil::Rng rng(404);
    for (int i = 0; i < 50; ++i) {
      Poly f = testutil::random_poly(rng, r, 3, 2);
      Poly g = testutil::random_poly(rng, r, 3, 2);
      Poly h = testutil::random_poly(rng, r, 3, 2);
      require(so3.bracket(f, g) == -so3.bracket(g, f), "antisymmetry");
      require(so3.bracket(f, g * h) ==
                  so3.bracket(f, g) * h + g * so3.bracket(f, h),
              "Leibniz");
      Poly jac = so3.bracket(f, so3.bracket(g, h)) + so3.bracket(g, so3.bracket(h, f)) +
                 so3.bracket(h, so3.bracket(f, g));
      require(jac.is_zero(), "Jacobiator vanishes");
    }
  }
  // Kaplansky radical stability on the D-ideal corpus
  {
    auto r = ring_of({"x", "y"});
    PoissonStructure Ps = PoissonStructure::from_entries(r, {{0, 1, P(r, "y")}});
    auto ders = Ps.generator_hamiltonians();
    for (const auto& gens :
         {std::vector<Poly>{P(r, "y")}, std::vector<Poly>{P(r, "x"), P(r, "y")},
          std::vector<Poly>{P(r, "x^2"), P(r, "y")}}) {
      Ideal J(r, gens);
      require(validate_dvariety(J, ders).ok, "corpus ideal must be stable");
      for (const auto& g : J.generators())
        for (const auto& d : ders)
          require(radical_member(apply_derivation(d, g), J),
                  "derivative of a radical member stays a radical member");
    }
  }
  // Hopf axioms, cocommutativity, and generator-pair lifting
  {
    testutil::Rng rng(505);
    for (const auto& fx : hopf_corpus()) {
      TensorRing T = TensorRing::make(fx.ring);
      const std::size_t n = fx.ring->arity();
      std::vector<Poly> eps_id(2 * n), s_id(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        Poly z = Poly::variable(fx.ring, i);
        bool prim = fx.hopf.kind(i) == HopfKind::Primitive;
        eps_id[T.left(i)] = Poly::constant(fx.ring, Scalar(prim ? 0 : 1));
        eps_id[T.right(i)] = z;
        s_id[T.left(i)] = antipode(fx.hopf, z);
        s_id[T.right(i)] = z;
      }
      for (int trial = 0; trial < 10; ++trial) {
        Poly f = testutil::random_poly(rng, fx.ring, 3, 3, true);
        Poly delta = coproduct(fx.hopf, T, f);
        require(substitute(delta, fx.ring, eps_id) == f, "counit axiom");
        require(substitute(delta, fx.ring, s_id) ==
                    Poly::constant(fx.ring, counit(fx.hopf, f)),
                "antipode axiom");
        require(T.swap_sides(delta) == delta, "cocommutativity");
      }
      if (!fx.expected) continue;
      PoissonStructure PT = doubled_structure(fx.poisson, T);
      auto D = prop_key_derivations(fx.poisson, fx.hopf);
      for (int trial = 0; trial < 25; ++trial) {
        Poly a = testutil::random_poly(rng, fx.ring, 3, 2, true);
        Poly b = testutil::random_poly(rng, fx.ring, 3, 2, true);
        require(coproduct(fx.hopf, T, fx.poisson.bracket(a, b)) ==
                    PT.bracket(coproduct(fx.hopf, T, a), coproduct(fx.hopf, T, b)),
                "bracket/coproduct lifting to random pairs");
        for (const auto& d : D)
          require(apply_derivation(lift_derivation(T, d), coproduct(fx.hopf, T, a)) ==
                      coproduct(fx.hopf, T, apply_derivation(d, a)),
                  "derivation/coproduct lifting to random elements");
      }
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  g_data_dir = argc > 1 ? argv[1] : "tests";

  std::vector<Criterion> criteria = {
      {1, "Jacobi/Lie correspondence", 1.0, criterion_jacobi},
      {2, "sl2 Casimir via center search and brute force", 1.0, criterion_casimir},
      {3, "Poisson-Hopf checks", 3.0, criterion_poisson_hopf},
      {4, "prop-key equivalence across the corpus", 2.0, criterion_prop_key_equivalence},
      {5, "d-core behavior", 5.0, criterion_d_core},
      {6, "prolongation golden files and section validation", 1.0, criterion_prolongations},
      {7, "forcom pipeline", 2.0, criterion_forcom},
      {8, "DME harness on solvable2 and sl2", 10.0, criterion_dme_harness},
      {9, "Groebner membership oracle and syzygy soundness", 60.0, criterion_groebner_oracle},
      {10, "property suites", 60.0, criterion_property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > c.limit_seconds)
      error = "runtime " + std::to_string(elapsed) + "s exceeds " +
              std::to_string(c.limit_seconds) + "s";
    if (error.empty()) {
      std::printf("[PASS] criterion %2d: %s (%.2fs)\n", c.number, c.title.c_str(), elapsed);
    } else {
      std::printf("[FAIL] criterion %2d: %s (%.2fs) -- %s\n", c.number, c.title.c_str(),
                  elapsed, error.c_str());
      ++failures;
    }
  }
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
