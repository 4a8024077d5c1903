#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "pdme/dme.hpp"

#include "util.hpp"

using namespace pdme;
using testutil::P;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/fixtures/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AlgebraSpec load(const std::string& name) { return parse_algebra_spec(fixture(name)); }

DMEConfig fast_config() {
  DMEConfig c;
  c.point_budget = 8;
  return c;
}

} // namespace

TEST_CASE("parsing the sl2 document") {
  AlgebraSpec spec = load("sl2.json");
  CHECK(spec.ring->arity() == 3);
  CHECK(spec.hopf.has_value());
  REQUIRE(spec.poisson.has_value());
  CHECK(spec.jacobi_ok());
  CHECK(spec.poisson->entry(1, 0) == P(spec.ring, "2*e"));
  CHECK(spec.ideal("zero").prime);
  CHECK(spec.tasks.size() == 5);
  CHECK(spec.tasks[4].candidates ==
        std::vector<std::string>{"casimir", "casimir_minus_one"});
}

TEST_CASE("parse-time validation") {
  CHECK_THROWS_AS(parse_algebra_spec("{"), ParseError);
  CHECK_THROWS_AS(parse_algebra_spec(R"({"variables": []})"), ValidationError);
  CHECK_THROWS_AS(parse_algebra_spec(fixture("bad_antisym.json")), ValidationError);
  CHECK_THROWS_AS(parse_algebra_spec(R"({
    "variables": [{"name": "x", "kind": "polynomial"}],
    "tasks": [{"kind": "dme", "args": {"ideal": "missing"}}]
  })"),
                  ValidationError);
  CHECK_THROWS_AS(parse_algebra_spec(R"({
    "variables": [{"name": "x", "kind": "polynomial", "hopf": "grouplike"}]
  })"),
                  ValidationError);
}

TEST_CASE("the perturbed so3 document records its jacobi failure") {
  AlgebraSpec spec = load("so3_perturbed.json");
  REQUIRE_FALSE(spec.jacobi_ok());
  CHECK(*spec.jacobi_failure == std::array<std::size_t, 3>{0, 1, 2});
  CHECK_THROWS_AS(dme_report(spec, "zero", DMEConfig{}), ValidationError);
}

TEST_CASE("rationality probes") {
  SUBCASE("the solvable algebra is rational up to the bound") {
    AlgebraSpec spec = load("solvable2.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    RationalityResult res =
        rationality_report(*spec.poisson, family, spec.ideal("zero").ideal, 4);
    CHECK(res.rational_up_to_bound);
    CHECK_FALSE(res.witness.has_value());
    CHECK(res.status() == "rational_up_to_bound(d=4)");
  }
  SUBCASE("the heisenberg center element refutes rationality") {
    AlgebraSpec spec = load("heisenberg.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    RationalityResult res =
        rationality_report(*spec.poisson, family, spec.ideal("zero").ideal, 2);
    CHECK_FALSE(res.rational_up_to_bound);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == P(spec.ring, "z"));
  }
  SUBCASE("the sl2 casimir refutes rationality") {
    AlgebraSpec spec = load("sl2.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    RationalityResult res =
        rationality_report(*spec.poisson, family, spec.ideal("zero").ideal, 2);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == P(spec.ring, "h^2 + 4*e*f"));
  }
}

TEST_CASE("primitivity probes") {
  AlgebraSpec spec = load("solvable2.json");
  auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);

  SUBCASE("a stable maximal ideal certifies itself") {
    PrimitivityResult res = primitivity_probe(family, spec.ideal("Pyx").ideal, 2, 8, 10);
    CHECK(res.state == PrimitivityResult::Status::Certified);
    REQUIRE(res.point.has_value());
    CHECK(*res.point == std::vector<Scalar>{Scalar(0), Scalar(0)});
    REQUIRE(res.core.has_value());
    CHECK(res.core->iterations == 0);
  }
  SUBCASE("the zero ideal stays inconclusive at this cap") {
    PrimitivityResult res = primitivity_probe(family, spec.ideal("zero").ideal, 1, 4, 3);
    CHECK(res.state == PrimitivityResult::Status::Inconclusive);
    CHECK(res.points_examined > 0);
    CHECK(res.status().substr(0, 12) == "inconclusive");
  }
  SUBCASE("the unit ideal is rejected") {
    CHECK_THROWS_AS(
        primitivity_probe(family, Ideal(spec.ring, {P(spec.ring, "1")}), 2, 4, 3),
        ValidationError);
  }
}

TEST_CASE("local closedness probes") {
  SUBCASE("the solvable zero ideal is witnessed by y") {
    AlgebraSpec spec = load("solvable2.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    std::vector<IdealEntry> candidates = {spec.ideal("Py"), spec.ideal("Pyx"),
                                          spec.ideal("Pyx1")};
    LocalClosednessResult res = local_closedness_probe(
        *spec.poisson, family, spec.ideal("zero").ideal, candidates, {});
    CHECK(res.witnessed);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == P(spec.ring, "y"));
    CHECK(res.candidates_used == std::vector<std::string>{"Py", "Pyx", "Pyx1"});
  }
  SUBCASE("the sl2 casimir family witnesses only relatively") {
    AlgebraSpec spec = load("sl2.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    std::vector<IdealEntry> candidates = {spec.ideal("casimir"),
                                          spec.ideal("casimir_minus_one")};
    LocalClosednessResult res = local_closedness_probe(
        *spec.poisson, family, spec.ideal("zero").ideal, candidates, {});
    CHECK(res.witnessed);
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == P(spec.ring, "(h^2 + 4*e*f)^2 - (h^2 + 4*e*f)"));
  }
  SUBCASE("no candidates, no witness") {
    AlgebraSpec spec = load("solvable2.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    LocalClosednessResult res =
        local_closedness_probe(*spec.poisson, family, spec.ideal("zero").ideal, {}, {});
    CHECK_FALSE(res.witnessed);
  }
  SUBCASE("candidates failing their preconditions are rejected") {
    AlgebraSpec spec = load("solvable2.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    IdealEntry not_poisson{"Px", Ideal(spec.ring, {P(spec.ring, "x")}), true};
    CHECK_THROWS_AS(local_closedness_probe(*spec.poisson, family,
                                           spec.ideal("zero").ideal, {not_poisson}, {}),
                    ValidationError);
    IdealEntry not_prime = spec.ideal("Py");
    not_prime.prime = false;
    CHECK_THROWS_AS(local_closedness_probe(*spec.poisson, family,
                                           spec.ideal("zero").ideal, {not_prime}, {}),
                    ValidationError);
  }
  SUBCASE("seeds expand through the d-closure") {
    AlgebraSpec spec = load("solvable2.json");
    auto family = dme_derivation_family(spec, DMEConfig::Family::Auto);
    LocalClosednessResult res =
        local_closedness_probe(*spec.poisson, family, spec.ideal("zero").ideal, {},
                               {{P(spec.ring, "y")}, {P(spec.ring, "1")}});
    CHECK(res.witnessed);
    CHECK(res.candidates_used == std::vector<std::string>{"d_closure(y)"});
    REQUIRE(res.witness.has_value());
    CHECK(*res.witness == P(spec.ring, "y"));
  }
}

TEST_CASE("full report for the solvable algebra") {
  AlgebraSpec spec = load("solvable2.json");
  DMEReport report = dme_report(spec, "zero", fast_config());
  CHECK(report.poisson_stable);
  CHECK(report.family == "prop_key"); // all-primitive hopf signature present
  CHECK(report.rationality.status() == "rational_up_to_bound(d=4)");
  CHECK(report.local_closedness.witnessed);
  CHECK(*report.local_closedness.witness == P(spec.ring, "y"));
  for (const auto& c : report.consistency) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  CHECK(dme_report_json(report) == dme_report_json(dme_report(spec, "zero", fast_config())));
  CHECK(dme_report_text(report).find("rational_up_to_bound") != std::string::npos);
}

TEST_CASE("full report for sl2 refutes rationality and never certifies") {
  AlgebraSpec spec = load("sl2.json");
  DMEReport report = dme_report(spec, "zero", fast_config());
  CHECK(report.poisson_stable);
  CHECK_FALSE(report.rationality.rational_up_to_bound);
  CHECK(*report.rationality.witness == P(spec.ring, "h^2 + 4*e*f"));
  CHECK(report.primitivity.state != PrimitivityResult::Status::Certified);
  CHECK(report.local_closedness.witnessed); // relative to the two casimir levels
  for (const auto& c : report.consistency) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
}

TEST_CASE("full report for the laurent poisson-hopf example") {
  AlgebraSpec spec = load("laurent_xy.json");
  DMEConfig config = fast_config();
  config.point_budget = 4;
  DMEReport report = dme_report(spec, "Px", config);
  CHECK(report.poisson_stable);
  CHECK(report.family == "prop_key");
  REQUIRE(report.span_certificate_diag.size() == 2);
  CHECK(report.span_certificate_diag[1] == P(spec.ring, "y^-1"));
  for (const auto& c : report.consistency) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
}

TEST_CASE("reports refuse non-poisson ideals") {
  AlgebraSpec spec = load("solvable2.json");
  AlgebraSpec with_bad = spec;
  with_bad.ideals.push_back(
      IdealEntry{"Px", Ideal(spec.ring, {P(spec.ring, "x")}), true});
  CHECK_THROWS_AS(dme_report(with_bad, "Px", DMEConfig{}), ValidationError);
}

TEST_CASE("family choice does not change the verdicts") {
  for (const char* doc : {"sl2.json", "laurent_xy.json", "solvable2.json"}) {
    CAPTURE(doc);
    AlgebraSpec spec = load(doc);
    const Ideal& I = spec.ideals.front().name == "Px" ? spec.ideal("Px").ideal
                                                      : spec.ideal("zero").ideal;
    auto ham = dme_derivation_family(spec, DMEConfig::Family::Hamiltonian);
    auto pk = dme_derivation_family(spec, DMEConfig::Family::PropKey);
    CHECK(is_d_ideal(ham, I) == is_d_ideal(pk, I));
    RationalityResult a = rationality_report(*spec.poisson, ham, I, 3);
    RationalityResult b = rationality_report(*spec.poisson, pk, I, 3);
    CHECK(a.status() == b.status());
  }
}
