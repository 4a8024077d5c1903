#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdme/algebra_spec.hpp"
#include "pdme/dvariety.hpp"

namespace pdme {

/// Bounds and caps for the semi-decision probes. Every emitted status
/// embeds the bounds that qualify it; no absolute claim is made for a
/// semi-decision.
struct DMEConfig {
  int degree_bound = 4;
  std::size_t core_cap = 10;
  std::uint64_t step_budget = StepBudget::kDefaultLimit;
  long box_radius = 2;          // rational point search box
  std::size_t point_budget = 16; // max points run through d_core
  enum class Family { Auto, Hamiltonian, PropKey } family = Family::Auto;
};

/// Degree-bounded rationality probe. A nonconstant polynomial element of
/// the Poisson center of A/I is transcendental over Q, which refutes
/// rationality; absence of one up to the bound is evidence, not proof.
struct RationalityResult {
  bool rational_up_to_bound = true;
  int bound = 0;
  std::optional<Poly> witness; // nonconstant central element, when found
  std::string status() const;
};

struct PrimitivityResult {
  enum class Status { Certified, RefutedUpToBound, Inconclusive };
  Status state = Status::Inconclusive;
  std::optional<std::vector<Scalar>> point; // certifying rational point
  std::optional<CoreResult> core;           // certifying core, or best bound seen
  std::size_t points_examined = 0;
  long box_radius = 0;
  std::size_t cap = 0;
  std::string status() const;
};

/// Local closedness relative to a finite candidate family of Poisson
/// primes strictly above I: evidence, never proof, and the status string
/// carries the candidate fingerprint.
struct LocalClosednessResult {
  bool witnessed = false;
  std::optional<Poly> witness;
  std::vector<std::string> candidates_used;
  std::string status() const;
};

struct ConsistencyCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct DMEReport {
  std::string ideal_name;
  bool prime_asserted = false;
  bool poisson_stable = false;
  std::string family; // "prop_key" | "hamiltonian"
  std::vector<Poly> span_certificate_diag; // filled for prop_key
  RationalityResult rationality;
  PrimitivityResult primitivity;
  LocalClosednessResult local_closedness;
  std::vector<ConsistencyCheck> consistency;
  DMEConfig config;
};

/// The derivation family the harness works with: prop_key_derivations
/// when a Hopf signature is present (span certificate attached),
/// generator Hamiltonians otherwise.
std::vector<Derivation> dme_derivation_family(const AlgebraSpec& spec,
                                              DMEConfig::Family choice,
                                              std::string* label = nullptr);

RationalityResult rationality_report(const PoissonStructure& P,
                                     const std::vector<Derivation>& family, const Ideal& I,
                                     int degree_bound, StepBudget* budget = nullptr);

/// Enumerates rational points of V(I) in the box (invertible coordinates
/// nonzero), forms the maximal ideal of each, and runs d_core. Certified
/// when some core is exact and equals I. Absence of points never refutes.
PrimitivityResult primitivity_probe(const std::vector<Derivation>& family, const Ideal& I,
                                    long box_radius, std::size_t point_budget,
                                    std::size_t cap, StepBudget* budget = nullptr);

/// Candidates are named Poisson primes strictly containing I (validated)
/// plus d_closure expansions of I + seed (discarded when trivial). The
/// witness is an element of the intersection of all candidates outside I.
LocalClosednessResult local_closedness_probe(const PoissonStructure& P,
                                             const std::vector<Derivation>& family,
                                             const Ideal& I,
                                             const std::vector<IdealEntry>& candidates,
                                             const std::vector<std::vector<Poly>>& seeds,
                                             StepBudget* budget = nullptr);

/// Runs all three probes for a named ideal of the document and assembles
/// the report with its consistency checks. Deterministic: identical
/// document and config produce identical reports.
DMEReport dme_report(const AlgebraSpec& spec, const std::string& ideal_name,
                     const DMEConfig& config);

std::string dme_report_json(const DMEReport& report, int indent = 2);
std::string dme_report_text(const DMEReport& report);

} // namespace pdme
