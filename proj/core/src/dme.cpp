#include "pdme/dme.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "pdme/parse.hpp"

namespace pdme {

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

} // namespace

std::string RationalityResult::status() const {
  std::string tag = rational_up_to_bound ? "rational_up_to_bound" : "nonconstant_center_element_found";
  return tag + "(d=" + std::to_string(bound) + ")";
}

std::string PrimitivityResult::status() const {
  std::string tag;
  switch (state) {
    case Status::Certified: tag = "certified"; break;
    case Status::RefutedUpToBound: tag = "refuted_up_to_bound"; break;
    case Status::Inconclusive: tag = "inconclusive"; break;
  }
  return tag + "(box=" + std::to_string(box_radius) + ",cap=" + std::to_string(cap) +
         ",points=" + std::to_string(points_examined) + ")";
}

std::string LocalClosednessResult::status() const {
  std::string tag = witnessed ? "witnessed_relative_to_candidates" : "not_witnessed";
  return tag + "([" + join(candidates_used, ",") + "])";
}

std::vector<Derivation> dme_derivation_family(const AlgebraSpec& spec,
                                              DMEConfig::Family choice, std::string* label) {
  if (!spec.poisson) throw ValidationError("document has no bracket");
  bool use_prop_key = false;
  switch (choice) {
    case DMEConfig::Family::Auto: use_prop_key = spec.hopf.has_value(); break;
    case DMEConfig::Family::PropKey:
      if (!spec.hopf) throw ValidationError("prop_key family needs a Hopf signature");
      use_prop_key = true;
      break;
    case DMEConfig::Family::Hamiltonian: use_prop_key = false; break;
  }
  if (label) *label = use_prop_key ? "prop_key" : "hamiltonian";
  if (use_prop_key) return prop_key_derivations(*spec.poisson, *spec.hopf);
  return spec.poisson->generator_hamiltonians();
}

RationalityResult rationality_report(const PoissonStructure& P,
                                     const std::vector<Derivation>& family, const Ideal& I,
                                     int degree_bound, StepBudget* budget) {
  if (!is_poisson_ideal(P, I, budget))
    throw ValidationError("rationality_report: ideal is not Poisson");
  RationalityResult result;
  result.bound = degree_bound;
  std::vector<Poly> constants = dconstants_upto(family, I, degree_bound, budget);
  for (const auto& p : constants) {
    if (p.is_constant()) continue;
    result.rational_up_to_bound = false;
    result.witness = p;
    break;
  }
  return result;
}

namespace {

// Rational points of V(I) in the box, invertible coordinates nonzero,
// ordered by L1 height then lexicographically.
std::vector<std::vector<long>> box_points(const Ideal& I, long radius) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->arity();
  std::vector<std::vector<long>> points;
  std::vector<long> current(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      points.push_back(current);
      return;
    }
    for (long v = -radius; v <= radius; ++v) {
      if (v == 0 && ring->kind(i) == VarKind::Invertible) continue;
      current[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    long ha = 0, hb = 0;
    for (auto v : a) ha += std::abs(v);
    for (auto v : b) hb += std::abs(v);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  std::vector<std::vector<long>> on_variety;
  for (const auto& p : points) {
    std::vector<Poly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      images.push_back(Poly::constant(ring, Scalar(p[i])));
    bool vanish = true;
    for (const auto& g : I.generators()) {
      if (!substitute(g, images).is_zero()) {
        vanish = false;
        break;
      }
    }
    if (vanish) on_variety.push_back(p);
  }
  return on_variety;
}

} // namespace

PrimitivityResult primitivity_probe(const std::vector<Derivation>& family, const Ideal& I,
                                    long box_radius, std::size_t point_budget,
                                    std::size_t cap, StepBudget* budget) {
  if (I.is_unit(budget))
    throw ValidationError("primitivity_probe: ideal is not proper");
  const RingPtr& ring = I.ring();

  PrimitivityResult result;
  result.box_radius = box_radius;
  result.cap = cap;

  DVariety ambient = DVariety::make(ring, Ideal::zero(ring), family, budget);

  std::optional<CoreResult> best;
  for (const auto& p : box_points(I, box_radius)) {
    if (result.points_examined >= point_budget) break;
    ++result.points_examined;
    std::vector<Poly> gens;
    gens.reserve(ring->arity());
    for (std::size_t i = 0; i < ring->arity(); ++i)
      gens.push_back(Poly::variable(ring, i) - Poly::constant(ring, Scalar(p[i])));
    Ideal maximal(ring, std::move(gens));

    CoreResult core = d_core(ambient, maximal, cap, budget);
    if (core.status == CoreResult::Status::Exact && ideal_eq(core.ideal, I, budget)) {
      result.state = PrimitivityResult::Status::Certified;
      std::vector<Scalar> coords;
      for (auto v : p) coords.emplace_back(v);
      result.point = std::move(coords);
      result.core = std::move(core);
      return result;
    }
    if (!best || (core.status == CoreResult::Status::Exact &&
                  best->status != CoreResult::Status::Exact))
      best = std::move(core);
  }
  result.state = PrimitivityResult::Status::Inconclusive;
  result.core = std::move(best);
  return result;
}

LocalClosednessResult local_closedness_probe(const PoissonStructure& P,
                                             const std::vector<Derivation>& family,
                                             const Ideal& I,
                                             const std::vector<IdealEntry>& candidates,
                                             const std::vector<std::vector<Poly>>& seeds,
                                             StepBudget* budget) {
  if (!is_poisson_ideal(P, I, budget))
    throw ValidationError("local_closedness_probe: ideal is not Poisson");

  LocalClosednessResult result;
  std::optional<Ideal> meet;

  auto fold = [&](const Ideal& C, const std::string& label) {
    result.candidates_used.push_back(label);
    meet = meet ? intersect(*meet, C, budget) : C;
  };

  for (const auto& entry : candidates) {
    if (!entry.prime)
      throw ValidationError("candidate '" + entry.name + "' is not asserted prime");
    if (!is_poisson_ideal(P, entry.ideal, budget))
      throw ValidationError("candidate '" + entry.name + "' is not a Poisson ideal");
    if (!ideal_contains(entry.ideal, I, budget) || ideal_eq(entry.ideal, I, budget))
      throw ValidationError("candidate '" + entry.name + "' does not strictly contain the ideal");
    fold(entry.ideal, entry.name);
  }

  if (!seeds.empty()) {
    DVariety ambient = DVariety::make(I.ring(), Ideal::zero(I.ring()), family, budget);
    for (const auto& seed : seeds) {
      std::vector<Poly> start = I.generators();
      std::vector<std::string> names;
      for (const auto& s : seed) {
        start.push_back(s);
        names.push_back(s.to_string());
      }
      Ideal closure = d_closure(ambient, start, budget);
      if (closure.is_unit(budget) || ideal_eq(closure, I, budget)) continue;
      fold(closure, "d_closure(" + join(names, ",") + ")");
    }
  }

  if (!meet) return result;
  for (const auto& g : meet->groebner(MonomialOrder::grevlex(), budget).polys) {
    if (!ideal_member(g, I, budget)) {
      result.witnessed = true;
      result.witness = g;
      break;
    }
  }
  return result;
}

DMEReport dme_report(const AlgebraSpec& spec, const std::string& ideal_name,
                     const DMEConfig& config) {
  if (!spec.poisson) throw ValidationError("dme_report: document has no bracket");
  if (!spec.jacobi_ok())
    throw ValidationError("dme_report: bracket fails the Jacobi identity");
  const IdealEntry& entry = spec.ideal(ideal_name);
  const PoissonStructure& P = *spec.poisson;

  StepBudget budget(config.step_budget);

  DMEReport report;
  report.ideal_name = ideal_name;
  report.prime_asserted = entry.prime;
  report.config = config;

  report.poisson_stable = is_poisson_ideal(P, entry.ideal, &budget);
  if (!report.poisson_stable)
    throw ValidationError("dme_report: ideal '" + ideal_name + "' is not Poisson");

  std::vector<Derivation> family = dme_derivation_family(spec, config.family, &report.family);
  if (report.family == "prop_key")
    report.span_certificate_diag = span_certificate(family, P, *spec.hopf);

  report.rationality =
      rationality_report(P, family, entry.ideal, config.degree_bound, &budget);
  report.primitivity = primitivity_probe(family, entry.ideal, config.box_radius,
                                         config.point_budget, config.core_cap, &budget);

  // Candidate set comes from the document's dme task for this ideal.
  std::vector<IdealEntry> candidates;
  std::vector<std::vector<Poly>> seeds;
  for (const auto& task : spec.tasks) {
    if (task.kind != "dme" || task.ideal != ideal_name) continue;
    for (const auto& name : task.candidates) candidates.push_back(spec.ideal(name));
    for (const auto& list : task.seed_lists) {
      std::vector<Poly> parsed;
      for (const auto& e : list) parsed.push_back(parse_poly(e, spec.ring));
      seeds.push_back(std::move(parsed));
    }
  }
  report.local_closedness =
      local_closedness_probe(P, family, entry.ideal, candidates, seeds, &budget);

  // Consistency checks.
  {
    bool certified = report.primitivity.state == PrimitivityResult::Status::Certified;
    bool has_witness = report.rationality.witness.has_value();
    report.consistency.push_back(ConsistencyCheck{
        "primitive_implies_rational", !(certified && has_witness),
        certified && has_witness
            ? "certified primitivity coexists with a nonconstant center element"
            : "no certified primitivity alongside a nonconstant center element"});

    bool lc = report.local_closedness.witnessed;
    report.consistency.push_back(ConsistencyCheck{
        "locally_closed_point_coherence",
        !(lc && report.primitivity.core &&
          report.primitivity.core->status == CoreResult::Status::Exact &&
          ideal_eq(report.primitivity.core->ideal, entry.ideal, &budget) &&
          !certified),
        "a point whose core stabilizes at the ideal must certify primitivity"});

    if (spec.hopf) {
      std::string other_label;
      std::vector<Derivation> other = dme_derivation_family(
          spec,
          report.family == "prop_key" ? DMEConfig::Family::Hamiltonian
                                      : DMEConfig::Family::PropKey,
          &other_label);
      RationalityResult cross =
          rationality_report(P, other, entry.ideal, config.degree_bound, &budget);
      bool stable_other = is_d_ideal(other, entry.ideal, &budget);
      bool agree = cross.status() == report.rationality.status() &&
                   stable_other == report.poisson_stable;
      report.consistency.push_back(ConsistencyCheck{
          "family_agreement", agree,
          "probes agree between the " + report.family + " and " + other_label + " families"});
    }
  }

  return report;
}

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json report_json(const DMEReport& r) {
  ordered_json j;
  j["ideal"] = r.ideal_name;
  j["prime_asserted"] = r.prime_asserted;
  j["poisson_stable"] = r.poisson_stable;
  j["derivation_family"] = r.family;
  if (!r.span_certificate_diag.empty()) {
    ordered_json diag = ordered_json::array();
    for (const auto& p : r.span_certificate_diag) diag.push_back(p.to_string());
    j["span_certificate"] = diag;
  }

  ordered_json rat;
  rat["status"] = r.rationality.status();
  rat["bound"] = r.rationality.bound;
  rat["witness"] = r.rationality.witness ? ordered_json(r.rationality.witness->to_string())
                                         : ordered_json(nullptr);
  j["rationality"] = rat;

  ordered_json prim;
  prim["status"] = r.primitivity.status();
  if (r.primitivity.point) {
    ordered_json pt = ordered_json::array();
    for (const auto& c : *r.primitivity.point) pt.push_back(c.to_string());
    prim["point"] = pt;
  } else {
    prim["point"] = nullptr;
  }
  if (r.primitivity.core) {
    ordered_json core;
    ordered_json gens = ordered_json::array();
    for (const auto& g : r.primitivity.core->ideal.generators()) gens.push_back(g.to_string());
    core["generators"] = gens;
    core["status"] =
        r.primitivity.core->status == CoreResult::Status::Exact ? "exact" : "upper_bound";
    core["iterations"] = r.primitivity.core->iterations;
    prim["core"] = core;
  } else {
    prim["core"] = nullptr;
  }
  prim["points_examined"] = r.primitivity.points_examined;
  j["primitivity"] = prim;

  ordered_json lc;
  lc["status"] = r.local_closedness.status();
  lc["witness"] = r.local_closedness.witness
                      ? ordered_json(r.local_closedness.witness->to_string())
                      : ordered_json(nullptr);
  lc["candidates_used"] = r.local_closedness.candidates_used;
  lc["note"] = "relative to the candidate family only; not a proof of local closedness";
  j["local_closedness"] = lc;

  ordered_json checks = ordered_json::array();
  for (const auto& c : r.consistency) {
    ordered_json cc;
    cc["name"] = c.name;
    cc["passed"] = c.passed;
    cc["detail"] = c.detail;
    checks.push_back(cc);
  }
  j["consistency"] = checks;

  ordered_json cfg;
  cfg["degree_bound"] = r.config.degree_bound;
  cfg["core_cap"] = r.config.core_cap;
  cfg["box_radius"] = r.config.box_radius;
  cfg["point_budget"] = r.config.point_budget;
  j["config"] = cfg;
  return j;
}

} // namespace

std::string dme_report_json(const DMEReport& report, int indent) {
  return report_json(report).dump(indent);
}

std::string dme_report_text(const DMEReport& report) {
  std::ostringstream os;
  os << "ideal " << report.ideal_name
     << (report.prime_asserted ? " (prime asserted)" : " (primality not asserted)") << "\n";
  os << "  poisson_stable: " << (report.poisson_stable ? "yes" : "no") << "\n";
  os << "  derivation family: " << report.family << "\n";
  os << "  rationality: " << report.rationality.status();
  if (report.rationality.witness)
    os << "  witness: " << report.rationality.witness->to_string();
  os << "\n";
  os << "  primitivity: " << report.primitivity.status();
  if (report.primitivity.point) {
    os << "  point: (";
    for (std::size_t i = 0; i < report.primitivity.point->size(); ++i) {
      if (i) os << ", ";
      os << (*report.primitivity.point)[i].to_string();
    }
    os << ")";
  }
  os << "\n";
  os << "  local closedness: " << report.local_closedness.status();
  if (report.local_closedness.witness)
    os << "  witness: " << report.local_closedness.witness->to_string();
  os << "\n";
  for (const auto& c : report.consistency)
    os << "  check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
  return os.str();
}

} // namespace pdme
