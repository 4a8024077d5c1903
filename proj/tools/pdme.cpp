// pdme: exact Poisson / differential-algebra toolkit over Q.
//
// Subcommands operate on a JSON algebra document (see README). Exit codes:
//   0  checks passed / report emitted
//   1  a mathematical check failed (Jacobi violation, failed compatibility)
//   2  input or resource error

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdme/algebra_spec.hpp"
#include "pdme/dme.hpp"
#include "pdme/dvariety.hpp"
#include "pdme/hopf.hpp"
#include "pdme/parse.hpp"
#include "pdme/poisson.hpp"

using namespace pdme;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string input;
  int degree_bound = 4;
  std::size_t core_cap = 10;
  std::uint64_t step_budget = StepBudget::kDefaultLimit;
  std::string order = "grevlex";
  std::string format = "json";
  bool verbose = false;
  std::string ideal;
  std::size_t mu = 0;
  std::vector<std::string> seeds;
};

MonomialOrder order_of(const Options& o) {
  if (o.order == "lex") return MonomialOrder::lex();
  if (o.order == "grevlex") return MonomialOrder::grevlex();
  throw ValidationError("unknown order '" + o.order + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw ValidationError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// explicit family if the document has one, else the canonical harness family
std::vector<Derivation> select_family(const AlgebraSpec& spec, std::string* label) {
  if (!spec.explicit_derivations.empty()) {
    if (label) *label = "explicit";
    return spec.explicit_derivations;
  }
  return dme_derivation_family(spec, DMEConfig::Family::Auto, label);
}

void require_jacobi(const AlgebraSpec& spec) {
  if (!spec.poisson) throw ValidationError("document has no bracket");
  if (!spec.jacobi_ok()) {
    const auto& t = *spec.jacobi_failure;
    throw ValidationError("Jacobi identity fails on (" + spec.ring->name(t[0]) + ", " +
                          spec.ring->name(t[1]) + ", " + spec.ring->name(t[2]) + ")");
  }
}

ordered_json ideal_json(const Ideal& I, const MonomialOrder& ord, StepBudget* budget) {
  ordered_json gens = ordered_json::array();
  for (const auto& g : I.groebner(ord, budget).polys) gens.push_back(g.to_string());
  return gens;
}

ordered_json derivation_json(const Derivation& d) {
  ordered_json values = ordered_json::object();
  for (std::size_t i = 0; i < d.ring->arity(); ++i)
    values[d.ring->name(i)] = d.values[i].to_string();
  return values;
}

void emit(const ordered_json& j, const Options& opts,
          const std::function<void(std::ostream&)>& text_renderer) {
  if (opts.format == "text") {
    text_renderer(std::cout);
  } else {
    std::cout << j.dump(2) << "\n";
  }
}

DMEConfig config_of(const Options& opts) {
  DMEConfig c;
  c.degree_bound = opts.degree_bound;
  c.core_cap = opts.core_cap;
  c.step_budget = opts.step_budget;
  c.point_budget = 8;
  return c;
}

int cmd_check_jacobi(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  if (!spec.poisson) throw ValidationError("document has no bracket");
  ordered_json j;
  j["jacobi"] = spec.jacobi_ok();
  if (!spec.jacobi_ok()) {
    const auto& t = *spec.jacobi_failure;
    j["failing_triple"] = {spec.ring->name(t[0]), spec.ring->name(t[1]),
                           spec.ring->name(t[2])};
  }
  emit(j, opts, [&](std::ostream& os) {
    if (spec.jacobi_ok()) {
      os << "jacobi: ok\n";
    } else {
      const auto& t = *spec.jacobi_failure;
      os << "jacobi: FAIL on (" << spec.ring->name(t[0]) << ", " << spec.ring->name(t[1])
         << ", " << spec.ring->name(t[2]) << ")\n";
    }
  });
  return spec.jacobi_ok() ? 0 : 1;
}

int cmd_check_poisson_hopf(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  require_jacobi(spec);
  if (!spec.hopf) throw ValidationError("document has no hopf kinds");
  PairCheck check = is_poisson_hopf(*spec.poisson, *spec.hopf);
  ordered_json j;
  j["poisson_hopf"] = check.ok;
  if (!check.ok)
    j["failing_pair"] = {spec.ring->name(check.i), spec.ring->name(check.j)};
  emit(j, opts, [&](std::ostream& os) {
    if (check.ok)
      os << "poisson-hopf: ok\n";
    else
      os << "poisson-hopf: FAIL on (" << spec.ring->name(check.i) << ", "
         << spec.ring->name(check.j) << ")\n";
  });
  return check.ok ? 0 : 1;
}

int cmd_derivations(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  std::string label;
  std::vector<Derivation> family = select_family(spec, &label);
  ordered_json j;
  j["family"] = label;
  ordered_json ders = ordered_json::array();
  for (const auto& d : family) ders.push_back(derivation_json(d));
  j["derivations"] = ders;
  if (label == "prop_key") {
    ordered_json diag = ordered_json::array();
    for (const auto& u : span_certificate(family, *spec.poisson, *spec.hopf))
      diag.push_back(u.to_string());
    j["span_certificate"] = diag;
  }
  emit(j, opts, [&](std::ostream& os) {
    os << "family: " << label << "\n";
    for (std::size_t k = 0; k < family.size(); ++k) {
      os << "  delta_" << k + 1 << ":";
      for (std::size_t i = 0; i < spec.ring->arity(); ++i)
        os << " " << spec.ring->name(i) << " -> " << family[k].values[i].to_string() << ";";
      os << "\n";
    }
  });
  return 0;
}

int cmd_prolongation(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  if (opts.ideal.empty()) throw ValidationError("--ideal is required");
  const Ideal& I = spec.ideal(opts.ideal).ideal;
  std::size_t family_size = spec.explicit_derivations.empty()
                                ? spec.ring->arity()
                                : spec.explicit_derivations.size();
  Ideal tau = opts.mu == 0 ? full_prolongation(I, std::max<std::size_t>(1, family_size))
                           : prolongation_ideal(I, opts.mu);
  ordered_json j;
  ordered_json vars = ordered_json::array();
  for (const auto& [n, k] : tau.ring()->variables()) vars.push_back(n);
  j["ring"] = vars;
  ordered_json gens = ordered_json::array();
  for (const auto& g : tau.generators()) gens.push_back(g.to_string());
  j["generators"] = gens;
  if (opts.verbose) {
    // over Q the coefficient-derivative summand of every fiber equation
    // is identically zero; spell that out
    ordered_json notes = ordered_json::array();
    for (const auto& g : I.generators())
      notes.push_back("f_delta(" + g.to_string() + ") = 0");
    j["coefficient_derivatives"] = notes;
  }
  emit(j, opts, [&](std::ostream& os) {
    os << "prolongation of " << opts.ideal << ":\n";
    for (const auto& g : tau.generators()) os << "  " << g.to_string() << "\n";
  });
  return 0;
}

int cmd_d_closure(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  std::string label;
  std::vector<Derivation> family = select_family(spec, &label);
  StepBudget budget(opts.step_budget);
  Ideal base = opts.ideal.empty() ? Ideal::zero(spec.ring) : spec.ideal(opts.ideal).ideal;
  DVariety V = DVariety::make(spec.ring, Ideal::zero(spec.ring), family, &budget);
  std::vector<Poly> start = base.generators();
  for (const auto& s : opts.seeds) start.push_back(parse_poly(s, spec.ring));
  Ideal closure = d_closure(V, start, &budget);
  ordered_json j;
  j["family"] = label;
  j["generators"] = ideal_json(closure, order_of(opts), &budget);
  emit(j, opts, [&](std::ostream& os) {
    os << "d-closure:\n";
    for (const auto& g : closure.groebner(order_of(opts), &budget).polys)
      os << "  " << g.to_string() << "\n";
  });
  return 0;
}

int cmd_d_core(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  if (opts.ideal.empty()) throw ValidationError("--ideal is required");
  std::string label;
  std::vector<Derivation> family = select_family(spec, &label);
  StepBudget budget(opts.step_budget);
  DVariety V = DVariety::make(spec.ring, Ideal::zero(spec.ring), family, &budget);
  CoreResult res = d_core(V, spec.ideal(opts.ideal).ideal, opts.core_cap, &budget);
  ordered_json j;
  j["family"] = label;
  j["status"] = res.status == CoreResult::Status::Exact ? "exact" : "upper_bound";
  j["iterations"] = res.iterations;
  j["generators"] = ideal_json(res.ideal, MonomialOrder::grevlex(), &budget);
  if (opts.verbose) j["trace"] = res.trace;
  emit(j, opts, [&](std::ostream& os) {
    os << "d-core of " << opts.ideal << ": "
       << (res.status == CoreResult::Status::Exact ? "exact" : "upper_bound") << " after "
       << res.iterations << " iterations\n";
    if (opts.verbose)
      for (const auto& line : res.trace) os << "  " << line << "\n";
    for (const auto& g : res.ideal.groebner(MonomialOrder::grevlex(), &budget).polys)
      os << "  " << g.to_string() << "\n";
  });
  return 0;
}

int cmd_center(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  require_jacobi(spec);
  StepBudget budget(opts.step_budget);
  Ideal I = opts.ideal.empty() ? Ideal::zero(spec.ring) : spec.ideal(opts.ideal).ideal;
  std::vector<Poly> basis = poisson_center_upto(*spec.poisson, I, opts.degree_bound, &budget);
  ordered_json j;
  j["degree_bound"] = opts.degree_bound;
  ordered_json b = ordered_json::array();
  for (const auto& p : basis) b.push_back(p.to_string());
  j["basis"] = b;
  emit(j, opts, [&](std::ostream& os) {
    os << "poisson center up to degree " << opts.degree_bound << ":\n";
    for (const auto& p : basis) os << "  " << p.to_string() << "\n";
  });
  return 0;
}

int cmd_forcom(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  if (!spec.hopf) throw ValidationError("document has no hopf kinds");
  std::string label;
  std::vector<Derivation> family = select_family(spec, &label);
  StepBudget budget(opts.step_budget);

  ordered_json j;
  j["family"] = label;
  bool group = d_group_check(*spec.hopf, family);
  j["d_group"] = group;
  if (!group) {
    emit(j, opts, [&](std::ostream& os) { os << "d-group check: FAIL\n"; });
    return 1;
  }
  std::vector<Poly> components = forcom_map(*spec.hopf, family);
  ordered_json comps = ordered_json::array();
  for (const auto& c : components) comps.push_back(c.to_string());
  j["components"] = comps;
  ForcomImageKernel ik = forcom_image_kernel(*spec.hopf, family, &budget);
  j["image"] = ideal_json(ik.image, MonomialOrder::grevlex(), &budget);
  j["kernel"] = ideal_json(ik.kernel, MonomialOrder::grevlex(), &budget);
  emit(j, opts, [&](std::ostream& os) {
    os << "d-group check: ok\n";
    os << "components:";
    for (const auto& c : components) os << " " << c.to_string() << ";";
    os << "\nimage ideal:\n";
    for (const auto& g : ik.image.groebner(MonomialOrder::grevlex(), &budget).polys)
      os << "  " << g.to_string() << "\n";
    os << "kernel ideal:\n";
    for (const auto& g : ik.kernel.groebner(MonomialOrder::grevlex(), &budget).polys)
      os << "  " << g.to_string() << "\n";
  });
  return 0;
}

ordered_json run_task(const AlgebraSpec& spec, const TaskSpec& task, const Options& opts,
                      bool& math_failure) {
  ordered_json section;
  section["kind"] = task.kind;
  StepBudget budget(opts.step_budget);

  if (task.kind == "jacobi") {
    if (!spec.poisson) throw ValidationError("jacobi task needs a bracket");
    section["ok"] = spec.jacobi_ok();
    if (!spec.jacobi_ok()) {
      const auto& t = *spec.jacobi_failure;
      section["failing_triple"] = {spec.ring->name(t[0]), spec.ring->name(t[1]),
                                   spec.ring->name(t[2])};
      math_failure = true;
    }
  } else if (task.kind == "poisson_hopf") {
    require_jacobi(spec);
    if (!spec.hopf) throw ValidationError("poisson_hopf task needs hopf kinds");
    PairCheck check = is_poisson_hopf(*spec.poisson, *spec.hopf);
    section["ok"] = check.ok;
    if (!check.ok) {
      section["failing_pair"] = {spec.ring->name(check.i), spec.ring->name(check.j)};
      math_failure = true;
    }
  } else if (task.kind == "differential_hopf") {
    if (!spec.hopf) throw ValidationError("differential_hopf task needs hopf kinds");
    if (spec.explicit_derivations.empty())
      throw ValidationError("differential_hopf task needs explicit derivations");
    DerGenCheck check = is_differential_hopf(spec.explicit_derivations, *spec.hopf);
    section["ok"] = check.ok;
    if (!check.ok) {
      section["failing_derivation"] = check.mu + 1;
      section["failing_generator"] = spec.ring->name(check.generator);
      math_failure = true;
    }
  } else if (task.kind == "prop_key") {
    require_jacobi(spec);
    if (!spec.hopf) throw ValidationError("prop_key task needs hopf kinds");
    auto family = prop_key_derivations(*spec.poisson, *spec.hopf);
    ordered_json ders = ordered_json::array();
    for (const auto& d : family) ders.push_back(derivation_json(d));
    section["derivations"] = ders;
    ordered_json diag = ordered_json::array();
    for (const auto& u : span_certificate(family, *spec.poisson, *spec.hopf))
      diag.push_back(u.to_string());
    section["span_certificate"] = diag;
  } else if (task.kind == "prolongation") {
    const Ideal& I = spec.ideal(task.ideal).ideal;
    std::size_t family_size = spec.explicit_derivations.empty()
                                  ? spec.ring->arity()
                                  : spec.explicit_derivations.size();
    Ideal tau = task.mu == 0 ? full_prolongation(I, std::max<std::size_t>(1, family_size))
                             : prolongation_ideal(I, task.mu);
    ordered_json gens = ordered_json::array();
    for (const auto& g : tau.generators()) gens.push_back(g.to_string());
    section["generators"] = gens;
  } else if (task.kind == "d_closure") {
    std::string label;
    auto family = select_family(spec, &label);
    DVariety V = DVariety::make(spec.ring, Ideal::zero(spec.ring), family, &budget);
    std::vector<Poly> start;
    if (!task.ideal.empty()) start = spec.ideal(task.ideal).ideal.generators();
    for (const auto& s : task.seeds) start.push_back(parse_poly(s, spec.ring));
    section["family"] = label;
    section["generators"] =
        ideal_json(d_closure(V, start, &budget), MonomialOrder::grevlex(), &budget);
  } else if (task.kind == "d_core") {
    std::string label;
    auto family = select_family(spec, &label);
    DVariety V = DVariety::make(spec.ring, Ideal::zero(spec.ring), family, &budget);
    CoreResult res =
        d_core(V, spec.ideal(task.ideal).ideal, task.cap.value_or(opts.core_cap), &budget);
    section["family"] = label;
    section["status"] = res.status == CoreResult::Status::Exact ? "exact" : "upper_bound";
    section["iterations"] = res.iterations;
    section["generators"] = ideal_json(res.ideal, MonomialOrder::grevlex(), &budget);
    if (opts.verbose) section["trace"] = res.trace;
  } else if (task.kind == "center") {
    require_jacobi(spec);
    Ideal I = task.ideal.empty() ? Ideal::zero(spec.ring) : spec.ideal(task.ideal).ideal;
    auto basis = poisson_center_upto(*spec.poisson, I,
                                     task.degree.value_or(opts.degree_bound), &budget);
    ordered_json b = ordered_json::array();
    for (const auto& p : basis) b.push_back(p.to_string());
    section["basis"] = b;
  } else if (task.kind == "forcom") {
    if (!spec.hopf) throw ValidationError("forcom task needs hopf kinds");
    std::string label;
    auto family = select_family(spec, &label);
    bool group = d_group_check(*spec.hopf, family);
    section["family"] = label;
    section["d_group"] = group;
    if (!group) {
      math_failure = true;
    } else {
      std::vector<Poly> components = forcom_map(*spec.hopf, family);
      ordered_json comps = ordered_json::array();
      for (const auto& c : components) comps.push_back(c.to_string());
      section["components"] = comps;
      ForcomImageKernel ik = forcom_image_kernel(*spec.hopf, family, &budget);
      section["image"] = ideal_json(ik.image, MonomialOrder::grevlex(), &budget);
      section["kernel"] = ideal_json(ik.kernel, MonomialOrder::grevlex(), &budget);
    }
  }
  return section;
}

int cmd_dme_report(const Options& opts) {
  AlgebraSpec spec = parse_algebra_spec(read_file(opts.input));
  // a failing bracket is a mathematical verdict, not an input error
  if (spec.poisson && !spec.jacobi_ok()) {
    const auto& t = *spec.jacobi_failure;
    ordered_json j;
    j["jacobi"] = false;
    j["failing_triple"] = {spec.ring->name(t[0]), spec.ring->name(t[1]),
                           spec.ring->name(t[2])};
    emit(j, opts, [&](std::ostream& os) {
      os << "jacobi: FAIL on (" << spec.ring->name(t[0]) << ", " << spec.ring->name(t[1])
         << ", " << spec.ring->name(t[2]) << ")\n";
    });
    return 1;
  }

  DMEConfig config = config_of(opts);

  std::vector<std::string> targets;
  if (!opts.ideal.empty()) {
    targets.push_back(opts.ideal);
  } else {
    for (const auto& t : spec.tasks)
      if (t.kind == "dme" && !t.ideal.empty()) targets.push_back(t.ideal);
    if (targets.empty() && spec.poisson)
      for (const auto& e : spec.ideals) targets.push_back(e.name);
  }
  if (!targets.empty() && !spec.poisson)
    throw ValidationError("dme reports need a bracket");

  bool math_failure = false;
  ordered_json out;
  ordered_json tasks = ordered_json::array();
  for (const auto& t : spec.tasks) {
    if (t.kind == "dme") continue;
    tasks.push_back(run_task(spec, t, opts, math_failure));
  }
  if (!tasks.empty()) out["tasks"] = tasks;

  ordered_json reports = ordered_json::array();
  std::vector<DMEReport> all;
  for (const auto& name : targets) {
    DMEConfig c = config;
    for (const auto& t : spec.tasks) {
      if (t.kind != "dme" || t.ideal != name) continue;
      if (t.degree) c.degree_bound = *t.degree;
      if (t.cap) c.core_cap = *t.cap;
    }
    DMEReport report = dme_report(spec, name, c);
    for (const auto& check : report.consistency)
      if (!check.passed) math_failure = true;
    reports.push_back(ordered_json::parse(dme_report_json(report)));
    all.push_back(std::move(report));
  }
  out["reports"] = reports;

  if (opts.format == "text") {
    for (const auto& r : all) std::cout << dme_report_text(r) << "\n";
    if (!tasks.empty()) std::cout << "tasks:\n" << tasks.dump(2) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return math_failure ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Poisson and differential algebra toolkit over Q"};
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&](CLI::App* cmd, bool needs_ideal = false) {
    cmd->add_option("input", opts.input, "algebra document (JSON)")->required();
    cmd->add_option("--degree-bound", opts.degree_bound,
                    "degree bound for center searches");
    cmd->add_option("--core-cap", opts.core_cap, "iteration cap for d-core");
    cmd->add_option("--step-budget", opts.step_budget, "Groebner step budget");
    cmd->add_option("--order", opts.order, "monomial order: grevlex|lex");
    cmd->add_option("--format", opts.format, "output format: json|text");
    cmd->add_flag("--verbose", opts.verbose, "include traces and zero summands");
    if (needs_ideal) cmd->add_option("--ideal", opts.ideal, "named ideal from the document");
    return cmd;
  };

  auto* jac = add_common(app.add_subcommand("check-jacobi", "verify the Jacobi identity"));
  auto* ph = add_common(
      app.add_subcommand("check-poisson-hopf", "bracket/coproduct compatibility"));
  auto* der =
      add_common(app.add_subcommand("derivations", "print the harness derivation family"));
  auto* pro = add_common(app.add_subcommand("prolongation", "prolongation ideal"), true);
  pro->add_option("--mu", opts.mu, "derivation index (1-based); 0 = full prolongation");
  auto* dcl = add_common(app.add_subcommand("d-closure", "smallest stable ideal"), true);
  dcl->add_option("--seed", opts.seeds, "seed expression (repeatable)");
  auto* dco = add_common(app.add_subcommand("d-core", "largest stable ideal inside"), true);
  auto* cen = add_common(app.add_subcommand("center", "degree-bounded Poisson center"), true);
  auto* fc = add_common(app.add_subcommand("forcom", "section/zero-section quotient map"));
  auto* rep =
      add_common(app.add_subcommand("dme-report", "full Dixmier-Moeglin report"), true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (jac->parsed()) return cmd_check_jacobi(opts);
    if (ph->parsed()) return cmd_check_poisson_hopf(opts);
    if (der->parsed()) return cmd_derivations(opts);
    if (pro->parsed()) return cmd_prolongation(opts);
    if (dcl->parsed()) return cmd_d_closure(opts);
    if (dco->parsed()) return cmd_d_core(opts);
    if (cen->parsed()) return cmd_center(opts);
    if (fc->parsed()) return cmd_forcom(opts);
    if (rep->parsed()) return cmd_dme_report(opts);
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
