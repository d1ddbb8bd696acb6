// homcalc: command-line front end for the hom-associative (co)homology
// library. Subcommands: validate, cohomology, homology, verify, bv.
//
// Every command prints a human-readable table and emits a machine-readable
// JSON report (to --json PATH, or to stdout after the table). Reports are
// byte-identical across runs for identical inputs, configuration and seed.
//
// Exit codes: 0 success (including negative findings such as "no symmetric
// structure"), 1 check failure, 2 usage or parse error.

#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homcalc/errors.hpp"
#include "homcalc/homology.hpp"
#include "homcalc/io.hpp"
#include "homcalc/verifier.hpp"

namespace {

using homcalc::Rational;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string spec_arg;
  std::string fixtures_dir;
  std::string json_path;
  int max_degree = 3;
  int trials = 100;
  unsigned long seed = 0;
  std::vector<std::string> suites;
};

void add_common(CLI::App* cmd, CommonOpts* o, bool with_verify_opts) {
  cmd->add_option("spec", o->spec_arg, "Algebra spec (path or fixture name)")->required();
  cmd->add_option("--fixtures-dir", o->fixtures_dir,
                  "Directory used to resolve bare fixture names");
  cmd->add_option("--json", o->json_path, "Write the JSON report to this file");
  cmd->add_option("--max-degree", o->max_degree, "Cochain degree cap (chains go one higher)")
      ->check(CLI::Range(1, 6));
  if (with_verify_opts) {
    cmd->add_option("--trials", o->trials, "Randomized trials per identity")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o->seed, "Random seed");
  }
  if (with_verify_opts) {
    cmd->add_option("--suite", o->suites, "Suites to run (default: all)")
        ->check(CLI::IsMember(homcalc::suite_names()));
  }
}

std::string resolve_spec_path(const CommonOpts& o) {
  namespace fs = std::filesystem;
  if (fs::exists(o.spec_arg)) return o.spec_arg;
  if (!o.fixtures_dir.empty()) {
    fs::path base = fs::path(o.fixtures_dir) / o.spec_arg;
    if (fs::exists(base)) return base.string();
    fs::path with_ext = base;
    with_ext += ".json";
    if (fs::exists(with_ext)) return with_ext.string();
  }
  throw homcalc::SpecError("spec not found: " + o.spec_arg);
}

ordered_json matrix_json(const homcalc::Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(homcalc::to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json vector_json(const homcalc::Vector& v) {
  ordered_json out = ordered_json::array();
  for (const auto& e : v.entries) out.push_back(homcalc::to_string(e));
  return out;
}

std::vector<int> unflatten(std::size_t flat, int dim, int length) {
  std::vector<int> idx(length);
  for (int t = length - 1; t >= 0; --t) {
    idx[t] = static_cast<int>(flat % dim);
    flat /= dim;
  }
  return idx;
}

// Sparse [[inputs...], out, "value"] rows of a cochain's value table.
ordered_json cochain_json(const homcalc::Cochain& f) {
  ordered_json rows = ordered_json::array();
  for (std::size_t t = 0; t < f.input_tuples(); ++t)
    for (int k = 0; k < f.dim; ++k) {
      const Rational& v = f.entry(t, k);
      if (v == 0) continue;
      rows.push_back(ordered_json::array(
          {unflatten(t, f.dim, f.degree), k, homcalc::to_string(v)}));
    }
  return rows;
}

// Sparse [[i0,...,in], "value"] rows of a chain tensor.
ordered_json chain_json(const homcalc::Chain& x) {
  ordered_json rows = ordered_json::array();
  for (std::size_t t = 0; t < x.c.size(); ++t) {
    if (x.c[t] == 0) continue;
    rows.push_back(
        ordered_json::array({unflatten(t, x.dim, x.degree + 1), homcalc::to_string(x.c[t])}));
  }
  return rows;
}

void emit_report(const ordered_json& report, const std::string& json_path) {
  const std::string text = report.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << "\n" << text;
    return;
  }
  std::ofstream out(json_path);
  if (!out) throw std::runtime_error("cannot write report: " + json_path);
  out << text;
  std::cout << "report written to " << json_path << "\n";
}

ordered_json report_header(const std::string& command, const std::string& path,
                           const homcalc::AlgebraSpec& spec, const CommonOpts& o,
                           bool with_verify_opts) {
  ordered_json j;
  j["command"] = command;
  j["spec"] = {{"path", path}, {"name", spec.name}, {"dim", spec.dim}};
  j["config"] = {{"max_degree", o.max_degree}};
  if (with_verify_opts) {
    j["config"]["trials"] = o.trials;
    j["config"]["seed"] = o.seed;
  }
  return j;
}

ordered_json validation_json(const homcalc::ValidationReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"required", c.required},
                      {"witness", c.witness}});
  return checks;
}

void print_validation(const homcalc::ValidationReport& rep) {
  for (const auto& c : rep.checks) {
    std::cout << "  " << std::left << std::setw(22) << c.name
              << (c.pass ? "pass" : "FAIL") << (c.required ? "" : "  (informational)");
    if (!c.witness.empty()) std::cout << "  witness " << c.witness;
    std::cout << "\n";
  }
}

int cmd_validate(const CommonOpts& o) {
  const std::string path = resolve_spec_path(o);
  const homcalc::AlgebraSpec spec = homcalc::load_algebra_spec(path);
  const homcalc::HomAlgebra alg = homcalc::to_algebra(spec);
  const homcalc::ValidationReport rep = homcalc::validate(alg);

  std::cout << "validate " << spec.name << " (dim " << spec.dim << ")\n";
  print_validation(rep);
  const bool ok = rep.all_required_pass();
  std::cout << (ok ? "valid hom-associative algebra" : "validation FAILED") << "\n";

  ordered_json report = report_header("validate", path, spec, o, false);
  report.erase("config");
  report["checks"] = validation_json(rep);
  report["valid"] = ok;
  report["exit_code"] = ok ? kExitOk : kExitCheckFailed;
  emit_report(report, o.json_path);
  return ok ? kExitOk : kExitCheckFailed;
}

// Refuses to build complexes on an invalid algebra; returns nullopt and sets
// the exit code instead.
std::optional<homcalc::HomAlgebra> checked_algebra(const homcalc::AlgebraSpec& spec,
                                                   ordered_json& report, int& exit_code) {
  homcalc::HomAlgebra alg = homcalc::to_algebra(spec);
  homcalc::ValidationReport rep = homcalc::validate(alg);
  report["checks"] = validation_json(rep);
  if (!rep.all_required_pass()) {
    std::cout << "algebra fails validation:\n";
    print_validation(rep);
    exit_code = kExitCheckFailed;
    return std::nullopt;
  }
  return alg;
}

int cmd_cohomology(const CommonOpts& o) {
  const std::string path = resolve_spec_path(o);
  const homcalc::AlgebraSpec spec = homcalc::load_algebra_spec(path);
  ordered_json report = report_header("cohomology", path, spec, o, false);
  int exit_code = kExitOk;
  auto alg = checked_algebra(spec, report, exit_code);
  if (alg) {
    homcalc::CochainComplex cc(*alg, o.max_degree, homcalc::Coeffs::Algebra);
    std::optional<homcalc::CochainComplex> dual;
    if (alg->regular_unital())
      dual.emplace(*alg, o.max_degree, homcalc::Coeffs::Dual);

    std::cout << "cohomology of " << spec.name << " (degrees " << cc.min_degree() << ".."
              << o.max_degree << ")\n";
    std::cout << "  p   dim C^p   dim H^p(A,A)   dim H^p(A,A*)\n";
    ordered_json degrees = ordered_json::array();
    for (int p = cc.min_degree(); p <= o.max_degree; ++p) {
      std::cout << "  " << std::left << std::setw(4) << p << std::setw(10)
                << cc.space_dim(p) << std::setw(15) << cc.cohomology(p).dim();
      if (dual)
        std::cout << dual->cohomology(p).dim();
      else
        std::cout << "-";
      std::cout << "\n";
      ordered_json d;
      d["degree"] = p;
      d["space_dim"] = cc.space_dim(p);
      d["dim"] = cc.cohomology(p).dim();
      ordered_json reps = ordered_json::array();
      for (std::size_t k = 0; k < cc.cohomology(p).dim(); ++k)
        reps.push_back(cochain_json(cc.class_representative(p, k)));
      d["representatives"] = std::move(reps);
      if (dual) {
        d["dual_dim"] = dual->cohomology(p).dim();
        ordered_json dreps = ordered_json::array();
        for (std::size_t k = 0; k < dual->cohomology(p).dim(); ++k)
          dreps.push_back(cochain_json(dual->class_representative(p, k)));
        d["dual_representatives"] = std::move(dreps);
      }
      degrees.push_back(std::move(d));
    }
    if (!dual)
      std::cout << "  (dual coefficients need a regular unital algebra; skipped)\n";
    report["degrees"] = std::move(degrees);
    report["dual_coefficients"] = alg->regular_unital();
  }
  report["exit_code"] = exit_code;
  emit_report(report, o.json_path);
  return exit_code;
}

int cmd_homology(const CommonOpts& o) {
  const std::string path = resolve_spec_path(o);
  const homcalc::AlgebraSpec spec = homcalc::load_algebra_spec(path);
  ordered_json report = report_header("homology", path, spec, o, false);
  const int max_n = o.max_degree + 1;
  report["config"]["max_degree"] = max_n;
  int exit_code = kExitOk;
  auto alg = checked_algebra(spec, report, exit_code);
  if (alg) {
    homcalc::ChainComplex mc(*alg, max_n);
    std::optional<homcalc::ChainComplex> norm;
    if (alg->unital()) norm.emplace(*alg, max_n, true);

    std::cout << "homology of " << spec.name << " (degrees 0.." << max_n << ")\n";
    std::cout << "  n   dim M(n)   dim H_n   dim H_n (normalized)\n";
    ordered_json degrees = ordered_json::array();
    for (int n = 0; n <= max_n; ++n) {
      std::cout << "  " << std::left << std::setw(4) << n << std::setw(11)
                << mc.space_dim(n) << std::setw(10) << mc.homology(n).dim();
      if (norm)
        std::cout << norm->homology(n).dim();
      else
        std::cout << "-";
      std::cout << "\n";
      ordered_json d;
      d["degree"] = n;
      d["space_dim"] = mc.space_dim(n);
      d["dim"] = mc.homology(n).dim();
      ordered_json reps = ordered_json::array();
      for (std::size_t k = 0; k < mc.homology(n).dim(); ++k)
        reps.push_back(chain_json(mc.class_representative(n, k)));
      d["representatives"] = std::move(reps);
      if (norm) d["normalized_dim"] = norm->homology(n).dim();
      degrees.push_back(std::move(d));
    }
    if (!norm) std::cout << "  (normalized complex needs a unit; skipped)\n";
    report["degrees"] = std::move(degrees);
    report["normalized"] = alg->unital();
  }
  report["exit_code"] = exit_code;
  emit_report(report, o.json_path);
  return exit_code;
}

const char* outcome_str(homcalc::Outcome oc) {
  switch (oc) {
    case homcalc::Outcome::Pass: return "pass";
    case homcalc::Outcome::Fail: return "FAIL";
    default: return "skip";
  }
}

ordered_json suite_json(const homcalc::SuiteResult& sr) {
  ordered_json ids = ordered_json::array();
  for (const auto& id : sr.identities)
    ids.push_back({{"name", id.name},
                   {"outcome", outcome_str(id.outcome)},
                   {"trials", id.trials},
                   {"informational", id.informational},
                   {"detail", id.detail}});
  return {{"suite", sr.suite}, {"seed", sr.seed}, {"passed", sr.passed()},
          {"identities", std::move(ids)}};
}

void print_suite(const homcalc::SuiteResult& sr) {
  std::cout << "suite " << sr.suite << ": " << (sr.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& id : sr.identities) {
    std::cout << "  " << std::left << std::setw(34) << id.name << std::setw(6)
              << outcome_str(id.outcome) << std::setw(8)
              << ("x" + std::to_string(id.trials))
              << (id.informational ? "(informational) " : "");
    if (!id.detail.empty())
      std::cout << (id.detail.size() > 100 ? id.detail.substr(0, 100) + "..." : id.detail);
    std::cout << "\n";
  }
}

int cmd_verify(const CommonOpts& o) {
  const std::string path = resolve_spec_path(o);
  const homcalc::AlgebraSpec spec = homcalc::load_algebra_spec(path);
  const homcalc::HomAlgebra alg = homcalc::to_algebra(spec);
  // Invalid algebras still run: the suites are expected to locate the break.
  const homcalc::ValidationReport vrep = homcalc::validate(alg);
  if (!vrep.all_required_pass())
    std::cout << "note: algebra fails validation; running suites anyway\n";

  homcalc::Caps caps;
  caps.max_cochain_degree = o.max_degree;
  caps.max_chain_degree = o.max_degree + 1;
  caps.trials = o.trials;

  std::optional<homcalc::SymmetricStructure> theta;
  if (spec.theta) theta = homcalc::SymmetricStructure{*spec.theta};

  const std::vector<std::string> selected =
      o.suites.empty() ? homcalc::suite_names() : o.suites;
  ordered_json report = report_header("verify", path, spec, o, true);
  report["config"]["suites"] = selected;
  report["checks"] = validation_json(vrep);
  report["valid"] = vrep.all_required_pass();

  bool all_pass = true;
  ordered_json suites = ordered_json::array();
  for (const auto& name : selected) {
    homcalc::SuiteResult sr =
        homcalc::run_suite(name, alg, caps, o.seed, theta ? &*theta : nullptr);
    print_suite(sr);
    suites.push_back(suite_json(sr));
    all_pass = all_pass && sr.passed();
  }
  report["suites"] = std::move(suites);
  report["passed"] = all_pass;
  const int exit_code = all_pass ? kExitOk : kExitCheckFailed;
  report["exit_code"] = exit_code;
  emit_report(report, o.json_path);
  return exit_code;
}

int cmd_bv(const CommonOpts& o) {
  const std::string path = resolve_spec_path(o);
  const homcalc::AlgebraSpec spec = homcalc::load_algebra_spec(path);
  ordered_json report = report_header("bv", path, spec, o, false);
  int exit_code = kExitOk;
  auto alg_opt = checked_algebra(spec, report, exit_code);
  if (!alg_opt) {
    report["exit_code"] = exit_code;
    emit_report(report, o.json_path);
    return exit_code;
  }
  const homcalc::HomAlgebra& alg = *alg_opt;
  if (!alg.regular_unital())
    throw homcalc::RegularityError("BV construction needs a regular unital algebra");

  // Symmetric structure: taken from the spec if present (and re-checked),
  // searched for otherwise. Its absence is a finding, not an error.
  std::optional<homcalc::SymmetricStructure> theta;
  std::string theta_source;
  if (spec.theta) {
    theta = homcalc::SymmetricStructure{*spec.theta};
    theta_source = "spec";
    const homcalc::Matrix constraints = homcalc::symmetric_structure_constraints(alg);
    homcalc::Vector flat(spec.theta->a);
    if (!constraints.apply(flat).is_zero()) {
      std::cout << "bv " << spec.name
                << ": FAIL, spec theta violates the hom-bimodule intertwining "
                   "constraints\n";
      report["finding"] = "spec theta is not a hom-bimodule map";
      report["exit_code"] = kExitCheckFailed;
      emit_report(report, o.json_path);
      return kExitCheckFailed;
    }
    if (!homcalc::inverse(*spec.theta)) {
      std::cout << "bv " << spec.name << ": FAIL, spec theta is not invertible\n";
      report["finding"] = "spec theta is not invertible";
      report["exit_code"] = kExitCheckFailed;
      emit_report(report, o.json_path);
      return kExitCheckFailed;
    }
  } else {
    theta = homcalc::find_symmetric_structure(alg);
    theta_source = "search";
    if (!theta) {
      std::cout << "bv " << spec.name
                << ": no symmetric structure exists (finding; algebra is not "
                   "symmetric)\n";
      report["symmetric"] = false;
      report["finding"] = "no symmetric structure";
      report["exit_code"] = kExitOk;
      emit_report(report, o.json_path);
      return kExitOk;
    }
  }
  report["symmetric"] = true;
  report["theta"] = {{"source", theta_source}, {"matrix", matrix_json(theta->theta)}};
  std::cout << "bv " << spec.name << ": symmetric structure found (" << theta_source
            << ")\n";

  try {
    homcalc::CochainComplex cc(alg, o.max_degree, homcalc::Coeffs::Algebra, true);
    homcalc::CochainComplex dual_cc(alg, o.max_degree, homcalc::Coeffs::Dual, true);
    homcalc::DegreeOneLoweringOperator bv =
        homcalc::bv_from_symmetric(cc, dual_cc, *theta);

    ordered_json deltas = ordered_json::array();
    std::cout << "  Delta matrices (H^p -> H^{p-1}):\n";
    for (int p = bv.min_degree; p <= bv.max_degree; ++p) {
      const homcalc::Matrix& m = bv.at(p);
      std::cout << "    p=" << p << ": " << m.rows << "x" << m.cols << "\n";
      deltas.push_back({{"degree", p}, {"matrix", matrix_json(m)}});
    }
    report["delta"] = std::move(deltas);

    ordered_json checks = ordered_json::array();
    bool all_ok = true;
    std::cout << "  identity checks:\n";
    for (int p = bv.min_degree + 1; p <= bv.max_degree; ++p) {
      const bool ok = (bv.at(p - 1) * bv.at(p)).is_zero();
      all_ok = all_ok && ok;
      std::cout << "    Delta^2 = 0 at p=" << p << ": " << (ok ? "pass" : "FAIL") << "\n";
      checks.push_back({{"name", "delta-squared"}, {"degree", p}, {"pass", ok}});
    }
    for (int p = 1; p <= o.max_degree; ++p)
      for (int q = 1; p + q <= o.max_degree; ++q) {
        int failures = 0, pairs = 0;
        for (std::size_t i = 0; i < cc.cohomology(p).dim(); ++i)
          for (std::size_t j = 0; j < cc.cohomology(q).dim(); ++j) {
            homcalc::Cochain f = cc.class_representative(p, i);
            homcalc::Cochain g = cc.class_representative(q, j);
            homcalc::Vector lhs = cc.class_of(homcalc::bracket(alg, f, g));
            homcalc::Vector cup_cls = cc.class_of(homcalc::cup(alg, f, g));
            homcalc::Cochain df = cc.class_lift(p - 1, bv.at(p).apply(cc.class_of(f)));
            homcalc::Cochain dg = cc.class_lift(q - 1, bv.at(q).apply(cc.class_of(g)));
            homcalc::Vector rhs = bv.at(p + q).apply(cup_cls);
            rhs -= cc.class_of(homcalc::cup(alg, df, g));
            homcalc::Vector last = cc.class_of(homcalc::cup(alg, f, dg));
            last *= Rational(homcalc::parity_sign(p));
            rhs -= last;
            rhs *= Rational(-homcalc::parity_sign(p));
            ++pairs;
            if (!(lhs == rhs)) ++failures;
          }
        const bool ok = failures == 0;
        all_ok = all_ok && ok;
        std::cout << "    BV identity p=" << p << " q=" << q << " (" << pairs
                  << " class pairs): " << (ok ? "pass" : "FAIL") << "\n";
        checks.push_back({{"name", "bv-identity"},
                          {"p", p},
                          {"q", q},
                          {"pairs", pairs},
                          {"failures", failures},
                          {"pass", ok}});
      }
    report["identity_checks"] = std::move(checks);
    report["passed"] = all_ok;
    exit_code = all_ok ? kExitOk : kExitCheckFailed;
  } catch (const homcalc::HypothesisNotSatisfied& e) {
    std::cout << "  hypothesis failed (finding): " << e.what() << "\n";
    report["finding"] = std::string("hypothesis failed: ") + e.what();
    exit_code = kExitOk;
  }
  report["exit_code"] = exit_code;
  emit_report(report, o.json_path);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (co)homology and differential-calculus computations for "
               "finite-dimensional hom-associative algebras over Q"};
  app.require_subcommand(1);

  CommonOpts validate_o, cohomology_o, homology_o, verify_o, bv_o;
  add_common(app.add_subcommand("validate", "Check the algebra axioms"), &validate_o, false);
  add_common(app.add_subcommand("cohomology", "Hochschild cohomology dims and representatives"),
             &cohomology_o, false);
  add_common(app.add_subcommand("homology", "Hochschild homology dims and representatives"),
             &homology_o, false);
  add_common(app.add_subcommand("verify", "Run randomized identity suites"), &verify_o, true);
  add_common(app.add_subcommand("bv", "Symmetric structure search and BV generator"), &bv_o,
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand("validate")) return cmd_validate(validate_o);
    if (app.got_subcommand("cohomology")) return cmd_cohomology(cohomology_o);
    if (app.got_subcommand("homology")) return cmd_homology(homology_o);
    if (app.got_subcommand("verify")) return cmd_verify(verify_o);
    if (app.got_subcommand("bv")) return cmd_bv(bv_o);
  } catch (const homcalc::SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
