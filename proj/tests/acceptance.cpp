// Acceptance suite: one line per criterion, PASS/FAIL plus elapsed time.
// Exits nonzero iff any criterion fails. Criteria cover the classical-limit
// oracle, the randomized identity suites at full trial counts, the BV
// construction, mutation sensitivity, and byte-level report determinism.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "homcalc/homology.hpp"
#include "homcalc/io.hpp"
#include "homcalc/verifier.hpp"
#include "support/classical_oracle.hpp"
#include "support/fixtures.hpp"

using namespace homcalc;
using homcalc::testing::load_fixture;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::cout << "criterion " << number << " (" << title << "): " << (ok ? "PASS" : "FAIL")
            << " [" << elapsed << "s / " << budget_seconds << "s]";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

const std::vector<const char*> kSuiteFixtures = {
    "dual_numbers", "dual_numbers_twist_2", "dual_numbers_twist_half",
    "kxk",          "kxk_swap",             "ground_field"};

bool run_suites_on(const std::vector<std::string>& suites, int trials, std::string& detail) {
  Caps caps;
  caps.trials = trials;
  for (const char* name : kSuiteFixtures) {
    HomAlgebra alg = load_fixture(name);
    for (const std::string& suite : suites) {
      SuiteResult sr = run_suite(suite, alg, caps, 42);
      if (!sr.passed()) {
        for (const auto& id : sr.identities)
          if (id.outcome == Outcome::Fail && !id.informational)
            detail = name + ("/" + suite) + "/" + id.name + ": " + id.detail;
        return false;
      }
    }
  }
  return true;
}

bool classical_limit(std::string& detail) {
  for (const char* name : {"dual_numbers", "kxk"}) {
    HomAlgebra alg = load_fixture(name);
    const int dim = alg.dim();
    auto fail = [&](const std::string& what) {
      detail = std::string(name) + ": " + what + " disagrees with the oracle";
      return false;
    };
    // coboundary on every elementary cochain, degrees 0..3
    for (int p = 0; p <= 3; ++p)
      for (std::size_t t = 0; t < pow_size(dim, p); ++t)
        for (int k = 0; k < dim; ++k) {
          Cochain f = zero_cochain(alg, p);
          f.entry(t, k) = 1;
          if (!(delta_alpha(alg, f) == classical::delta(alg, f))) return fail("delta");
        }
    // boundary and Connes operator on every elementary chain
    for (int n = 1; n <= 4; ++n)
      for (std::size_t t = 0; t < pow_size(dim, n + 1); ++t) {
        Chain x = basis_chain(alg, n, t);
        if (!(boundary_b(alg, x) == classical::boundary(alg, x))) return fail("boundary");
        if (!(boundary_d_alpha(alg, x) == classical::boundary(alg, x)))
          return fail("hochschild boundary");
        if (n <= 3 && !(connes_B(alg, x) == classical::connes(alg, x)))
          return fail("connes");
      }
    // cup and bracket on elementary cochain pairs
    for (int p = 0; p <= 2; ++p)
      for (int q = (p == 0 ? 1 : 0); p + q <= 3; ++q)
        for (std::size_t s = 0; s < pow_size(dim, p) * dim; ++s)
          for (std::size_t t = 0; t < pow_size(dim, q) * dim; ++t) {
            Cochain f = zero_cochain(alg, p);
            f.c[s] = 1;
            Cochain g = zero_cochain(alg, q);
            g.c[t] = 1;
            if (!(cup(alg, f, g) == classical::cup(alg, f, g))) return fail("cup");
            if (!(bracket(alg, f, g) == classical::bracket(alg, f, g)))
              return fail("bracket");
          }
    // cap and lie on elementary cochain/chain pairs
    for (int p = 0; p <= 3; ++p)
      for (int n = std::max(p, 1); n <= 3; ++n)
        for (std::size_t s = 0; s < pow_size(dim, p) * dim; ++s)
          for (std::size_t t = 0; t < pow_size(dim, n + 1); ++t) {
            Cochain f = zero_cochain(alg, p);
            f.c[s] = 1;
            Chain x = basis_chain(alg, n, t);
            if (!(cap(alg, f, x) == classical::cap(alg, f, x))) return fail("cap");
            if (!(lie(alg, f, x) == classical::lie(alg, f, x))) return fail("lie");
          }
  }
  return true;
}

bool gerstenhaber_on_cohomology(std::string& detail) {
  if (!run_suites_on({"gerstenhaber"}, 100, detail)) return false;
  // explicit class pairs/triples up to degree 3 on each fixture
  for (const char* name : kSuiteFixtures) {
    HomAlgebra alg = load_fixture(name);
    CochainComplex cc(alg, 3);
    for (int p = 1; p <= 2; ++p)
      for (int q = 1; p + q <= 3; ++q)
        for (std::size_t i = 0; i < cc.cohomology(p).dim(); ++i)
          for (std::size_t j = 0; j < cc.cohomology(q).dim(); ++j) {
            Cochain f = cc.class_representative(p, i);
            Cochain g = cc.class_representative(q, j);
            Vector fg = induced_cup(cc, f, g);
            Cochain gf = cup(alg, g, f);
            gf *= Rational(parity_sign(static_cast<long>(p) * q));
            if (!(fg == cc.class_of(gf))) {
              detail = std::string(name) + ": graded commutativity on classes";
              return false;
            }
          }
  }
  return true;
}

bool bv_reproduction(std::string& detail) {
  HomAlgebra alg = load_fixture("dual_numbers");
  auto theta = find_symmetric_structure(alg);
  if (!theta) {
    detail = "no symmetric structure found on the classical dual numbers";
    return false;
  }
  CochainComplex cc(alg, 3, Coeffs::Algebra, true);
  CochainComplex dual_cc(alg, 3, Coeffs::Dual, true);
  DegreeOneLoweringOperator bv = bv_from_symmetric(cc, dual_cc, *theta);
  for (int p = bv.min_degree + 2; p <= bv.max_degree; ++p)
    if (!(bv.at(p - 1) * bv.at(p)).is_zero()) {
      detail = "Delta^2 != 0 at degree " + std::to_string(p);
      return false;
    }
  for (int p = 1; p <= 2; ++p)
    for (int q = 1; p + q <= 3; ++q)
      for (std::size_t i = 0; i < cc.cohomology(p).dim(); ++i)
        for (std::size_t j = 0; j < cc.cohomology(q).dim(); ++j) {
          Cochain f = cc.class_representative(p, i);
          Cochain g = cc.class_representative(q, j);
          Vector lhs = cc.class_of(bracket(alg, f, g));
          Cochain df = cc.class_lift(p - 1, bv.at(p).apply(cc.class_of(f)));
          Cochain dg = cc.class_lift(q - 1, bv.at(q).apply(cc.class_of(g)));
          Vector rhs = bv.at(p + q).apply(cc.class_of(cup(alg, f, g)));
          rhs -= cc.class_of(cup(alg, df, g));
          Vector last = cc.class_of(cup(alg, f, dg));
          last *= Rational(parity_sign(p));
          rhs -= last;
          rhs *= Rational(-parity_sign(p));
          if (!(lhs == rhs)) {
            detail = "BV identity fails at p=" + std::to_string(p) +
                     " q=" + std::to_string(q);
            return false;
          }
        }
  return true;
}

bool mutation_sensitivity(std::string& detail) {
  Caps caps;
  caps.trials = 50;
  HomAlgebra mutant = load_fixture("mutant_nonassoc");
  for (const std::string& suite : suite_names()) {
    SuiteResult sr = run_suite(suite, mutant, caps, 42);
    bool witnessed = false;
    for (const auto& id : sr.identities)
      if (id.outcome == Outcome::Fail && !id.informational && !id.detail.empty())
        witnessed = true;
    if (sr.passed() || !witnessed) {
      detail = "suite " + suite + " did not fail with a witness on the corrupted algebra";
      return false;
    }
  }
  // the corrupted symmetric structure must trip the bv suite on a valid algebra
  AlgebraSpec spec = homcalc::testing::load_fixture_spec("mutant_bad_theta");
  SymmetricStructure theta{*spec.theta};
  SuiteResult sr = suite_bv(to_algebra(spec), caps, 42, &theta);
  if (sr.passed()) {
    detail = "bv suite accepted a corrupted symmetric structure";
    return false;
  }
  return true;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool determinism(std::string& detail) {
  const std::string cli = HOMCALC_CLI_PATH;
  const std::string fixtures = HOMCALC_FIXTURES_DIR;
  auto run = [&](const std::string& args, const std::string& json) {
    std::string cmd = "\"" + cli + "\" " + args + " --fixtures-dir \"" + fixtures +
                      "\" --json " + json + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  struct Case {
    std::string args;
    std::string tag;
  };
  for (const Case& c : {Case{"verify dual_numbers_twist_2 --trials 30 --seed 5", "verify"},
                        Case{"bv kxk_swap", "bv"},
                        Case{"cohomology dual_numbers", "cohomology"}}) {
    const std::string a = "acceptance_" + c.tag + "_a.json";
    const std::string b = "acceptance_" + c.tag + "_b.json";
    if (run(c.args, a) != 0 || run(c.args, b) != 0) {
      detail = c.tag + ": CLI run failed";
      return false;
    }
    std::string ca = slurp(a), cb = slurp(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    if (ca.empty() || ca != cb) {
      detail = c.tag + ": reports differ between identical runs";
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "classical limit matches an independent oracle", 10.0, classical_limit);
  criterion(2, "operad and module axioms, randomized", 60.0, [](std::string& d) {
    return run_suites_on({"operad", "comp_module"}, 100, d);
  });
  criterion(3, "chain-level identities, randomized", 60.0, [](std::string& d) {
    return run_suites_on({"chain_identities"}, 100, d);
  });
  criterion(4, "calculus structure up to homotopy", 120.0, [](std::string& d) {
    return run_suites_on({"calculus"}, 100, d);
  });
  criterion(5, "Gerstenhaber structure on cohomology", 120.0, gerstenhaber_on_cohomology);
  criterion(6, "BV generator on the classical dual numbers", 120.0, bv_reproduction);
  criterion(7, "mutation sensitivity", 120.0, mutation_sensitivity);
  criterion(8, "byte-identical reports", 60.0, determinism);

  if (g_failures == 0) {
    std::cout << "all acceptance criteria passed\n";
    return 0;
  }
  std::cout << g_failures << " acceptance criteria failed\n";
  return 1;
}
