#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "homcalc/homology.hpp"

namespace homcalc {

// Degree / trial bounds for the randomized suites.
struct Caps {
  int max_cochain_degree = 3;
  int max_chain_degree = 4;
  int trials = 100;
  int coeff_bound = 3;  // random coefficients drawn from [-bound, bound]
};

enum class Outcome { Pass, Fail, Skipped };

struct IdentityResult {
  std::string name;
  Outcome outcome = Outcome::Pass;
  int trials = 0;
  std::string detail;          // skip reason, counterexample witness, or note
  bool informational = false;  // recorded but never fails the suite
};

struct SuiteResult {
  std::string suite;
  unsigned long seed = 0;
  std::vector<IdentityResult> identities;

  bool passed() const;
  const IdentityResult* find(const std::string& name) const;
};

// Random small-integer combination of the equivariant (or normalized) cochain
// basis; deterministic for a fixed generator state.
Cochain random_cochain(const HomAlgebra& alg, int p, std::mt19937_64& rng, int coeff_bound,
                       Coeffs coeffs = Coeffs::Algebra, bool normalized = false);
Chain random_chain(const HomAlgebra& alg, int n, std::mt19937_64& rng, int coeff_bound);

// The six suites. Regularity requirements are reported as Skipped entries,
// never as failures; internal-consistency breakage (e.g. a corrupted algebra
// making delta^2 != 0) is a Fail with the witness in `detail`.
SuiteResult suite_operad(const HomAlgebra& alg, const Caps& caps, unsigned long seed);
SuiteResult suite_comp_module(const HomAlgebra& alg, const Caps& caps, unsigned long seed);
SuiteResult suite_chain_identities(const HomAlgebra& alg, const Caps& caps, unsigned long seed);
SuiteResult suite_calculus(const HomAlgebra& alg, const Caps& caps, unsigned long seed);
SuiteResult suite_bv(const HomAlgebra& alg, const Caps& caps, unsigned long seed,
                     const SymmetricStructure* theta_override = nullptr);
SuiteResult suite_gerstenhaber(const HomAlgebra& alg, const Caps& caps, unsigned long seed);

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const HomAlgebra& alg, const Caps& caps,
                      unsigned long seed, const SymmetricStructure* theta_override = nullptr);

// (suite, identity) pairs for every check the verifier can emit.
std::vector<std::pair<std::string, std::string>> coverage_map();

}  // namespace homcalc
