#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homcalc/algebra.hpp"

namespace homcalc {

// Raised for malformed or semantically invalid algebra spec files (bad JSON,
// out-of-range indices, wrong shapes). Maps to the usage/parse exit code.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// On-disk description of a hom-associative algebra: sparse structure
// constants, the structure map, optional unit and symmetric-structure
// candidate. All scalars are exact rationals serialized as "p/q" strings.
struct AlgebraSpec {
  std::string name;
  int dim = 0;
  std::vector<std::string> labels;     // may be empty
  std::vector<Rational> mu;            // dense (i*dim + j)*dim + k tensor
  Matrix alpha;
  std::optional<Vector> unit;
  std::optional<Matrix> theta;
};

AlgebraSpec parse_algebra_spec(const std::string& json_text);
AlgebraSpec load_algebra_spec(const std::string& path);
std::string algebra_spec_to_json(const AlgebraSpec& spec);
void save_algebra_spec(const AlgebraSpec& spec, const std::string& path);

// Builds the HomAlgebra (this does not run validate(); callers decide).
HomAlgebra to_algebra(const AlgebraSpec& spec);

}  // namespace homcalc
