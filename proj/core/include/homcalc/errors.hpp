#pragma once

#include <stdexcept>
#include <string>

namespace homcalc {

// Thrown when an operation needs alpha (or a bimodule map) to be invertible
// and it is not.
struct RegularityError : std::runtime_error {
  explicit RegularityError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionError : std::invalid_argument {
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A structural fact the theory guarantees failed to hold on concrete data.
// This always indicates a bug (or a genuinely falsified claim) and must
// surface loudly.
struct InternalConsistencyError : std::logic_error {
  explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// The hypotheses of a conditional construction (BV generator, symmetric
// structure transport) do not hold for the given input. Not a bug: absence
// of the structure is a finding.
struct HypothesisNotSatisfied : std::runtime_error {
  explicit HypothesisNotSatisfied(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace homcalc
