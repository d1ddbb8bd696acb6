#pragma once

#include <string>

#include "homcalc/io.hpp"

namespace homcalc::testing {

#ifndef HOMCALC_FIXTURES_DIR
#error "HOMCALC_FIXTURES_DIR must be defined by the build"
#endif

inline std::string fixture_path(const std::string& name) {
  return std::string(HOMCALC_FIXTURES_DIR) + "/" + name + ".json";
}

inline AlgebraSpec load_fixture_spec(const std::string& name) {
  return load_algebra_spec(fixture_path(name));
}

inline HomAlgebra load_fixture(const std::string& name) {
  return to_algebra(load_fixture_spec(name));
}

}  // namespace homcalc::testing
