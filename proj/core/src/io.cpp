#include "homcalc/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace homcalc {
namespace {

using nlohmann::ordered_json;

Rational rational_from_json(const ordered_json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return rational_from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SpecError(where + ": " + e.what());
  }
  throw SpecError(where + ": expected an integer or a \"p/q\" string, got " +
                  j.dump());
}

Matrix matrix_from_json(const ordered_json& j, int dim, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw SpecError(where + ": expected " + std::to_string(dim) + " rows");
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw SpecError(where + " row " + std::to_string(r) + ": expected " +
                      std::to_string(dim) + " entries");
    for (int c = 0; c < dim; ++c)
      m.at(r, c) = rational_from_json(
          row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

ordered_json matrix_to_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

AlgebraSpec parse_algebra_spec(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SpecError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw SpecError("spec: top level must be an object");

  AlgebraSpec spec;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SpecError("name: expected a string");
    spec.name = j["name"].get<std::string>();
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw SpecError("dim: required integer field");
  spec.dim = j["dim"].get<int>();
  if (spec.dim <= 0) throw SpecError("dim: must be positive");
  const int d = spec.dim;

  if (j.contains("basis")) {
    const auto& b = j["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != d)
      throw SpecError("basis: expected " + std::to_string(d) + " labels");
    for (const auto& l : b) {
      if (!l.is_string()) throw SpecError("basis: labels must be strings");
      spec.labels.push_back(l.get<std::string>());
    }
  }

  if (!j.contains("mu") || !j["mu"].is_array())
    throw SpecError("mu: required array of [i, j, k, value] entries");
  spec.mu.assign(static_cast<std::size_t>(d) * d * d, Rational(0));
  int pos = 0;
  for (const auto& entry : j["mu"]) {
    const std::string where = "mu entry " + std::to_string(pos++);
    if (!entry.is_array() || entry.size() != 4)
      throw SpecError(where + ": expected [i, j, k, value]");
    int idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!entry[t].is_number_integer())
        throw SpecError(where + ": indices must be integers");
      idx[t] = entry[t].get<int>();
      if (idx[t] < 0 || idx[t] >= d)
        throw SpecError(where + ": index " + std::to_string(idx[t]) +
                        " out of range [0, " + std::to_string(d) + ")");
    }
    spec.mu[(static_cast<std::size_t>(idx[0]) * d + idx[1]) * d + idx[2]] =
        rational_from_json(entry[3], where);
  }

  if (!j.contains("alpha")) throw SpecError("alpha: required matrix field");
  spec.alpha = matrix_from_json(j["alpha"], d, "alpha");

  if (j.contains("unit")) {
    const auto& u = j["unit"];
    if (!u.is_array() || static_cast<int>(u.size()) != d)
      throw SpecError("unit: expected " + std::to_string(d) + " entries");
    Vector unit(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      unit[i] = rational_from_json(u[i], "unit[" + std::to_string(i) + "]");
    spec.unit = std::move(unit);
  }

  if (j.contains("theta")) spec.theta = matrix_from_json(j["theta"], d, "theta");
  return spec;
}

AlgebraSpec load_algebra_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_algebra_spec(buf.str());
  } catch (const SpecError& e) {
    throw SpecError(path + ": " + e.what());
  }
}

std::string algebra_spec_to_json(const AlgebraSpec& spec) {
  ordered_json j;
  j["name"] = spec.name;
  j["dim"] = spec.dim;
  if (!spec.labels.empty()) j["basis"] = spec.labels;
  ordered_json mu = ordered_json::array();
  const int d = spec.dim;
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        const Rational& v = spec.mu[(static_cast<std::size_t>(i) * d + k) * d + l];
        if (v != 0) mu.push_back(ordered_json::array({i, k, l, to_string(v)}));
      }
  j["mu"] = std::move(mu);
  j["alpha"] = matrix_to_json(spec.alpha);
  if (spec.unit) {
    ordered_json u = ordered_json::array();
    for (const auto& e : spec.unit->entries) u.push_back(to_string(e));
    j["unit"] = std::move(u);
  }
  if (spec.theta) j["theta"] = matrix_to_json(*spec.theta);
  return j.dump(2) + "\n";
}

void save_algebra_spec(const AlgebraSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SpecError("cannot open file for writing: " + path);
  out << algebra_spec_to_json(spec);
}

HomAlgebra to_algebra(const AlgebraSpec& spec) {
  return HomAlgebra(spec.dim, spec.mu, spec.alpha, spec.unit, spec.labels);
}

}  // namespace homcalc
