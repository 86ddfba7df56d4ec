#include "rieffel/serialization.hpp"

#include <cstdio>
#include <fstream>

#include "rieffel/errors.hpp"

namespace rieffel {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int require_dim(const json& j) {
  const json& n = require(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1)
    throw SchemaError("field \"n\" must be a positive integer");
  return n.get<int>();
}

double require_number(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number()) throw SchemaError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

Matrix matrix_from_json(const json& j, const char* key, int n) {
  const json& rows = require(j, key);
  const std::size_t m = 2 * static_cast<std::size_t>(n);
  if (!rows.is_array() || rows.size() != m)
    throw SchemaError(std::string("field \"") + key + "\" must be a 2n x 2n array");
  Matrix out(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t r = 0; r < m; ++r) {
    if (!rows[r].is_array() || rows[r].size() != m)
      throw SchemaError(std::string("field \"") + key + "\" must be a 2n x 2n array");
    for (std::size_t c = 0; c < m; ++c) {
      if (!rows[r][c].is_number()) throw SchemaError(std::string("non-numeric entry in ") + key);
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c].get<double>();
    }
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json element_to_json(const FourierElement& a) {
  json terms = json::array();
  for (const auto& [k, c] : a.terms()) {
    json kk = json::array();
    for (int v : k.components()) kk.push_back(v);
    terms.push_back({{"k", std::move(kk)}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"n", a.dim_n()}, {"terms", std::move(terms)}};
}

FourierElement element_from_json(const json& j) {
  const int n = require_dim(j);
  const json& terms = require(j, "terms");
  if (!terms.is_array()) throw SchemaError("field \"terms\" must be an array");
  FourierElement a(n);
  for (const auto& t : terms) {
    const json& k = require(t, "k");
    if (!k.is_array()) throw SchemaError("field \"k\" must be an integer array");
    std::vector<int> comps;
    for (const auto& v : k) {
      if (!v.is_number_integer()) throw SchemaError("field \"k\" must be an integer array");
      comps.push_back(v.get<int>());
    }
    a.add_term(LatticeVector(std::move(comps)), {require_number(t, "re"), require_number(t, "im")});
  }
  return a;
}

json structure_to_json(const SymplecticStructure& s) {
  return {{"n", s.dim_n()},
          {"theta", matrix_to_json(s.theta())},
          {"g", matrix_to_json(s.metric_g())},
          {"J", matrix_to_json(s.complex_J())}};
}

SymplecticStructure structure_from_json(const json& j) {
  const int n = require_dim(j);
  return SymplecticStructure(n, matrix_from_json(j, "theta", n), matrix_from_json(j, "g", n),
                             matrix_from_json(j, "J", n));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

SymplecticStructure load_structure(const std::string& spec) {
  const std::string prefix = "standard:";
  if (spec.rfind(prefix, 0) == 0) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(spec.substr(prefix.size()), &used);
      if (used != spec.size() - prefix.size()) throw SchemaError("bad structure spec " + spec);
    } catch (const std::logic_error&) {
      throw SchemaError("bad structure spec " + spec);
    }
    if (n < 1) throw SchemaError("bad structure spec " + spec);
    return make_standard_structure(n);
  }
  return structure_from_json(read_json_file(spec));
}

FourierElement load_element(const std::string& path) { return element_from_json(read_json_file(path)); }

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace rieffel
