#include "avsa/algebra_io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

namespace avsa {

namespace {

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

long require_int(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

std::size_t index_from_json(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": index must be an integer");
  long i = v.get<long>();
  if (i < 1 || static_cast<std::size_t>(i) > dim) {
    throw InputError(where + ": index " + std::to_string(i) + " out of range 1.." + std::to_string(dim));
  }
  return static_cast<std::size_t>(i - 1);
}

}  // namespace

FieldElem scalar_from_json(const json& v, const CyclotomicField& field, const std::string& where) {
  if (v.is_string()) {
    try {
      return FieldElem::parse(v.get<std::string>(), field);
    } catch (const ScalarSyntaxError& e) {
      throw ScalarSyntaxError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return FieldElem(v.get<long>());
  throw InputError(where + ": scalar must be a string or an integer");
}

Matrix matrix_from_json(const json& v, std::size_t rows, std::size_t cols, const CyclotomicField& field,
                        const std::string& where) {
  if (!v.is_array() || v.size() != rows) {
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = v[r];
    if (!row.is_array() || row.size() != cols) {
      throw InputError(where + ": row " + std::to_string(r + 1) + " must have " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = scalar_from_json(row[c], field, where + "[" + std::to_string(r + 1) + "][" + std::to_string(c + 1) + "]");
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Parity> parity_from_json(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array() || v.size() != dim) throw InputError(where + ": expected " + std::to_string(dim) + " entries");
  std::vector<Parity> out;
  for (const json& p : v) {
    if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1)) {
      throw InputError(where + ": parity entries must be 0 or 1");
    }
    out.push_back(p.get<int>() == 0 ? Parity::Even : Parity::Odd);
  }
  return out;
}

SuperalgebraSpec parse_algebra(const json& doc) {
  if (!doc.is_object()) throw InputError("algebra document must be a JSON object");
  SuperalgebraSpec g;
  g.name = doc.value("name", std::string("unnamed"));
  const long order = require_int(doc, "field_order");
  if (order < 1) throw InputError("field_order must be >= 1");
  g.field = &CyclotomicField::get(static_cast<int>(order));
  const long dim = require_int(doc, "dim");
  if (dim < 0) throw InputError("dim must be >= 0");
  g.dim = static_cast<std::size_t>(dim);
  g.parity = parity_from_json(require(doc, "parity"), g.dim, "parity");
  g.sigma_order = static_cast<int>(require_int(doc, "sigma_order"));
  g.structure = StructureConstants(g.dim);

  const json empty = json::array();
  const json& brackets = doc.contains("bracket") ? doc.at("bracket") : empty;
  if (!brackets.is_array()) throw InputError("bracket must be an array");
  std::set<std::pair<std::size_t, std::size_t>> listed;
  for (std::size_t r = 0; r < brackets.size(); ++r) {
    const std::string where = "bracket[" + std::to_string(r + 1) + "]";
    const json& rec = brackets[r];
    if (!rec.is_object()) throw InputError(where + ": record must be an object");
    std::size_t i = index_from_json(require(rec, "i"), g.dim, where + ".i");
    std::size_t j = index_from_json(require(rec, "j"), g.dim, where + ".j");
    if (!listed.insert({i, j}).second) throw InputError(where + ": pair listed twice");
  }
  for (std::size_t r = 0; r < brackets.size(); ++r) {
    const std::string where = "bracket[" + std::to_string(r + 1) + "]";
    const json& rec = brackets[r];
    std::size_t i = static_cast<std::size_t>(rec.at("i").get<long>() - 1);
    std::size_t j = static_cast<std::size_t>(rec.at("j").get<long>() - 1);
    const json& out = require(rec, "out");
    if (!out.is_object()) throw InputError(where + ".out must be an object");
    const bool mirror = !listed.count({j, i});
    const FieldElem sign(-super_sign(g.parity[i], g.parity[j]));
    for (const auto& [key, value] : out.items()) {
      std::size_t k;
      try {
        std::size_t used = 0;
        long kk = std::stol(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
        k = index_from_json(json(kk), g.dim, where + ".out");
      } catch (const std::logic_error&) {
        throw InputError(where + ".out: key '" + key + "' is not an index");
      }
      FieldElem c = scalar_from_json(value, *g.field, where + ".out[" + key + "]");
      g.structure(i, j, k) = c;
      if (mirror && i != j) g.structure(j, i, k) = sign * c;
    }
  }
  g.d = matrix_from_json(require(doc, "d"), g.dim, g.dim, *g.field, "d");
  g.sigma = matrix_from_json(require(doc, "sigma"), g.dim, g.dim, *g.field, "sigma");
  return g;
}

SuperalgebraSpec build_algebra(const json& doc) {
  SuperalgebraSpec g = parse_algebra(doc);
  validate_all(g);
  return g;
}

json algebra_to_json(const SuperalgebraSpec& g) {
  json doc;
  doc["name"] = g.name;
  doc["field_order"] = g.field->order();
  doc["dim"] = g.dim;
  json parity = json::array();
  for (Parity p : g.parity) parity.push_back(static_cast<int>(p));
  doc["parity"] = parity;
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim; ++i) {
    for (std::size_t j = i; j < g.dim; ++j) {
      if (i == j && g.parity[i] == Parity::Even) continue;
      json out = json::object();
      for (std::size_t k = 0; k < g.dim; ++k) {
        if (!g.structure(i, j, k).is_zero()) out[std::to_string(k + 1)] = g.structure(i, j, k).str();
      }
      if (out.empty()) continue;
      brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"out", out}});
    }
  }
  doc["bracket"] = brackets;
  doc["d"] = matrix_to_json(g.d);
  doc["sigma"] = matrix_to_json(g.sigma);
  doc["sigma_order"] = g.sigma_order;
  return doc;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw InputError("cannot write '" + path + "'");
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw InputError("cannot write '" + path + "'");
  }
}

}  // namespace avsa
