#pragma once

#include "partmat/errors.hpp"
#include "partmat/fishburn_matrix.hpp"
#include "partmat/inversion_sequence.hpp"
#include "partmat/partition_matrix.hpp"
#include "partmat/paths.hpp"
#include "partmat/polynomial.hpp"
#include "partmat/series.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace partmat {

using Json = nlohmann::ordered_json;

namespace detail {

// Field access that reports shape errors as invalid objects.
template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvalidObject({"json-shape", std::string("missing field \"") + key + "\""});
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidObject({"json-shape", std::string("field \"") + key + "\" has the wrong type"});
  }
}

}  // namespace detail

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidObject({"json-syntax", e.what()});
  }
}

// ---------------------------------------------------------------------------
// Combinatorial objects

inline Json to_json(const PartitionMatrix& p) {
  Json cells = Json::array();
  for (const Cell& c : p.cells()) cells.push_back({{"row", c.row}, {"col", c.col}, {"set", c.elements}});
  return {{"n", p.weight()}, {"dim", p.dim()}, {"cells", cells}};
}

inline PartitionMatrix partition_matrix_from_json(const Json& j) {
  std::vector<Cell> cells;
  for (const Json& c : detail::field<Json>(j, "cells"))
    cells.push_back({detail::field<int>(c, "row"), detail::field<int>(c, "col"),
                     detail::field<std::vector<int>>(c, "set")});
  return PartitionMatrix(detail::field<int>(j, "n"), detail::field<int>(j, "dim"), std::move(cells));
}

inline Json to_json(const FishburnMatrix& a) { return {{"dim", a.dim()}, {"rows", a.rows()}}; }

inline FishburnMatrix fishburn_matrix_from_json(const Json& j) {
  auto rows = detail::field<std::vector<std::vector<int>>>(j, "rows");
  if (j.contains("dim") && detail::field<int>(j, "dim") != static_cast<int>(rows.size()))
    throw InvalidObject({"dimension", "dim does not match the number of rows"});
  return FishburnMatrix(std::move(rows));
}

inline Json to_json(const InversionSequence& e) { return {{"e", e.values()}}; }

inline InversionSequence inversion_sequence_from_json(const Json& j) {
  return InversionSequence(detail::field<std::vector<int>>(j, "e"));
}

inline Json to_json(const MotzkinWord& m) { return {{"word", m.word()}}; }

inline MotzkinWord motzkin_word_from_json(const Json& j) { return MotzkinWord(detail::field<std::string>(j, "word")); }

inline Json to_json(const DyckWord& w) { return {{"dyck", w.letters()}}; }

inline DyckWord dyck_word_from_json(const Json& j) { return dyck_from_letters(detail::field<std::string>(j, "dyck")); }

inline Json to_json(const GridPath& g) { return {{"dim", g.dim()}, {"steps", g.letters()}}; }

inline GridPath grid_path_from_json(const Json& j) {
  return grid_path_from_letters(detail::field<int>(j, "dim"), detail::field<std::string>(j, "steps"));
}

inline Json to_json(const WeightedGridPath& w) {
  Json j = to_json(w.path());
  j["weights"] = w.weights();
  if (w.improper()) j["improper"] = true;
  return j;
}

inline WeightedGridPath weighted_grid_path_from_json(const Json& j) {
  const bool improper = j.contains("improper") && detail::field<bool>(j, "improper");
  return WeightedGridPath(grid_path_from_json(j), detail::field<std::vector<int>>(j, "weights"), improper);
}

// ---------------------------------------------------------------------------
// Polynomials and series; integers travel as decimal strings.

inline Json to_json(const QPolynomial& p, const std::string& var = "q") {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return {{"var", var}, {"coeffs", coeffs}};
}

inline QPolynomial polynomial_from_json(const Json& j) {
  std::vector<BigInt> c;
  for (const auto& s : detail::field<std::vector<std::string>>(j, "coeffs")) {
    try {
      c.push_back(from_decimal(s));
    } catch (const std::exception&) {
      throw InvalidObject({"decimal", "\"" + s + "\" is not an integer"});
    }
  }
  return QPolynomial(std::move(c));
}

inline Json to_json(const TruncatedSeries& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    Json mono = Json::object();
    for (int i = 1; i <= kAuxVars; ++i)
      if (m[i] != 0) mono[var_name(static_cast<Var>(i - 1))] = m[i];
    terms.push_back({{"t", m[0]}, {"mono", mono}, {"coeff", to_decimal(c)}});
  }
  return {{"T", s.order()}, {"terms", terms}};
}

inline TruncatedSeries series_from_json(const Json& j) {
  TruncatedSeries s(detail::field<int>(j, "T"));
  for (const Json& term : detail::field<Json>(j, "terms")) {
    Monomial m{};
    m[0] = detail::field<int>(term, "t");
    const Json mono = detail::field<Json>(term, "mono");
    for (const auto& [name, e] : mono.items()) {
      auto v = parse_var(name);
      if (!v) throw InvalidObject({"series-variable", "unknown variable \"" + name + "\""});
      if (!e.is_number_integer()) throw InvalidObject({"json-shape", "exponent of " + name + " is not an integer"});
      m[1 + static_cast<int>(*v)] = e.get<int>();
    }
    s.add_term(m, from_decimal(detail::field<std::string>(term, "coeff")));
  }
  return s;
}

}  // namespace partmat
