#pragma once

#include <cctype>
#include <fstream>
#include <string>

#include <json.hpp>

#include "nchodge/mf.hpp"
#include "nchodge/parse.hpp"

namespace nchodge {

using OrderedJson = nlohmann::ordered_json;

/// Smallest ambient arity covering every variable mentioned in the text
/// (variables are exactly the tokens x0, x1, ...; no other token contains
/// the letter x).
inline unsigned scan_nvars(const std::string& text) {
  unsigned out = 0;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    size_t j = i + 1;
    unsigned long v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + static_cast<unsigned long>(text[j] - '0');
      if (v > 63) throw input_error("variable index too large: " + text);
      any = true;
      ++j;
    }
    if (any && v + 1 > out) out = static_cast<unsigned>(v + 1);
  }
  return out;
}

namespace detail {

inline const OrderedJson& json_field(const OrderedJson& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw input_error(std::string("matrix factorization JSON: missing \"") +
                      key + "\"");
  return j.at(key);
}

inline PolyMatrix json_matrix(const OrderedJson& j, const char* key,
                              unsigned nvars) {
  const OrderedJson& rows = json_field(j, key);
  if (!rows.is_array())
    throw input_error(std::string("matrix factorization JSON: \"") + key +
                      "\" must be an array of rows");
  PolyMatrix out;
  for (const auto& row : rows) {
    if (!row.is_array())
      throw input_error(std::string("matrix factorization JSON: \"") + key +
                        "\" rows must be arrays");
    out.emplace_back();
    for (const auto& cell : row) {
      if (!cell.is_string())
        throw input_error(std::string("matrix factorization JSON: \"") + key +
                          "\" entries must be polynomial strings");
      out.back().push_back(
          parse_polynomial(cell.get<std::string>(), nvars));
    }
  }
  return out;
}

inline void scan_matrix(const OrderedJson& j, const char* key, unsigned& n) {
  const OrderedJson& rows = json_field(j, key);
  if (!rows.is_array()) return;
  for (const auto& row : rows) {
    if (!row.is_array()) continue;
    for (const auto& cell : row)
      if (cell.is_string()) n = std::max(n, scan_nvars(cell.get<std::string>()));
  }
}

} // namespace detail

/// Ambient arity implied by an MF document (largest variable index + 1).
inline unsigned mf_json_nvars(const OrderedJson& j) {
  const OrderedJson& f = detail::json_field(j, "f");
  if (!f.is_string())
    throw input_error("matrix factorization JSON: \"f\" must be a string");
  unsigned n = scan_nvars(f.get<std::string>());
  detail::scan_matrix(j, "A", n);
  detail::scan_matrix(j, "B", n);
  return std::max(n, 1u);
}

/// Parse and fully validate a matrix factorization document at a fixed arity.
inline MatrixFactorization mf_from_json(const OrderedJson& j, unsigned nvars) {
  const OrderedJson& f = detail::json_field(j, "f");
  if (!f.is_string())
    throw input_error("matrix factorization JSON: \"f\" must be a string");
  return mf_validate(parse_polynomial(f.get<std::string>(), nvars),
                     detail::json_matrix(j, "A", nvars),
                     detail::json_matrix(j, "B", nvars));
}

inline OrderedJson mf_to_json(const MatrixFactorization& m) {
  OrderedJson out;
  out["f"] = m.f.str();
  auto dump_mat = [](const PolyMatrix& mat) {
    OrderedJson rows = OrderedJson::array();
    for (const auto& row : mat) {
      OrderedJson r = OrderedJson::array();
      for (const auto& p : row) r.push_back(p.str());
      rows.push_back(r);
    }
    return rows;
  };
  out["A"] = dump_mat(m.A);
  out["B"] = dump_mat(m.B);
  return out;
}

inline OrderedJson read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path);
  try {
    return OrderedJson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
}

/// Load an MF file at its own implied arity.
inline MatrixFactorization mf_read_file(const std::string& path) {
  OrderedJson j = read_json_file(path);
  return mf_from_json(j, mf_json_nvars(j));
}

/// Load an MF file at a caller-fixed ambient arity.
inline MatrixFactorization mf_read_file(const std::string& path,
                                        unsigned nvars) {
  return mf_from_json(read_json_file(path), nvars);
}

} // namespace nchodge
