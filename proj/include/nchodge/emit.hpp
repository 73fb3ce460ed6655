#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nchodge/fermat.hpp"
#include "nchodge/mf_json.hpp"

namespace nchodge {

enum class EmitFormat { json, table };

inline EmitFormat parse_format(const std::string& name) {
  if (name == "json") return EmitFormat::json;
  if (name == "table") return EmitFormat::table;
  throw input_error("unknown format: " + name);
}

inline std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- milnor ----

inline OrderedJson milnor_json(const Hypersurface& h) {
  OrderedJson out;
  out["e"] = h.e();
  out["socle_degree"] = h.socle_degree();
  out["hilbert"] = h.hilbert();
  out["total"] = h.total_dimension();
  out["isolated"] = true;
  return out;
}

inline std::string milnor_table(const Hypersurface& h) {
  std::string out;
  out += "e: " + std::to_string(h.e()) + "\n";
  out += "socle_degree: " + std::to_string(h.socle_degree()) + "\n";
  out += "hilbert:";
  for (long v : h.hilbert()) out += " " + std::to_string(v);
  out += "\n";
  out += "total: " + std::to_string(h.total_dimension()) + "\n";
  out += "isolated: true\n";
  return out;
}

// ----------------------------------------------------------------- hodge ----

inline OrderedJson hodge_json(const FiltrationProfile& p) {
  OrderedJson out;
  out["hp0_dim"] = p.hp0;
  OrderedJson nc = OrderedJson::object();
  for (const auto& [level, dim] : p.graded) nc[std::to_string(level)] = dim;
  out["nc_filtration"] = nc;
  OrderedJson cl = OrderedJson::object();
  for (const auto& [a, b, dim] : p.classical)
    cl["h" + std::to_string(a) + "," + std::to_string(b)] = dim;
  out["classical"] = cl;
  OrderedJson hn = OrderedJson::object();
  for (const auto& [m, dim] : p.hn) hn[std::to_string(m)] = dim;
  out["hn"] = hn;
  return out;
}

inline std::string hodge_table(const FiltrationProfile& p) {
  std::string out;
  out += "hp0_dim: " + std::to_string(p.hp0) + "\n";
  out += "nc_filtration:";
  for (const auto& [level, dim] : p.graded)
    out += " " + std::to_string(level) + ":" + std::to_string(dim);
  out += "\n";
  out += "classical:";
  for (const auto& [a, b, dim] : p.classical)
    out += " h" + std::to_string(a) + "," + std::to_string(b) + "=" +
           std::to_string(dim);
  out += "\n";
  out += "hn:";
  for (const auto& [m, dim] : p.hn)
    out += " " + std::to_string(m) + ":" + std::to_string(dim);
  out += "\n";
  return out;
}

// ------------------------------------------------------------------- psi ----

inline OrderedJson psi_json(const MixedElement& x,
                            const std::optional<bool>& cycle) {
  OrderedJson out;
  out["element"] = x.str();
  if (cycle.has_value()) out["cycle"] = *cycle;
  return out;
}

inline std::string psi_table(const MixedElement& x,
                             const std::optional<bool>& cycle) {
  std::string out = "element: " + x.str() + "\n";
  if (cycle.has_value())
    out += std::string("cycle: ") + (*cycle ? "true" : "false") + "\n";
  return out;
}

// ----------------------------------------------------------------- chern ----

inline std::vector<std::pair<std::string, std::string>> chern_reduced_entries(
    const ChernClass& c, const Hypersurface& h) {
  std::vector<std::pair<std::string, std::string>> out;
  if (c.degree < 0) return out;
  const auto& basis = h.basis(static_cast<unsigned>(c.degree));
  for (size_t i = 0; i < basis.size(); ++i) {
    Polynomial mono =
        Polynomial::monomial(h.nvars(), basis[i], Cyclotomic(1));
    out.emplace_back(mono.str(), c.reduced[i].str());
  }
  return out;
}

inline OrderedJson chern_json(const ChernClass& c, const Hypersurface& h) {
  OrderedJson out;
  out["raw"] = c.raw.str();
  OrderedJson red = OrderedJson::object();
  for (const auto& [k, v] : chern_reduced_entries(c, h)) red[k] = v;
  out["reduced"] = red;
  return out;
}

inline std::string chern_table(const ChernClass& c, const Hypersurface& h) {
  std::string out = "raw: " + c.raw.str() + "\n";
  out += "reduced:";
  for (const auto& [k, v] : chern_reduced_entries(c, h))
    out += " " + k + "=" + v;
  out += "\n";
  return out;
}

// ----------------------------------------------------------------- qrank ----

inline OrderedJson qrank_json(long rank) {
  OrderedJson out;
  out["rank"] = rank;
  return out;
}

inline std::string qrank_table(long rank) {
  return "rank: " + std::to_string(rank) + "\n";
}

// ---------------------------------------------------------------- fermat ----

inline OrderedJson fermat_json(const std::vector<ShiodaCharacter>& b,
                               bool count_only) {
  OrderedJson out;
  out["count"] = b.size();
  if (!count_only) {
    OrderedJson classes = OrderedJson::array();
    for (const auto& a : b) classes.push_back(a.entries);
    out["classes"] = classes;
  }
  return out;
}

inline std::string fermat_table(const std::vector<ShiodaCharacter>& b,
                                bool count_only) {
  std::string out = "count: " + std::to_string(b.size()) + "\n";
  if (!count_only)
    for (const auto& a : b) {
      out += "class:";
      for (unsigned v : a.entries) out += " " + std::to_string(v);
      out += "\n";
    }
  return out;
}

// ---------------------------------------------------------------- tensor ----

inline OrderedJson tensor_summary_json(const MatrixFactorization& m) {
  OrderedJson out;
  out["f"] = m.f.str();
  out["rank"] = m.rank();
  return out;
}

inline std::string tensor_summary_table(const MatrixFactorization& m) {
  return "f: " + m.f.str() + "\nrank: " + std::to_string(m.rank()) + "\n";
}

} // namespace nchodge
