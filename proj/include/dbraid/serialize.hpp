#pragma once

// File formats: scheme JSON/terse text, polytope JSON, result records,
// normal-form and noncommutative-parameter output. Parsers reject malformed
// input with line/field diagnostics.

#include "dbraid/braid.hpp"
#include "dbraid/centre.hpp"
#include "dbraid/nctorus.hpp"
#include "dbraid/scheme.hpp"
#include "dbraid/toric.hpp"

#include <json.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace dbraid {

using json = nlohmann::ordered_json;

inline Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(errc::malformed_input, "field '" + field + "' must be an integer");
}

inline json int_to_json(const Int& x) {
  static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
  if (x > lo && x < hi) return json(x.convert_to<long long>());
  return json(x.str());
}

inline Rat rat_from_string(const std::string& text, const std::string& field) {
  auto bad = [&] {
    return Error(errc::malformed_input, "field '" + field + "': '" + text +
                                            "' is not a rational (expected p or p/q)");
  };
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
}

inline Rat rat_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>(), field);
  throw Error(errc::malformed_input, "field '" + field + "' must be a rational \"p/q\"");
}

// ---- negative colour schemes ----------------------------------------------

// {"colours": r | [names...], "edges": [[a,b],...], "degrees": [k...]}
// with edges naming colours either by index or by name
inline NegativeColourScheme scheme_from_json(const json& j,
                                             std::vector<std::string>* names_out = nullptr) {
  if (!j.is_object()) throw Error(errc::malformed_input, "scheme file must be a JSON object");
  for (const std::string field : {"colours", "degrees"})
    if (!j.contains(field))
      throw Error(errc::malformed_input, "scheme file missing field '" + field + "'");

  int r = 0;
  std::map<std::string, int> name_index;
  std::vector<std::string> names;
  const json& colours = j.at("colours");
  if (colours.is_number_integer()) {
    long long v = colours.get<long long>();
    if (v < 0 || v > 100000) throw Error(errc::malformed_input, "field 'colours' out of range");
    r = static_cast<int>(v);
  } else if (colours.is_array()) {
    for (const auto& item : colours) {
      if (!item.is_string())
        throw Error(errc::malformed_input, "field 'colours' must be a count or a name list");
      std::string name = item.get<std::string>();
      if (!name_index.emplace(name, ++r).second)
        throw Error(errc::malformed_input, "colour name '" + name + "' repeated");
      names.push_back(name);
    }
  } else {
    throw Error(errc::malformed_input, "field 'colours' must be a count or a name list");
  }

  auto colour_ref = [&](const json& v, const std::string& field) -> int {
    if (v.is_number_integer()) return static_cast<int>(v.get<long long>());
    if (v.is_string() && !name_index.empty()) {
      auto it = name_index.find(v.get<std::string>());
      if (it == name_index.end())
        throw Error(errc::malformed_input,
                    "field '" + field + "': unknown colour name '" + v.get<std::string>() + "'");
      return it->second;
    }
    throw Error(errc::malformed_input, "field '" + field + "': colour must be an index" +
                                           (name_index.empty() ? "" : " or a declared name"));
  };

  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array())
      throw Error(errc::malformed_input, "field 'edges' must be an array of pairs");
    for (std::size_t i = 0; i < j.at("edges").size(); ++i) {
      const json& e = j.at("edges")[i];
      std::string field = "edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2)
        throw Error(errc::malformed_input, "field '" + field + "' must be a pair");
      edges.emplace_back(colour_ref(e[0], field), colour_ref(e[1], field));
    }
  }

  std::vector<Int> degrees;
  if (!j.at("degrees").is_array())
    throw Error(errc::malformed_input, "field 'degrees' must be an array");
  for (std::size_t i = 0; i < j.at("degrees").size(); ++i)
    degrees.push_back(int_from_json(j.at("degrees")[i], "degrees[" + std::to_string(i) + "]"));

  if (names_out) *names_out = names;
  return validate_scheme(r, std::move(edges), std::move(degrees));
}

// terse text: line 1 r, line 2 degrees, remaining lines "a b"
inline NegativeColourScheme scheme_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    throw Error(errc::malformed_input, "line " + std::to_string(lineno) + ": " + what);
  };

  if (!next_line()) throw Error(errc::malformed_input, "empty scheme file");
  int r = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> r) || r < 0) fail("expected the colour count");
    if (ls >> extra) fail("unexpected token '" + extra + "' after the colour count");
  }
  std::vector<Int> degrees;
  if (r > 0) {
    if (!next_line()) fail("expected a line of degrees");
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      try {
        degrees.emplace_back(tok);
      } catch (const std::exception&) {
        fail("'" + tok + "' is not an integer degree");
      }
    }
    if (static_cast<int>(degrees.size()) != r)
      fail("expected " + std::to_string(r) + " degrees, got " + std::to_string(degrees.size()));
  }
  std::vector<std::pair<int, int>> edges;
  while (next_line()) {
    std::istringstream ls(line);
    int a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b)) fail("expected an edge 'a b'");
    if (ls >> extra) fail("unexpected token '" + extra + "' after edge");
    edges.emplace_back(a, b);
  }
  return validate_scheme(r, std::move(edges), std::move(degrees));
}

inline json scheme_to_json(const NegativeColourScheme& s,
                           const std::vector<std::string>& names = {}) {
  json j;
  j["colours"] = s.r;
  json edges = json::array();
  for (const auto& e : s.edges) edges.push_back({e.first, e.second});
  j["edges"] = std::move(edges);
  json degrees = json::array();
  for (const auto& k : s.degrees) degrees.push_back(int_to_json(k));
  j["degrees"] = std::move(degrees);
  if (!names.empty()) {
    json map = json::object();
    for (std::size_t i = 0; i < names.size(); ++i) map[names[i]] = i + 1;
    j["colour_indices"] = std::move(map);  // echo of the name -> index mapping
  }
  return j;
}

// ---- group structure records -----------------------------------------------

inline json group_to_json(const FgAbGroup& g) {
  json j;
  j["rank"] = g.rank();
  json factors = json::array();
  for (const auto& d : g.invariant_factors()) factors.push_back(int_to_json(d));
  j["invariant_factors"] = std::move(factors);
  j["order"] = g.finite() ? "finite:" + (g.torsion_order()).str() : std::string("infinite");
  return j;
}

inline std::string group_to_text(const FgAbGroup& g) {
  std::string out;
  std::size_t rank = g.rank();
  if (rank > 0) out += "Z^" + std::to_string(rank);
  for (const auto& d : g.invariant_factors()) out += (out.empty() ? "Z_" : " + Z_") + d.str();
  if (out.empty()) out = "trivial";
  return out;
}

inline json crosscheck_to_json(const TorsionCheckReport& rep) {
  json j;
  j["agree"] = rep.agree;
  j["exponent_used"] = int_to_json(rep.exponent_used);
  json snf_factors = json::array(), dio_factors = json::array();
  for (const auto& d : rep.snf_torsion.invariant_factors()) snf_factors.push_back(int_to_json(d));
  for (const auto& d : rep.diophantine_torsion.invariant_factors())
    dio_factors.push_back(int_to_json(d));
  j["snf_torsion"] = std::move(snf_factors);
  j["diophantine_torsion"] = std::move(dio_factors);
  json comps = json::array();
  for (const auto& c : rep.components) {
    json cj;
    cj["vertices"] = c.vertices;
    json f = json::array();
    for (const auto& d : c.snf_factors) f.push_back(int_to_json(d));
    cj["factors"] = std::move(f);
    cj["exponent"] = int_to_json(c.exponent);
    cj["agree"] = c.agree;
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

// ---- braid normal forms ------------------------------------------------------

inline json normal_form_to_json(const BraidContext& ctx, const NormalForm& nf) {
  json j;
  json m = json::array();
  for (std::size_t i = 0; i < nf.homology.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < nf.homology.cols(); ++k) row.push_back(int_to_json(nf.homology(i, k)));
    m.push_back(std::move(row));
  }
  j["M"] = std::move(m);
  json central = json::array(), canonical = json::array();
  for (const auto& c : nf.central) central.push_back(int_to_json(c));
  for (const auto& c : ctx.pres.group.canonical(nf.central)) canonical.push_back(int_to_json(c));
  j["central"] = std::move(central);
  j["central_canonical"] = std::move(canonical);
  return j;
}

// ---- polytopes ----------------------------------------------------------------

inline DelzantIncidence polytope_from_json(const json& j) {
  if (!j.is_object()) throw Error(errc::malformed_input, "polytope file must be a JSON object");
  for (const std::string field : {"dim", "facets", "vertices", "incidence"})
    if (!j.contains(field))
      throw Error(errc::malformed_input, "polytope file missing field '" + field + "'");
  DelzantIncidence p;
  p.dim = j.at("dim").get<int>();
  p.facets = j.at("facets").get<int>();
  p.vertices = j.at("vertices").get<int>();
  if (!j.at("incidence").is_array())
    throw Error(errc::malformed_input, "field 'incidence' must be an array");
  for (const auto& row : j.at("incidence")) {
    if (!row.is_array()) throw Error(errc::malformed_input, "incidence rows must be arrays");
    std::vector<int> fs;
    for (const auto& f : row) fs.push_back(f.get<int>());
    p.incidence.push_back(std::move(fs));
  }
  if (j.contains("geometry")) {
    const json& gj = j.at("geometry");
    PolytopeGeometry geo;
    for (const auto& row : gj.at("coords")) {
      std::vector<Rat> c;
      for (const auto& x : row) c.push_back(rat_from_json(x, "geometry.coords"));
      geo.coords.push_back(std::move(c));
    }
    for (const auto& row : gj.at("normals")) {
      std::vector<Int> nrm;
      for (const auto& x : row) nrm.push_back(int_from_json(x, "geometry.normals"));
      geo.normals.push_back(std::move(nrm));
    }
    for (const auto& x : gj.at("offsets")) geo.offsets.push_back(rat_from_json(x, "geometry.offsets"));
    p.geometry = std::move(geo);
  }
  validate_polytope(p);
  return p;
}

inline json polytope_to_json(const DelzantIncidence& p) {
  json j;
  j["dim"] = p.dim;
  j["facets"] = p.facets;
  j["vertices"] = p.vertices;
  json inc = json::array();
  for (const auto& row : p.incidence) inc.push_back(row);
  j["incidence"] = std::move(inc);
  if (p.geometry) {
    json gj;
    json coords = json::array();
    for (const auto& row : p.geometry->coords) {
      json r = json::array();
      for (const auto& x : row) r.push_back(rat_to_string(x));
      coords.push_back(std::move(r));
    }
    gj["coords"] = std::move(coords);
    json normals = json::array();
    for (const auto& row : p.geometry->normals) {
      json r = json::array();
      for (const auto& x : row) r.push_back(int_to_json(x));
      normals.push_back(std::move(r));
    }
    gj["normals"] = std::move(normals);
    json offsets = json::array();
    for (const auto& x : p.geometry->offsets) offsets.push_back(rat_to_string(x));
    gj["offsets"] = std::move(offsets);
    j["geometry"] = std::move(gj);
  }
  return j;
}

// ---- characters / noncommutative parameters -----------------------------------

inline json character_to_json(const FgAbGroup& g, const TorusCharacter& chi) {
  json j;
  json residues = json::array(), moduli = json::array(), angles = json::array();
  for (const auto& x : chi.residues) residues.push_back(int_to_json(x));
  for (const auto& d : g.invariant_factors()) moduli.push_back(int_to_json(d));
  for (const auto& a : chi.angles) angles.push_back(rat_to_string(a));
  j["residues"] = std::move(residues);
  j["moduli"] = std::move(moduli);
  j["angles"] = std::move(angles);
  return j;
}

inline json nc_params_to_json(const FgAbGroup& group, const NCTorusParams& params) {
  json j;
  j["colours"] = params.colours;
  j["genus"] = params.genus;
  j["character"] = character_to_json(group, params.character);
  json theta = json::array();
  for (const auto& row : params.theta) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_to_string(x));
    theta.push_back(std::move(r));
  }
  j["theta"] = std::move(theta);
  return j;
}

}  // namespace dbraid
