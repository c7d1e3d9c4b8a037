#pragma once

// Reproduction of the shipped reference tables: build each graph through the
// toric pipeline, map table colours onto graph vertices (stored permutation,
// with a full search as fallback), and compare computed centre groups against
// the expected rows.

#include "dbraid/centre.hpp"
#include "dbraid/serialize.hpp"
#include "dbraid/toric.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace dbraid {

struct TableRow {
  std::vector<Int> k;
  std::size_t rank = 0;
  std::vector<Int> factors;
  std::optional<std::vector<Int>> printed;  // published value when it differs
  std::string note;
};

struct TableGraph {
  std::string name;
  std::vector<int> chops;
  std::vector<int> permutation;  // table colour i -> graph vertex permutation[i-1]
  NegativeColourScheme graph;    // degrees are placeholders
  std::vector<TableRow> rows;
};

struct TableSpec {
  std::string name;
  std::string polytope_file;
  std::string order_formula;  // "pentagon", "tree" or empty
  std::string formula_note;
  std::vector<TableGraph> graphs;
};

inline Int eval_degree_pattern(const json& cell, const Int& a) {
  if (cell.is_number_integer()) return Int(cell.get<long long>());
  if (cell.is_string()) {
    std::string s = cell.get<std::string>();
    if (!s.empty() && s.back() == 'a') {
      std::string coeff = s.substr(0, s.size() - 1);
      return (coeff.empty() ? Int(1) : Int(coeff)) * a;
    }
    return Int(s);
  }
  throw Error(errc::malformed_input, "table cell must be an integer or an 'a' pattern");
}

inline TableSpec load_table(const json& fixture, const DelzantIncidence& base) {
  TableSpec spec;
  spec.name = fixture.at("name").get<std::string>();
  spec.polytope_file = fixture.at("polytope").get<std::string>();
  if (fixture.contains("order_formula") && fixture.at("order_formula").is_string())
    spec.order_formula = fixture.at("order_formula").get<std::string>();
  if (fixture.contains("formula_note")) spec.formula_note = fixture.at("formula_note").get<std::string>();

  const json& k_rows = fixture.at("k_rows");
  for (const json& gj : fixture.at("graphs")) {
    TableGraph tg;
    tg.name = gj.at("name").get<std::string>();
    for (const auto& c : gj.at("chops")) tg.chops.push_back(c.get<int>());
    for (const auto& p : gj.at("permutation")) tg.permutation.push_back(p.get<int>());
    DelzantIncidence poly = base;
    for (int v : tg.chops) poly = chop_vertex(poly, v);
    tg.graph = validate_scheme(poly.facets, facet_graph(poly),
                               std::vector<Int>(poly.facets, Int(1)));
    if (static_cast<int>(tg.permutation.size()) != tg.graph.r)
      throw Error(errc::malformed_input, "stored labelling does not cover every colour");
    std::size_t rank = gj.at("rank").get<std::size_t>();

    const json& rows = gj.at("rows");
    if (rows.size() != k_rows.size())
      throw Error(errc::malformed_input, "table rows and k_rows differ in length");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const json& kj = k_rows[i];
      auto add_row = [&](const std::vector<Int>& k, const Int& a, bool family) {
        TableRow row;
        row.k = k;
        row.rank = rank;
        for (const auto& f : rows[i].at("factors"))
          row.factors.push_back(eval_degree_pattern(f, a));
        if (rows[i].contains("printed") && !family) {
          std::vector<Int> printed;
          for (const auto& f : rows[i].at("printed")) printed.push_back(eval_degree_pattern(f, a));
          row.printed = std::move(printed);
        }
        if (rows[i].contains("note")) row.note = rows[i].at("note").get<std::string>();
        if (kj.contains("note")) row.note += (row.note.empty() ? "" : "; ") +
                                             kj.at("note").get<std::string>();
        tg.rows.push_back(std::move(row));
      };
      if (kj.contains("family")) {
        long a_min = kj.at("a_min").get<long>(), a_max = kj.at("a_max").get<long>();
        for (long a = a_min; a <= a_max; ++a)
          add_row(std::vector<Int>(tg.graph.r, Int(a)), Int(a), true);
      } else {
        std::vector<Int> k;
        for (const auto& x : kj.at("k")) k.push_back(int_from_json(x, "k"));
        if (static_cast<int>(k.size()) != tg.graph.r)
          throw Error(errc::malformed_input, "table row has " + std::to_string(k.size()) +
                                                 " degrees for " + std::to_string(tg.graph.r) +
                                                 " colours");
        add_row(k, Int(0), false);
      }
    }
    spec.graphs.push_back(std::move(tg));
  }
  return spec;
}

struct TableRowResult {
  std::string graph;
  TableRow row;
  std::size_t computed_rank = 0;
  std::vector<Int> computed;
  std::optional<Int> formula_order;
  Int group_order = 0;  // torsion order
  bool match = false;
};

struct TableReport {
  std::string name;
  std::vector<TableRowResult> rows;
  std::vector<std::pair<std::string, std::vector<int>>> permutations;  // per graph
  bool searched = false;
  bool all_match = true;
};

inline bool check_permutation(const TableGraph& tg, const std::vector<int>& perm) {
  for (const TableRow& row : tg.rows) {
    NegativeColourScheme s = tg.graph;
    for (std::size_t i = 0; i < row.k.size(); ++i) s.degrees[perm[i] - 1] = row.k[i];
    FgAbGroup g = centre_group(s);
    if (g.rank() != row.rank || g.invariant_factors() != row.factors) return false;
  }
  return true;
}

inline std::optional<std::vector<int>> search_permutation(const TableGraph& tg) {
  std::vector<int> perm(tg.graph.r);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (check_permutation(tg, perm)) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

inline TableReport run_table(const TableSpec& spec) {
  TableReport report;
  report.name = spec.name;
  for (const TableGraph& tg : spec.graphs) {
    std::vector<int> perm = tg.permutation;
    if (!check_permutation(tg, perm)) {
      // stored labelling failed; fall back to the full search
      report.searched = true;
      if (auto found = search_permutation(tg)) perm = *found;
    }
    report.permutations.emplace_back(tg.name, perm);
    for (const TableRow& row : tg.rows) {
      NegativeColourScheme s = tg.graph;
      for (std::size_t i = 0; i < row.k.size(); ++i) s.degrees[perm[i] - 1] = row.k[i];
      FgAbGroup g = centre_group(s);
      TableRowResult res;
      res.graph = tg.name;
      res.row = row;
      res.computed_rank = g.rank();
      res.computed = g.invariant_factors();
      res.group_order = g.torsion_order();
      if (spec.order_formula == "pentagon") res.formula_order = pentagon_order_formula(row.k);
      if (spec.order_formula == "tree") res.formula_order = tree_order_formula(row.k);
      res.match = res.computed_rank == row.rank && res.computed == row.factors;
      report.all_match = report.all_match && res.match;
      report.rows.push_back(std::move(res));
    }
  }
  return report;
}

}  // namespace dbraid
