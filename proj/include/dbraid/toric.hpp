#pragma once

// Delzant polytope combinatorics: facet-vertex incidence with optional exact
// rational geometry, the facet-disjointness graph, and combinatorial vertex
// blow-up (corner chop).

#include "dbraid/errors.hpp"
#include "dbraid/matrix.hpp"
#include "dbraid/numeric.hpp"
#include "dbraid/scheme.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dbraid {

struct PolytopeGeometry {
  std::vector<std::vector<Rat>> coords;   // per vertex
  std::vector<std::vector<Int>> normals;  // per facet, primitive inward normal
  std::vector<Rat> offsets;               // <n_f, v> == offset_f on the facet
};

struct DelzantIncidence {
  int dim = 0;
  int facets = 0;
  int vertices = 0;
  std::vector<std::vector<int>> incidence;  // per vertex: sorted facet ids, 1-based
  std::optional<PolytopeGeometry> geometry;

  std::vector<std::vector<int>> facet_vertex_sets() const {
    std::vector<std::vector<int>> sets(facets);
    for (int v = 0; v < vertices; ++v)
      for (int f : incidence[v]) sets[f - 1].push_back(v + 1);
    return sets;
  }
};

inline void validate_polytope(DelzantIncidence& p) {
  if (p.dim < 1) throw Error(errc::malformed_input, "polytope dimension must be >= 1");
  if (p.facets < 1 || p.vertices < 1)
    throw Error(errc::malformed_input, "polytope needs at least one facet and one vertex");
  if (static_cast<int>(p.incidence.size()) != p.vertices)
    throw Error(errc::malformed_input, "incidence rows != vertex count");
  for (int v = 0; v < p.vertices; ++v) {
    auto& fs = p.incidence[v];
    std::sort(fs.begin(), fs.end());
    if (std::adjacent_find(fs.begin(), fs.end()) != fs.end())
      throw Error(errc::malformed_input, "vertex " + std::to_string(v + 1) +
                                             " lists a facet twice");
    for (int f : fs)
      if (f < 1 || f > p.facets)
        throw Error(errc::malformed_input, "vertex " + std::to_string(v + 1) +
                                               " names facet " + std::to_string(f) +
                                               " outside 1.." + std::to_string(p.facets));
    if (static_cast<int>(fs.size()) != p.dim)
      throw Error(errc::not_simple, "vertex " + std::to_string(v + 1) + " lies in " +
                                        std::to_string(fs.size()) + " facets, expected " +
                                        std::to_string(p.dim));
  }
  auto sets = p.facet_vertex_sets();
  for (int f = 0; f < p.facets; ++f) {
    if (static_cast<int>(sets[f].size()) < p.dim)
      throw Error(errc::malformed_input, "facet " + std::to_string(f + 1) + " has only " +
                                             std::to_string(sets[f].size()) + " vertices");
    for (int g = f + 1; g < p.facets; ++g)
      if (sets[f] == sets[g])
        throw Error(errc::malformed_input, "facets " + std::to_string(f + 1) + " and " +
                                               std::to_string(g + 1) +
                                               " have identical vertex sets");
  }

  if (!p.geometry) return;
  const PolytopeGeometry& geo = *p.geometry;
  if (static_cast<int>(geo.coords.size()) != p.vertices ||
      static_cast<int>(geo.normals.size()) != p.facets ||
      static_cast<int>(geo.offsets.size()) != p.facets)
    throw Error(errc::malformed_input, "geometry arrays do not match facet/vertex counts");
  for (const auto& c : geo.coords)
    if (static_cast<int>(c.size()) != p.dim)
      throw Error(errc::malformed_input, "vertex coordinate of wrong dimension");
  for (const auto& nrm : geo.normals)
    if (static_cast<int>(nrm.size()) != p.dim)
      throw Error(errc::malformed_input, "facet normal of wrong dimension");

  // incidence must agree with the exact linear algebra, normals must point in
  for (int v = 0; v < p.vertices; ++v)
    for (int f = 0; f < p.facets; ++f) {
      Rat pairing = 0;
      for (int i = 0; i < p.dim; ++i) pairing += Rat(geo.normals[f][i]) * geo.coords[v][i];
      bool on_facet = pairing == geo.offsets[f];
      bool listed = std::binary_search(p.incidence[v].begin(), p.incidence[v].end(), f + 1);
      if (on_facet != listed)
        throw Error(errc::incidence_geometry_mismatch,
                    "vertex " + std::to_string(v + 1) + " vs facet " + std::to_string(f + 1) +
                        ": incidence says " + (listed ? "on" : "off") + ", geometry says " +
                        (on_facet ? "on" : "off"));
      if (pairing < geo.offsets[f])
        throw Error(errc::incidence_geometry_mismatch,
                    "vertex " + std::to_string(v + 1) + " lies on the outer side of facet " +
                        std::to_string(f + 1));
    }

  // smoothness: at each vertex the incident facet normals form a Z-basis
  for (int v = 0; v < p.vertices; ++v) {
    IntMatrix m(static_cast<std::size_t>(p.dim), static_cast<std::size_t>(p.dim));
    for (int i = 0; i < p.dim; ++i)
      for (int j = 0; j < p.dim; ++j) m(i, j) = geo.normals[p.incidence[v][i] - 1][j];
    Int det = determinant(m);
    if (det != 1 && det != -1)
      throw Error(errc::not_smooth, "normals at vertex " + std::to_string(v + 1) +
                                        " have determinant " + det.str() + ", expected +-1");
  }
}

// Γ on the facets: an edge whenever two facets share no vertex
inline std::vector<std::pair<int, int>> facet_graph(const DelzantIncidence& p) {
  auto sets = p.facet_vertex_sets();
  std::vector<std::pair<int, int>> edges;
  for (int f = 0; f < p.facets; ++f)
    for (int g = f + 1; g < p.facets; ++g) {
      bool disjoint = true;
      std::size_t i = 0, j = 0;
      while (i < sets[f].size() && j < sets[g].size()) {
        if (sets[f][i] == sets[g][j]) {
          disjoint = false;
          break;
        }
        sets[f][i] < sets[g][j] ? ++i : ++j;
      }
      if (disjoint) edges.emplace_back(f + 1, g + 1);
    }
  return edges;
}

// corner chop: replace vertex v by a new facet meeting exactly the facets
// through v; one new vertex per edge at v (each (n-1)-subset of its facets)
inline DelzantIncidence chop_vertex(const DelzantIncidence& p, int v,
                                    std::vector<std::string>* warnings = nullptr) {
  if (v < 1 || v > p.vertices)
    throw Error(errc::vertex_not_found, "no vertex " + std::to_string(v) + " (have 1.." +
                                            std::to_string(p.vertices) + ")");
  if (p.geometry && warnings)
    warnings->push_back("chop is combinatorial; exact geometry dropped from the result");
  DelzantIncidence out;
  out.dim = p.dim;
  out.facets = p.facets + 1;
  const int new_facet = out.facets;
  const std::vector<int>& at = p.incidence[v - 1];
  for (int w = 0; w < p.vertices; ++w)
    if (w != v - 1) out.incidence.push_back(p.incidence[w]);
  for (std::size_t drop = 0; drop < at.size(); ++drop) {
    std::vector<int> nv;
    for (std::size_t i = 0; i < at.size(); ++i)
      if (i != drop) nv.push_back(at[i]);
    nv.push_back(new_facet);
    std::sort(nv.begin(), nv.end());
    out.incidence.push_back(std::move(nv));
  }
  out.vertices = static_cast<int>(out.incidence.size());
  validate_polytope(out);
  return out;
}

inline NegativeColourScheme assign_degrees(const std::vector<std::pair<int, int>>& graph_edges,
                                           int facet_count, const std::vector<Int>& degrees) {
  if (static_cast<int>(degrees.size()) != facet_count)
    throw Error(errc::malformed_input, "expected one degree per facet (" +
                                           std::to_string(facet_count) + "), got " +
                                           std::to_string(degrees.size()));
  for (int f = 0; f < facet_count; ++f)
    if (degrees[f] < 1)
      throw Error(errc::non_positive_degree, "degree at facet " + std::to_string(f + 1) + " is " +
                                                 degrees[f].str() + ", positivity requires >= 1");
  return validate_scheme(facet_count, graph_edges, degrees);
}

// polytope edges as maximal (n-1)-fold facet intersections; for Euler checks
inline int polytope_edge_count(const DelzantIncidence& p) {
  std::set<std::vector<int>> edges;
  for (int v = 0; v < p.vertices; ++v) {
    const auto& fs = p.incidence[v];
    for (std::size_t drop = 0; drop < fs.size(); ++drop) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < fs.size(); ++i)
        if (i != drop) sub.push_back(fs[i]);
      edges.insert(std::move(sub));
    }
  }
  return static_cast<int>(edges.size());
}

}  // namespace dbraid
