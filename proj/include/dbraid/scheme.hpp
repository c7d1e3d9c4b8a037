#pragma once

// Negative colour schemes: a simple loopless graph on colours 1..r with a
// positive degree per colour, plus the graph combinatorics the group
// computations depend on (components, bipartiteness, negation, disjoint union).

#include "dbraid/errors.hpp"
#include "dbraid/numeric.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace dbraid {

struct NegativeColourScheme {
  int r = 0;                              // colours, vertices 1..r
  std::vector<std::pair<int, int>> edges; // normalized first < second, sorted lex
  std::vector<Int> degrees;               // k_1 .. k_r, all >= 1

  bool very_composite() const {
    if (r == 0) return true;
    for (const auto& k : degrees)
      if (k < 2) return false;
    return true;
  }

  bool has_edge(int a, int b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
  }

  std::size_t edge_pos(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    if (it == edges.end() || *it != std::make_pair(a, b))
      throw Error(errc::unknown_edge,
                  "no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    return static_cast<std::size_t>(it - edges.begin());
  }

  bool operator==(const NegativeColourScheme& o) const {
    return r == o.r && edges == o.edges && degrees == o.degrees;
  }
};

inline NegativeColourScheme validate_scheme(int r, std::vector<std::pair<int, int>> edges,
                                            std::vector<Int> degrees) {
  if (r < 0) throw Error(errc::index_out_of_range, "negative colour count");
  if (static_cast<int>(degrees.size()) != r)
    throw Error(errc::malformed_input, "expected " + std::to_string(r) + " degrees, got " +
                                           std::to_string(degrees.size()));
  for (int i = 0; i < r; ++i)
    if (degrees[i] < 1)
      throw Error(errc::non_positive_degree,
                  "degree k_" + std::to_string(i + 1) + " = " + degrees[i].str() + " must be >= 1");
  for (auto& e : edges) {
    if (e.first == e.second)
      throw Error(errc::self_loop, "self-loop at colour " + std::to_string(e.first));
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 1 || e.second > r)
      throw Error(errc::index_out_of_range, "edge {" + std::to_string(e.first) + "," +
                                                std::to_string(e.second) + "} out of range 1.." +
                                                std::to_string(r));
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw Error(errc::duplicate_edge, "duplicate edge {" + std::to_string(edges[i].first) + "," +
                                            std::to_string(edges[i].second) + "}");
  return NegativeColourScheme{r, std::move(edges), std::move(degrees)};
}

struct GraphAnalysis {
  struct Component {
    std::vector<int> vertices;  // ascending
    bool bipartite = false;
    std::vector<int> sign;       // per scheme vertex: +1/-1 inside this component, 0 outside
    std::vector<int> odd_cycle;  // closed walk of odd length when not bipartite
  };
  std::vector<Component> components;
  int edge_count = 0;       // s
  int bipartite_count = 0;  // t
};

inline GraphAnalysis analyze_graph(const NegativeColourScheme& s) {
  GraphAnalysis out;
  out.edge_count = static_cast<int>(s.edges.size());
  std::vector<std::vector<int>> adj(s.r + 1);
  for (const auto& e : s.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  std::vector<int> colour(s.r + 1, 0);  // 0 unvisited, else +-1
  std::vector<int> parent(s.r + 1, 0), depth(s.r + 1, 0);

  for (int root = 1; root <= s.r; ++root) {
    if (colour[root] != 0) continue;
    GraphAnalysis::Component comp;
    comp.sign.assign(s.r, 0);
    comp.bipartite = true;
    std::vector<int> queue{root};
    colour[root] = 1;  // lowest-indexed vertex of the component gets +1
    parent[root] = 0;
    depth[root] = 0;
    std::pair<int, int> offender{0, 0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      comp.vertices.push_back(v);
      for (int w : adj[v]) {
        if (colour[w] == 0) {
          colour[w] = -colour[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (colour[w] == colour[v] && comp.bipartite) {
          comp.bipartite = false;
          offender = {v, w};
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    if (comp.bipartite) {
      for (int v : comp.vertices) comp.sign[v - 1] = colour[v];
      ++out.bipartite_count;
    } else {
      // closed odd walk: path(root..v) + edge {v,w} + path(w..root)
      auto path_to_root = [&](int v) {
        std::vector<int> p;
        for (; v != 0; v = parent[v]) p.push_back(v);
        return p;  // v .. root
      };
      std::vector<int> up = path_to_root(offender.first);
      std::vector<int> down = path_to_root(offender.second);
      comp.odd_cycle.assign(up.rbegin(), up.rend());
      comp.odd_cycle.insert(comp.odd_cycle.end(), down.begin(), down.end());
      // walk root..v, w..root has length depth(v)+depth(w)+1: odd since parities agree
    }
    out.components.push_back(std::move(comp));
  }
  return out;
}

inline NegativeColourScheme negate_graph(const NegativeColourScheme& s) {
  std::vector<std::pair<int, int>> complement;
  for (int a = 1; a <= s.r; ++a)
    for (int b = a + 1; b <= s.r; ++b)
      if (!s.has_edge(a, b)) complement.emplace_back(a, b);
  return NegativeColourScheme{s.r, std::move(complement), s.degrees};
}

inline NegativeColourScheme disjoint_union(const NegativeColourScheme& a,
                                           const NegativeColourScheme& b) {
  NegativeColourScheme u;
  u.r = a.r + b.r;
  u.edges = a.edges;
  for (const auto& e : b.edges) u.edges.emplace_back(e.first + a.r, e.second + a.r);
  std::sort(u.edges.begin(), u.edges.end());
  u.degrees = a.degrees;
  u.degrees.insert(u.degrees.end(), b.degrees.begin(), b.degrees.end());
  return u;
}

// induced subscheme on a vertex subset (ascending); old index map returned
inline NegativeColourScheme induced_subscheme(const NegativeColourScheme& s,
                                              const std::vector<int>& vertices) {
  std::vector<int> index(s.r + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i) + 1;
  NegativeColourScheme sub;
  sub.r = static_cast<int>(vertices.size());
  for (int v : vertices) sub.degrees.push_back(s.degrees[v - 1]);
  for (const auto& e : s.edges)
    if (index[e.first] != 0 && index[e.second] != 0)
      sub.edges.emplace_back(index[e.first], index[e.second]);
  std::sort(sub.edges.begin(), sub.edges.end());
  return sub;
}

}  // namespace dbraid
