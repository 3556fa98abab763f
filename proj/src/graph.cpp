#include "partplanar/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace partplanar {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) {
    throw ValidationError("vertex count must be nonnegative");
  }
  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    if (e.u == e.v) {
      throw ValidationError("self-loop at edge " + std::to_string(i) + ": {" + std::to_string(e.u) +
                            "," + std::to_string(e.v) + "}");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_) {
      throw ValidationError("endpoint out of range at edge " + std::to_string(i) + ": {" +
                            std::to_string(e.u) + "," + std::to_string(e.v) + "} with n=" +
                            std::to_string(n_));
    }
    if (!seen.insert({e.u, e.v}).second) {
      throw ValidationError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} at edge " + std::to_string(i));
    }
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(static_cast<size_t>(n_), 0);
  for (const Edge& e : edges_) {
    ++deg[static_cast<size_t>(e.u)];
    ++deg[static_cast<size_t>(e.v)];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(n_));
  for (const Edge& e : edges_) {
    adj[static_cast<size_t>(e.u)].push_back(e.v);
    adj[static_cast<size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::vector<std::vector<int>> Graph::incidence() const {
  std::vector<std::vector<int>> inc(static_cast<size_t>(n_));
  for (size_t i = 0; i < edges_.size(); ++i) {
    inc[static_cast<size_t>(edges_[i].u)].push_back(static_cast<int>(i));
    inc[static_cast<size_t>(edges_[i].v)].push_back(static_cast<int>(i));
  }
  return inc;
}

int Graph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u == u && edges_[i].v == v) return static_cast<int>(i);
  }
  return -1;
}

int EdgeSubset::count() const {
  int c = 0;
  for (uint8_t fl : flags) c += fl != 0;
  return c;
}

EdgeSubset EdgeSubset::all(int edge_count, bool value) {
  EdgeSubset s;
  s.flags.assign(static_cast<size_t>(edge_count), value ? 1 : 0);
  return s;
}

std::pair<Graph, EdgeSubset> build_graph(int vertex_count,
                                         const std::vector<std::pair<int, int>>& edge_list,
                                         const std::vector<uint8_t>& f_flags) {
  if (edge_list.size() != f_flags.size()) {
    throw ValidationError("flag count mismatch: " + std::to_string(f_flags.size()) + " flags for " +
                          std::to_string(edge_list.size()) + " edges");
  }
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [u, v] : edge_list) edges.push_back({u, v});
  Graph g(vertex_count, std::move(edges));
  EdgeSubset f{f_flags};
  return {std::move(g), std::move(f)};
}

void require_subset_matches(const Graph& g, const EdgeSubset& f) {
  if (f.size() != g.edge_count()) {
    throw ValidationError("edge subset has " + std::to_string(f.size()) + " flags but graph has " +
                          std::to_string(g.edge_count()) + " edges");
  }
}

std::vector<EdgeIndexPair> independent_pairs(const Graph& g, const EdgeSubset& restrict_first_to) {
  require_subset_matches(g, restrict_first_to);
  const auto& edges = g.edges();
  const int m = g.edge_count();
  std::vector<EdgeIndexPair> pairs;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (!restrict_first_to.contains(a) && !restrict_first_to.contains(b)) continue;
      const Edge& ea = edges[static_cast<size_t>(a)];
      const Edge& eb = edges[static_cast<size_t>(b)];
      if (ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v) continue;
      pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

BridgeDecomposition bridge_decomposition(const Graph& g, const EdgeSubset& f) {
  require_subset_matches(g, f);
  const int n = g.vertex_count();
  const int m = g.edge_count();

  std::vector<uint8_t> in_skeleton(static_cast<size_t>(n), 0);
  for (int e = 0; e < m; ++e) {
    if (f.contains(e)) {
      in_skeleton[static_cast<size_t>(g.edge(e).u)] = 1;
      in_skeleton[static_cast<size_t>(g.edge(e).v)] = 1;
    }
  }

  BridgeDecomposition bd;
  for (int v = 0; v < n; ++v) {
    if (in_skeleton[static_cast<size_t>(v)]) bd.skeleton_vertices.push_back(v);
  }

  // Trivial bridges: non-F edges with both endpoints on the skeleton.
  for (int e = 0; e < m; ++e) {
    if (f.contains(e)) continue;
    const Edge& ed = g.edge(e);
    if (in_skeleton[static_cast<size_t>(ed.u)] && in_skeleton[static_cast<size_t>(ed.v)]) {
      Bridge b;
      b.kind = BridgeKind::Trivial;
      b.attachment_vertices = {ed.u, ed.v};
      b.edge_indices = {e};
      bd.bridges.push_back(std::move(b));
    }
  }

  // Component bridges: connected components of the non-skeleton vertices
  // (linked through edges avoiding the skeleton), carrying every incident edge.
  auto inc = g.incidence();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (in_skeleton[static_cast<size_t>(start)] || comp[static_cast<size_t>(start)] >= 0) continue;
    if (inc[static_cast<size_t>(start)].empty()) continue;  // isolated vertices join no bridge
    Bridge b;
    b.kind = BridgeKind::Component;
    std::vector<int> stack = {start};
    comp[static_cast<size_t>(start)] = start;
    std::set<int> attach;
    std::set<int> carried;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      b.internal_vertices.push_back(v);
      for (int e : inc[static_cast<size_t>(v)]) {
        carried.insert(e);
        const Edge& ed = g.edge(e);
        int w = ed.u == v ? ed.v : ed.u;
        if (in_skeleton[static_cast<size_t>(w)]) {
          attach.insert(w);
        } else if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = start;
          stack.push_back(w);
        }
      }
    }
    std::sort(b.internal_vertices.begin(), b.internal_vertices.end());
    b.attachment_vertices.assign(attach.begin(), attach.end());
    b.edge_indices.assign(carried.begin(), carried.end());
    bd.bridges.push_back(std::move(b));
  }
  return bd;
}

}  // namespace partplanar
