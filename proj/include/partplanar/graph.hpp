#ifndef PARTPLANAR_GRAPH_HPP
#define PARTPLANAR_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace partplanar {

/// Thrown when an input violates a documented precondition or format.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph with stable edge indices. Immutable after
/// construction; self-loops, duplicate edges and out-of-range endpoints
/// are rejected with distinct diagnostics.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

  std::vector<int> degrees() const;
  /// Neighbor lists, each sorted ascending.
  std::vector<std::vector<int>> adjacency() const;
  /// Incident edge indices per vertex, sorted ascending.
  std::vector<std::vector<int>> incidence() const;
  /// Index of edge {u,v}, or -1 if absent.
  int find_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Membership flags for an edge set F, aligned with edge indices.
struct EdgeSubset {
  std::vector<uint8_t> flags;

  bool contains(int e) const { return flags[static_cast<size_t>(e)] != 0; }
  int size() const { return static_cast<int>(flags.size()); }
  int count() const;

  static EdgeSubset all(int edge_count, bool value = true);
};

/// Validates and assembles a graph plus F-flags from raw input.
/// Endpoint pairs may come in either order; edge indices follow input order.
std::pair<Graph, EdgeSubset> build_graph(int vertex_count,
                                         const std::vector<std::pair<int, int>>& edge_list,
                                         const std::vector<uint8_t>& f_flags);

/// Throws unless |flags| matches the graph's edge count.
void require_subset_matches(const Graph& g, const EdgeSubset& f);

using EdgeIndexPair = std::pair<int, int>;

/// All unordered pairs of vertex-disjoint edges with at least one member in
/// the subset, ascending lexicographic by (smaller index, larger index).
std::vector<EdgeIndexPair> independent_pairs(const Graph& g, const EdgeSubset& restrict_first_to);

enum class BridgeKind { Trivial, Component };

/// One bridge of the F-skeleton: either a single non-F edge between skeleton
/// vertices, or a connected chunk of non-skeleton vertices with all their
/// incident edges.
struct Bridge {
  BridgeKind kind = BridgeKind::Trivial;
  std::vector<int> internal_vertices;    // sorted; empty for trivial bridges
  std::vector<int> attachment_vertices;  // sorted
  std::vector<int> edge_indices;         // sorted; the non-F edges carried
};

struct BridgeDecomposition {
  std::vector<int> skeleton_vertices;  // sorted; vertices incident to an F-edge
  std::vector<Bridge> bridges;
};

/// Decomposes E-F into bridges relative to the F-incident skeleton.
BridgeDecomposition bridge_decomposition(const Graph& g, const EdgeSubset& f);

}  // namespace partplanar

#endif
