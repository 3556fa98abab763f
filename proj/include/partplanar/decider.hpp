#ifndef PARTPLANAR_DECIDER_HPP
#define PARTPLANAR_DECIDER_HPP

#include <compare>
#include <vector>

#include "partplanar/convex.hpp"
#include "partplanar/gf2.hpp"
#include "partplanar/graph.hpp"

namespace partplanar {

/// Bijection between move variables x_{e,v} and dense indices, lexicographic
/// by (edge index, vertex). Variables with v an endpoint of e are excluded:
/// no equation ever uses them.
class MoveVariableIndex {
 public:
  explicit MoveVariableIndex(const Graph& g);

  int count() const { return count_; }
  int index_of(int edge, int vertex) const;
  std::pair<int, int> pair_of(int index) const;  // (edge, vertex)

 private:
  int n_ = 0;
  int per_edge_ = 0;
  int count_ = 0;
  std::vector<Edge> edges_;
};

/// An (edge, vertex) move: drags a piece of the edge over the vertex,
/// flipping its crossing parity with every edge incident to that vertex.
struct Move {
  int edge = 0;
  int vertex = 0;
  auto operator<=>(const Move&) const = default;
};

/// A set of performed moves; the YES-certificate.
struct MoveSet {
  std::vector<Move> moves;  // sorted, canonical
  bool operator==(const MoveSet&) const = default;
};

struct DecisionStats {
  int num_equations = 0;
  int num_variables_used = 0;
  int rank = 0;
  double elapsed_ms = 0.0;  // system build + solve wall time
};

struct Decision {
  bool yes = false;
  MoveSet certificate;  // meaningful iff yes
  DecisionStats stats;
};

/// One equation per unordered independent pair with a member in F:
///   i_D(a,b) + x_{a,b.u} + x_{a,b.v} + x_{b,a.u} + x_{b,a.v} = 0  (mod 2).
/// Row order follows independent_pairs; each support has exactly 4 variables.
Gf2System build_system(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d);

/// Decides whether the graph has a drawing in which every F-edge is free of
/// crossings: YES iff the move system built from the reference drawing is
/// solvable. The answer is independent of the drawing; the certificate is not.
Decision decide(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d);
Decision decide(const Graph& g, const EdgeSubset& f);

/// True iff applying the moves to the reference drawing makes every F-edge
/// cross each edge independent of it an even number of times.
bool verify_certificate(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d,
                        const MoveSet& moves);

}  // namespace partplanar

#endif
