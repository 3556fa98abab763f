#ifndef PARTPLANAR_CONVEX_HPP
#define PARTPLANAR_CONVEX_HPP

#include <vector>

#include "partplanar/graph.hpp"

namespace partplanar {

/// The reference drawing: vertices in convex position, edges as straight
/// chords. Only the cyclic vertex order matters; crossing parities are read
/// off combinatorially.
class ConvexDrawing {
 public:
  explicit ConvexDrawing(std::vector<int> cyclic_order);
  static ConvexDrawing identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int position_of(int v) const { return pos_[static_cast<size_t>(v)]; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

/// Crossing parity of two vertex-disjoint chords: 1 iff the endpoints
/// alternate around the circle. Throws if the edges share a vertex.
int convex_parity(const ConvexDrawing& d, const Edge& e, const Edge& f);

/// Crossing parities for every independent pair with a member in F,
/// keyed by ascending (edge, edge) index pairs.
struct CrossingParityTable {
  std::vector<EdgeIndexPair> pairs;  // ascending lexicographic
  std::vector<uint8_t> parity;       // aligned with pairs

  /// Parity of the pair {a,b}; throws if the pair is not in the table.
  int at(int a, int b) const;
};

CrossingParityTable parity_table(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d);

}  // namespace partplanar

#endif
