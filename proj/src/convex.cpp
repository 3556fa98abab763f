#include "partplanar/convex.hpp"

#include <algorithm>
#include <numeric>

namespace partplanar {

ConvexDrawing::ConvexDrawing(std::vector<int> cyclic_order) : order_(std::move(cyclic_order)) {
  const int n = static_cast<int>(order_.size());
  pos_.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order_[static_cast<size_t>(i)];
    if (v < 0 || v >= n) {
      throw ValidationError("convex order entry " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n));
    }
    if (pos_[static_cast<size_t>(v)] != -1) {
      throw ValidationError("convex order repeats vertex " + std::to_string(v));
    }
    pos_[static_cast<size_t>(v)] = i;
  }
}

ConvexDrawing ConvexDrawing::identity(int n) {
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return ConvexDrawing(std::move(order));
}

int convex_parity(const ConvexDrawing& d, const Edge& e, const Edge& f) {
  if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) {
    throw ValidationError("convex_parity requires vertex-disjoint edges");
  }
  const int n = d.size();
  const int a = d.position_of(e.u);
  const int b = d.position_of(e.v);
  const int span = (b - a + n) % n;
  auto strictly_inside = [&](int v) {
    int off = (d.position_of(v) - a + n) % n;
    return 0 < off && off < span;
  };
  // Chords cross exactly when f's endpoints fall on opposite arcs of e.
  return strictly_inside(f.u) != strictly_inside(f.v) ? 1 : 0;
}

int CrossingParityTable::at(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), EdgeIndexPair{a, b});
  if (it == pairs.end() || *it != EdgeIndexPair{a, b}) {
    throw ValidationError("pair {" + std::to_string(a) + "," + std::to_string(b) +
                          "} not in parity table");
  }
  return parity[static_cast<size_t>(it - pairs.begin())];
}

CrossingParityTable parity_table(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d) {
  if (d.size() != g.vertex_count()) {
    throw ValidationError("convex order covers " + std::to_string(d.size()) +
                          " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  CrossingParityTable table;
  table.pairs = independent_pairs(g, f);
  table.parity.reserve(table.pairs.size());
  for (const auto& [a, b] : table.pairs) {
    table.parity.push_back(static_cast<uint8_t>(convex_parity(d, g.edge(a), g.edge(b))));
  }
  return table;
}

}  // namespace partplanar
