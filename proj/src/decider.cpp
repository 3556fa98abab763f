#include "partplanar/decider.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_set>

namespace partplanar {

MoveVariableIndex::MoveVariableIndex(const Graph& g)
    : n_(g.vertex_count()), per_edge_(std::max(0, g.vertex_count() - 2)), edges_(g.edges()) {
  count_ = per_edge_ * static_cast<int>(edges_.size());
}

int MoveVariableIndex::index_of(int edge, int vertex) const {
  if (edge < 0 || edge >= static_cast<int>(edges_.size())) {
    throw ValidationError("move edge index " + std::to_string(edge) + " out of range");
  }
  const Edge& e = edges_[static_cast<size_t>(edge)];
  if (vertex < 0 || vertex >= n_) {
    throw ValidationError("move vertex " + std::to_string(vertex) + " out of range");
  }
  if (vertex == e.u || vertex == e.v) {
    throw ValidationError("move vertex " + std::to_string(vertex) + " is an endpoint of edge " +
                          std::to_string(edge));
  }
  int offset = vertex - (vertex > e.u ? 1 : 0) - (vertex > e.v ? 1 : 0);
  return edge * per_edge_ + offset;
}

std::pair<int, int> MoveVariableIndex::pair_of(int index) const {
  if (index < 0 || index >= count_) {
    throw ValidationError("move variable index " + std::to_string(index) + " out of range");
  }
  int edge = index / per_edge_;
  int vertex = index % per_edge_;
  const Edge& e = edges_[static_cast<size_t>(edge)];
  if (vertex >= e.u) ++vertex;
  if (vertex >= e.v) ++vertex;
  return {edge, vertex};
}

Gf2System build_system(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d) {
  CrossingParityTable table = parity_table(g, f, d);
  MoveVariableIndex vars(g);

  Gf2System sys;
  sys.num_variables = vars.count();
  sys.rows.reserve(table.pairs.size());
  for (size_t i = 0; i < table.pairs.size(); ++i) {
    const auto& [a, b] = table.pairs[i];
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    sys.add_row({vars.index_of(a, eb.u), vars.index_of(a, eb.v), vars.index_of(b, ea.u),
                 vars.index_of(b, ea.v)},
                table.parity[i] != 0);
  }
  return sys;
}

Decision decide(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d) {
  require_subset_matches(g, f);
  auto t0 = std::chrono::steady_clock::now();

  Gf2System sys = build_system(g, f, d);
  Decision decision;
  decision.stats.num_equations = static_cast<int>(sys.rows.size());

  std::unordered_set<int> used;
  for (const auto& row : sys.rows) used.insert(row.support.begin(), row.support.end());
  decision.stats.num_variables_used = static_cast<int>(used.size());

  EliminationResult elim = eliminate(sys);
  decision.stats.rank = elim.rank;
  decision.yes = elim.consistent;
  if (elim.consistent) {
    MoveVariableIndex vars(g);
    for (int idx = 0; idx < static_cast<int>(elim.solution.size()); ++idx) {
      if (elim.solution[static_cast<size_t>(idx)]) {
        auto [edge, vertex] = vars.pair_of(idx);
        decision.certificate.moves.push_back({edge, vertex});
      }
    }
  }

  auto t1 = std::chrono::steady_clock::now();
  decision.stats.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return decision;
}

Decision decide(const Graph& g, const EdgeSubset& f) {
  return decide(g, f, ConvexDrawing::identity(g.vertex_count()));
}

bool verify_certificate(const Graph& g, const EdgeSubset& f, const ConvexDrawing& d,
                        const MoveSet& moves) {
  require_subset_matches(g, f);
  const int n = g.vertex_count();
  std::unordered_set<int64_t> performed;
  for (const Move& mv : moves.moves) {
    if (mv.edge < 0 || mv.edge >= g.edge_count()) {
      throw ValidationError("move edge index " + std::to_string(mv.edge) + " out of range");
    }
    if (mv.vertex < 0 || mv.vertex >= n) {
      throw ValidationError("move vertex " + std::to_string(mv.vertex) + " out of range");
    }
    const Edge& e = g.edge(mv.edge);
    if (mv.vertex == e.u || mv.vertex == e.v) {
      throw ValidationError("move vertex " + std::to_string(mv.vertex) +
                            " is an endpoint of edge " + std::to_string(mv.edge));
    }
    performed.insert(static_cast<int64_t>(mv.edge) * n + mv.vertex);
  }
  auto hit = [&](int edge, int vertex) {
    return performed.count(static_cast<int64_t>(edge) * n + vertex) ? 1 : 0;
  };

  // Independent recomputation from the drawing, not from the solver's system.
  for (const auto& [a, b] : independent_pairs(g, f)) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    int parity = convex_parity(d, ea, eb);
    parity ^= hit(a, eb.u) ^ hit(a, eb.v) ^ hit(b, ea.u) ^ hit(b, ea.v);
    if (parity) return false;
  }
  return true;
}

}  // namespace partplanar
