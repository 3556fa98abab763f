#include "partplanar/generate.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace partplanar {

namespace {

// Unbiased, platform-stable draw from [0, bound).
uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

int pairs_of(int k) { return k * (k - 1) / 2; }

// Lexicographic list of all vertex pairs on n vertices.
std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Partial Fisher-Yates: the first `take` entries of a shuffled index range.
std::vector<int> sample_indices(std::mt19937_64& rng, int range, int take) {
  std::vector<int> idx(static_cast<size_t>(range));
  for (int i = 0; i < range; ++i) idx[static_cast<size_t>(i)] = i;
  for (int i = 0; i < take; ++i) {
    int j = i + static_cast<int>(rand_below(rng, static_cast<uint64_t>(range - i)));
    std::swap(idx[static_cast<size_t>(i)], idx[static_cast<size_t>(j)]);
  }
  idx.resize(static_cast<size_t>(take));
  return idx;
}

}  // namespace

std::vector<std::string> validate_wiring(const WiringDiagram& w) {
  std::vector<std::string> violations;
  if (w.k < 1) {
    violations.push_back("k must be at least 1, got " + std::to_string(w.k));
    return violations;
  }
  const int expected = pairs_of(w.k);
  if (static_cast<int>(w.swaps.size()) != expected) {
    violations.push_back("swap count is " + std::to_string(w.swaps.size()) + ", expected C(k,2)=" +
                         std::to_string(expected));
  }
  std::vector<int> line_at(static_cast<size_t>(w.k));
  for (int i = 0; i < w.k; ++i) line_at[static_cast<size_t>(i)] = i;
  std::set<std::pair<int, int>> crossed;
  for (size_t t = 0; t < w.swaps.size(); ++t) {
    int pos = w.swaps[t];
    if (pos < 0 || pos > w.k - 2) {
      violations.push_back("swap " + std::to_string(t) + " at position " + std::to_string(pos) +
                           " out of range [0," + std::to_string(w.k - 2) + "]");
      continue;
    }
    int a = line_at[static_cast<size_t>(pos)];
    int b = line_at[static_cast<size_t>(pos) + 1];
    auto pair = std::minmax(a, b);
    if (!crossed.insert({pair.first, pair.second}).second) {
      violations.push_back("lines " + std::to_string(pair.first) + " and " +
                           std::to_string(pair.second) + " cross more than once (swap " +
                           std::to_string(t) + ")");
    }
    std::swap(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
  }
  for (int a = 0; a < w.k; ++a) {
    for (int b = a + 1; b < w.k; ++b) {
      if (!crossed.count({a, b})) {
        violations.push_back("lines " + std::to_string(a) + " and " + std::to_string(b) +
                             " never cross");
      }
    }
  }
  return violations;
}

CellComplex cells(const WiringDiagram& w) {
  auto violations = validate_wiring(w);
  if (!violations.empty()) {
    throw ValidationError("invalid wiring diagram: " + violations.front());
  }
  const int k = w.k;
  CellComplex cc;

  // Sweep state: current cell per vertical gap (gap g sits above row g-1),
  // current line per row, and per middle gap the cells of its run in order.
  std::vector<int> cell_in_gap(static_cast<size_t>(k) + 1);
  std::vector<std::vector<int>> run_of_gap(static_cast<size_t>(k) + 1);
  for (int g = 0; g <= k; ++g) {
    cell_in_gap[static_cast<size_t>(g)] = g;
    run_of_gap[static_cast<size_t>(g)].push_back(g);
  }
  std::vector<int> line_at(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) line_at[static_cast<size_t>(i)] = i;
  int next_cell = k + 1;

  for (int pos : w.swaps) {
    int a = line_at[static_cast<size_t>(pos)];
    int b = line_at[static_cast<size_t>(pos) + 1];
    // The crossing ends one segment of each line; both adjacencies are
    // constant over the ended segments.
    cc.segment_adjacencies.push_back(
        {cell_in_gap[static_cast<size_t>(pos)], cell_in_gap[static_cast<size_t>(pos) + 1], a});
    cc.segment_adjacencies.push_back(
        {cell_in_gap[static_cast<size_t>(pos) + 1], cell_in_gap[static_cast<size_t>(pos) + 2], b});
    int fresh = next_cell++;
    cell_in_gap[static_cast<size_t>(pos) + 1] = fresh;
    run_of_gap[static_cast<size_t>(pos) + 1].push_back(fresh);
    std::swap(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
  }
  for (int row = 0; row < k; ++row) {
    cc.segment_adjacencies.push_back({cell_in_gap[static_cast<size_t>(row)],
                                      cell_in_gap[static_cast<size_t>(row) + 1],
                                      line_at[static_cast<size_t>(row)]});
  }

  cc.cells.resize(static_cast<size_t>(next_cell));
  for (int id = 0; id < next_cell; ++id) cc.cells[static_cast<size_t>(id)].id = id;
  cc.cells[0].boundary_arc_count = 1;                          // below all lines: the bottom arc
  cc.cells[static_cast<size_t>(k)].boundary_arc_count = 2;     // above all lines: both top arcs
  for (int g = 1; g <= k - 1; ++g) {
    const auto& run = run_of_gap[static_cast<size_t>(g)];
    for (size_t i = 0; i < run.size(); ++i) {
      int arcs = 0;
      if (i == 0) ++arcs;
      if (i + 1 == run.size()) ++arcs;
      cc.cells[static_cast<size_t>(run[i])].boundary_arc_count = arcs;
    }
  }
  for (auto& cell : cc.cells) cell.bounded = cell.boundary_arc_count == 0;

  // Boundary walk: down the left side, around the bottom, up the right side.
  using Entry = CellComplex::BoundaryEntry;
  cc.boundary_order.push_back({Entry::Kind::CellMarker, -1, 0, k});
  for (int row = k - 1; row >= 0; --row) {
    cc.boundary_order.push_back({Entry::Kind::LineEnd, row, 0, -1});  // initial line == row
    cc.boundary_order.push_back({Entry::Kind::CellMarker, -1, 0, run_of_gap[static_cast<size_t>(row)].front()});
  }
  for (int row = 0; row < k; ++row) {
    cc.boundary_order.push_back({Entry::Kind::LineEnd, line_at[static_cast<size_t>(row)], 1, -1});
    if (row < k - 1) {
      cc.boundary_order.push_back(
          {Entry::Kind::CellMarker, -1, 0, run_of_gap[static_cast<size_t>(row) + 1].back()});
    }
  }
  return cc;
}

ArrangementInstance build_arrangement_instance(const WiringDiagram& w) {
  CellComplex cc = cells(w);
  const int k = w.k;

  std::vector<VertexRole> vroles;
  auto new_vertex = [&](VertexRole role) {
    vroles.push_back(role);
    return static_cast<int>(vroles.size()) - 1;
  };

  std::vector<std::array<int, 2>> va(static_cast<size_t>(k));
  for (int line = 0; line < k; ++line) {
    va[static_cast<size_t>(line)][0] = new_vertex(VertexRole::LineEnd);
    va[static_cast<size_t>(line)][1] = new_vertex(VertexRole::LineEnd);
  }
  std::map<int, int> rep;  // cell id -> representative vertex
  for (const auto& cell : cc.cells) {
    if (cell.boundary_arc_count > 0) rep[cell.id] = new_vertex(VertexRole::BoundaryCell);
  }
  for (const auto& cell : cc.cells) {
    if (cell.bounded) rep[cell.id] = new_vertex(VertexRole::InnerCell);
  }
  int apex = new_vertex(VertexRole::Apex);

  std::vector<std::pair<int, int>> edges;
  std::vector<uint8_t> f_flags;
  std::vector<EdgeRole> eroles;
  auto add_edge = [&](int u, int v, EdgeRole role, bool in_f) {
    edges.emplace_back(u, v);
    f_flags.push_back(in_f ? 1 : 0);
    eroles.push_back(role);
  };

  for (int line = 0; line < k; ++line) {
    add_edge(va[static_cast<size_t>(line)][0], va[static_cast<size_t>(line)][1],
             EdgeRole::Pseudoline, false);
  }

  auto boundary_vertex = [&](const CellComplex::BoundaryEntry& e) {
    if (e.kind == CellComplex::BoundaryEntry::Kind::LineEnd) {
      return va[static_cast<size_t>(e.line)][static_cast<size_t>(e.side)];
    }
    return rep.at(e.cell);
  };
  std::vector<std::pair<int, int>> frame_edges;
  const size_t blen = cc.boundary_order.size();
  for (size_t i = 0; i < blen; ++i) {
    int u = boundary_vertex(cc.boundary_order[i]);
    int v = boundary_vertex(cc.boundary_order[(i + 1) % blen]);
    add_edge(u, v, EdgeRole::FrameCycle, true);
    frame_edges.emplace_back(u, v);
  }
  for (const auto& entry : cc.boundary_order) {
    int v = boundary_vertex(entry);
    add_edge(apex, v, EdgeRole::Spoke, true);
    frame_edges.emplace_back(apex, v);
  }
  for (const auto& adj : cc.segment_adjacencies) {
    add_edge(rep.at(adj.cell_below), rep.at(adj.cell_above), EdgeRole::Dual, true);
  }
  // Weld a fresh K6 onto each frame edge: 4 new vertices, 14 new edges.
  for (const auto& [u, v] : frame_edges) {
    std::array<int, 6> six = {u, v, 0, 0, 0, 0};
    for (int i = 2; i < 6; ++i) six[static_cast<size_t>(i)] = new_vertex(VertexRole::Gadget);
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        if (i == 0 && j == 1) continue;  // the shared frame edge
        add_edge(six[static_cast<size_t>(i)], six[static_cast<size_t>(j)], EdgeRole::Gadget, true);
      }
    }
  }

  auto [graph, f] = build_graph(static_cast<int>(vroles.size()), edges, f_flags);
  return ArrangementInstance{std::move(graph), std::move(f), std::move(vroles), std::move(eroles)};
}

WiringDiagram parse_wiring(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) {
    throw ValidationError("wiring diagram must look like 'k; i1 i2 ...': missing ';'");
  }
  WiringDiagram w;
  try {
    size_t used = 0;
    w.k = std::stoi(text.substr(0, semi), &used);
    while (used < semi) {
      if (!std::isspace(static_cast<unsigned char>(text[used]))) {
        throw std::invalid_argument("trailing");
      }
      ++used;
    }
  } catch (const std::exception&) {
    throw ValidationError("wiring diagram has a malformed line count: '" + text.substr(0, semi) +
                          "'");
  }
  std::istringstream rest(text.substr(semi + 1));
  std::string token;
  while (rest >> token) {
    try {
      size_t used = 0;
      int pos = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("trailing");
      w.swaps.push_back(pos);
    } catch (const std::exception&) {
      throw ValidationError("wiring diagram has a malformed swap position: '" + token + "'");
    }
  }
  return w;
}

std::string format_wiring(const WiringDiagram& w) {
  std::string out = std::to_string(w.k) + ";";
  for (int pos : w.swaps) out += " " + std::to_string(pos);
  return out;
}

WiringDiagram random_wiring(int k, uint64_t seed) {
  if (k < 1) throw ValidationError("k must be at least 1, got " + std::to_string(k));
  std::mt19937_64 rng(seed);
  WiringDiagram w;
  w.k = k;
  std::vector<int> line_at(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) line_at[static_cast<size_t>(i)] = i;
  std::set<std::pair<int, int>> crossed;
  const int total = pairs_of(k);
  while (static_cast<int>(w.swaps.size()) < total) {
    std::vector<int> eligible;
    for (int pos = 0; pos + 1 < k; ++pos) {
      auto pair = std::minmax(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
      if (!crossed.count({pair.first, pair.second})) eligible.push_back(pos);
    }
    int pos = eligible[static_cast<size_t>(rand_below(rng, eligible.size()))];
    auto pair = std::minmax(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
    crossed.insert({pair.first, pair.second});
    std::swap(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
    w.swaps.push_back(pos);
  }
  return w;
}

std::vector<WiringDiagram> all_wiring_diagrams(int k) {
  if (k < 1 || k > 5) {
    throw ValidationError("exhaustive wiring enumeration supports 1 <= k <= 5, got " +
                          std::to_string(k));
  }
  std::vector<WiringDiagram> out;
  std::vector<int> line_at(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) line_at[static_cast<size_t>(i)] = i;
  std::set<std::pair<int, int>> crossed;
  std::vector<int> prefix;
  const int total = pairs_of(k);

  auto dfs = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == total) {
      out.push_back(WiringDiagram{k, prefix});
      return;
    }
    for (int pos = 0; pos + 1 < k; ++pos) {
      auto pair = std::minmax(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
      if (crossed.count({pair.first, pair.second})) continue;
      crossed.insert({pair.first, pair.second});
      std::swap(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
      prefix.push_back(pos);
      self(self);
      prefix.pop_back();
      std::swap(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
      crossed.erase({pair.first, pair.second});
    }
  };
  dfs(dfs);
  return out;
}

GeneratedInstance generate_random(int n, int m, int f_size, uint64_t seed) {
  if (n < 0) throw ValidationError("n must be nonnegative");
  const int max_edges = pairs_of(n);
  if (m < 0 || m > max_edges) {
    throw ValidationError("m=" + std::to_string(m) + " infeasible: 0..C(n,2)=" +
                          std::to_string(max_edges));
  }
  if (f_size < 0 || f_size > m) {
    throw ValidationError("f=" + std::to_string(f_size) + " infeasible: 0..m=" + std::to_string(m));
  }
  std::mt19937_64 rng(seed);
  auto pairs = all_pairs(n);
  auto chosen = sample_indices(rng, max_edges, m);
  std::sort(chosen.begin(), chosen.end());
  std::vector<std::pair<int, int>> edges;
  for (int idx : chosen) edges.push_back(pairs[static_cast<size_t>(idx)]);
  std::vector<uint8_t> flags(static_cast<size_t>(m), 0);
  for (int idx : sample_indices(rng, m, f_size)) flags[static_cast<size_t>(idx)] = 1;
  auto [graph, f] = build_graph(n, edges, flags);
  return {std::move(graph), std::move(f),
          "random(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ",f=" +
              std::to_string(f_size) + ",seed=" + std::to_string(seed) + ")"};
}

GeneratedInstance generate_k5(const std::string& variant) {
  auto edges = all_pairs(5);
  std::vector<uint8_t> flags(edges.size(), 1);
  auto drop = [&](int u, int v) {
    for (size_t i = 0; i < edges.size(); ++i) {
      if (edges[i] == std::pair<int, int>{u, v}) flags[i] = 0;
    }
  };
  if (variant == "full") {
  } else if (variant == "minus-one") {
    drop(0, 1);
  } else if (variant == "minus-two-disjoint") {
    drop(0, 1);
    drop(2, 3);
  } else if (variant == "star") {
    flags.assign(edges.size(), 0);
    for (size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].first == 0) flags[i] = 1;
    }
  } else {
    throw ValidationError("unknown k5 variant '" + variant +
                          "' (full, minus-one, minus-two-disjoint, star)");
  }
  auto [graph, f] = build_graph(5, edges, flags);
  return {std::move(graph), std::move(f), "k5-" + variant};
}

GeneratedInstance generate_kuratowski(const std::string& which) {
  if (which == "k5") {
    auto inst = generate_k5("full");
    inst.name = "k5";
    return inst;
  }
  if (which == "k33") {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 3; ++u) {
      for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
    }
    auto [graph, f] = build_graph(6, edges, std::vector<uint8_t>(edges.size(), 1));
    return {std::move(graph), std::move(f), "k33"};
  }
  throw ValidationError("unknown kuratowski graph '" + which + "' (k5, k33)");
}

GeneratedInstance generate_spanning_tree(int n, int extra, uint64_t seed) {
  if (n < 1) throw ValidationError("spanning tree generation needs n >= 1");
  const int max_extra = pairs_of(n) - (n - 1);
  if (extra < 0 || extra > max_extra) {
    throw ValidationError("extra=" + std::to_string(extra) + " infeasible: 0.." +
                          std::to_string(max_extra));
  }
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> tree;
  if (n >= 2) {
    // Pruefer decoding: uniform over labeled trees.
    std::vector<int> code(static_cast<size_t>(n - 2));
    for (auto& c : code) c = static_cast<int>(rand_below(rng, static_cast<uint64_t>(n)));
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int c : code) ++degree[static_cast<size_t>(c)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    }
    for (int c : code) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      tree.insert(std::minmax(leaf, c));
      if (--degree[static_cast<size_t>(c)] == 1) leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    tree.insert(std::minmax(a, b));
  }
  std::vector<std::pair<int, int>> non_tree;
  for (const auto& pair : all_pairs(n)) {
    if (!tree.count(pair)) non_tree.push_back(pair);
  }
  std::set<std::pair<int, int>> extras;
  for (int idx : sample_indices(rng, static_cast<int>(non_tree.size()), extra)) {
    extras.insert(non_tree[static_cast<size_t>(idx)]);
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<uint8_t> flags;
  for (const auto& pair : all_pairs(n)) {
    if (tree.count(pair)) {
      edges.push_back(pair);
      flags.push_back(1);
    } else if (extras.count(pair)) {
      edges.push_back(pair);
      flags.push_back(0);
    }
  }
  auto [graph, f] = build_graph(n, edges, flags);
  return {std::move(graph), std::move(f),
          "spanning-tree(n=" + std::to_string(n) + ",extra=" + std::to_string(extra) + ",seed=" +
              std::to_string(seed) + ")"};
}

GeneratedInstance generate_arrangement(const WiringDiagram& w) {
  ArrangementInstance inst = build_arrangement_instance(w);
  return {std::move(inst.graph), std::move(inst.f), "arrangement(" + format_wiring(w) + ")"};
}

}  // namespace partplanar
