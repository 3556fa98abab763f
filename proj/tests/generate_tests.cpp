#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "partplanar/generate.hpp"

using namespace partplanar;

namespace {

// Sweep-free recount of the cell complex sizes, straight from the swap list:
// the sweep starts with k+1 cells and each crossing opens one; each line is
// cut into (crossings on it + 1) segments; boundary cells are two per middle
// gap plus the bottom and top cells.
struct IndependentCounts {
  int cells;
  int bounded;
  int adjacencies;
};

IndependentCounts recount(const WiringDiagram& w) {
  const int k = w.k;
  std::vector<int> line_at(static_cast<size_t>(k));
  std::iota(line_at.begin(), line_at.end(), 0);
  std::vector<int> crossings_on_line(static_cast<size_t>(k), 0);
  for (int pos : w.swaps) {
    ++crossings_on_line[static_cast<size_t>(line_at[static_cast<size_t>(pos)])];
    ++crossings_on_line[static_cast<size_t>(line_at[static_cast<size_t>(pos) + 1])];
    std::swap(line_at[static_cast<size_t>(pos)], line_at[static_cast<size_t>(pos) + 1]);
  }
  int adjacencies = 0;
  for (int c : crossings_on_line) adjacencies += c + 1;
  int cells = k + 1 + static_cast<int>(w.swaps.size());
  int boundary = k <= 1 ? 2 : 2 * k;
  return {cells, cells - boundary, adjacencies};
}

}  // namespace

TEST_CASE("validate_wiring accepts the 3-line diagram and reports violations") {
  CHECK(validate_wiring({3, {0, 1, 0}}).empty());
  CHECK(validate_wiring({3, {1, 0, 1}}).empty());

  auto too_short = validate_wiring({3, {0, 1}});
  REQUIRE(!too_short.empty());
  CHECK(too_short.front().find("expected C(k,2)") != std::string::npos);

  auto twice = validate_wiring({2, {0, 0}});
  bool mentions_twice = false;
  for (const auto& v : twice) mentions_twice = mentions_twice || v.find("more than once") != std::string::npos;
  CHECK(mentions_twice);

  auto out_of_range = validate_wiring({3, {0, 5, 0}});
  CHECK(!out_of_range.empty());

  auto never = validate_wiring({3, {0, 0, 0}});
  bool mentions_never = false;
  for (const auto& v : never) mentions_never = mentions_never || v.find("never cross") != std::string::npos;
  CHECK(mentions_never);

  CHECK(!validate_wiring({0, {}}).empty());
}

TEST_CASE("cells on the small diagrams") {
  auto k1 = cells({1, {}});
  CHECK(k1.cells.size() == 2);
  CHECK(k1.segment_adjacencies.size() == 1);
  for (const auto& cell : k1.cells) CHECK_FALSE(cell.bounded);

  auto k2 = cells({2, {0}});
  CHECK(k2.cells.size() == 4);
  CHECK(k2.segment_adjacencies.size() == 4);
  int bounded2 = 0;
  for (const auto& cell : k2.cells) bounded2 += cell.bounded;
  CHECK(bounded2 == 0);

  for (const auto& w : all_wiring_diagrams(3)) {
    auto k3 = cells(w);
    CHECK(k3.cells.size() == 7);
    CHECK(k3.segment_adjacencies.size() == 9);
    int bounded3 = 0;
    for (const auto& cell : k3.cells) bounded3 += cell.bounded;
    CHECK(bounded3 == 1);
  }
}

TEST_CASE("cell complex invariants across exhaustive small k and random large k") {
  auto check_complex = [](const WiringDiagram& w) {
    auto cc = cells(w);
    const int k = w.k;
    CHECK(static_cast<int>(cc.cells.size()) == 1 + k + k * (k - 1) / 2);
    int bounded = 0, two_arc = 0;
    for (const auto& cell : cc.cells) {
      bounded += cell.bounded;
      two_arc += cell.boundary_arc_count == 2;
      CHECK(cell.bounded == (cell.boundary_arc_count == 0));
    }
    CHECK(bounded == (k - 1) * (k - 2) / 2);
    CHECK(two_arc == 1);
    CHECK(static_cast<int>(cc.segment_adjacencies.size()) == k * k);

    auto independent = recount(w);
    CHECK(static_cast<int>(cc.cells.size()) == independent.cells);
    CHECK(bounded == independent.bounded);
    CHECK(static_cast<int>(cc.segment_adjacencies.size()) == independent.adjacencies);

    // no repeated or degenerate dual adjacency
    std::set<std::pair<int, int>> seen;
    for (const auto& adj : cc.segment_adjacencies) {
      CHECK(adj.cell_below != adj.cell_above);
      auto key = std::minmax(adj.cell_below, adj.cell_above);
      CHECK(seen.insert({key.first, key.second}).second);
    }

    // boundary order alternates line ends and cell markers, 4k entries
    CHECK(static_cast<int>(cc.boundary_order.size()) == 4 * k);
    using Kind = CellComplex::BoundaryEntry::Kind;
    int line_ends = 0;
    for (size_t i = 0; i < cc.boundary_order.size(); ++i) {
      auto kind = cc.boundary_order[i].kind;
      auto next = cc.boundary_order[(i + 1) % cc.boundary_order.size()].kind;
      CHECK(kind != next);
      line_ends += kind == Kind::LineEnd;
    }
    CHECK(line_ends == 2 * k);
  };

  for (int k = 1; k <= 5; ++k) {
    for (const auto& w : all_wiring_diagrams(k)) check_complex(w);
  }
  for (int k = 6; k <= 7; ++k) {
    for (uint64_t seed = 0; seed < 25; ++seed) check_complex(random_wiring(k, seed));
  }
}

TEST_CASE("exhaustive wiring enumeration matches the reduced word counts") {
  CHECK(all_wiring_diagrams(1).size() == 1);
  CHECK(all_wiring_diagrams(2).size() == 1);
  CHECK(all_wiring_diagrams(3).size() == 2);
  CHECK(all_wiring_diagrams(4).size() == 16);
  CHECK(all_wiring_diagrams(5).size() == 768);
  CHECK_THROWS_AS(all_wiring_diagrams(6), ValidationError);
  for (const auto& w : all_wiring_diagrams(4)) CHECK(validate_wiring(w).empty());
}

TEST_CASE("random wirings validate for a spread of k") {
  for (int k = 1; k <= 8; ++k) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      auto w = random_wiring(k, seed);
      CHECK(validate_wiring(w).empty());
    }
  }
  CHECK(format_wiring(random_wiring(4, 7)) == format_wiring(random_wiring(4, 7)));
}

TEST_CASE("wiring text form round-trips and rejects junk") {
  WiringDiagram w{3, {0, 1, 0}};
  CHECK(format_wiring(w) == "3; 0 1 0");
  auto parsed = parse_wiring("3; 0 1 0");
  CHECK(parsed.k == 3);
  CHECK(parsed.swaps == std::vector<int>{0, 1, 0});
  auto empty = parse_wiring("1;");
  CHECK(empty.k == 1);
  CHECK(empty.swaps.empty());
  CHECK_THROWS_AS(parse_wiring("3 0 1 0"), ValidationError);
  CHECK_THROWS_AS(parse_wiring("x; 0"), ValidationError);
  CHECK_THROWS_AS(parse_wiring("3; a b"), ValidationError);
}

TEST_CASE("arrangement instance for k=1 matches the construction audit") {
  auto inst = build_arrangement_instance({1, {}});
  int va = 0, vb = 0, vi = 0, apex = 0, gadget = 0;
  for (auto role : inst.vertex_roles) {
    va += role == VertexRole::LineEnd;
    vb += role == VertexRole::BoundaryCell;
    vi += role == VertexRole::InnerCell;
    apex += role == VertexRole::Apex;
    gadget += role == VertexRole::Gadget;
  }
  CHECK(va == 2);
  CHECK(vb == 2);
  CHECK(vi == 0);
  CHECK(apex == 1);
  CHECK(gadget == 32);  // 8 frame edges, 4 fresh vertices each

  int pseudoline = 0, cycle = 0, spoke = 0, dual = 0, gadget_edges = 0;
  for (auto role : inst.edge_roles) {
    pseudoline += role == EdgeRole::Pseudoline;
    cycle += role == EdgeRole::FrameCycle;
    spoke += role == EdgeRole::Spoke;
    dual += role == EdgeRole::Dual;
    gadget_edges += role == EdgeRole::Gadget;
  }
  CHECK(pseudoline == 1);
  CHECK(cycle == 4);
  CHECK(spoke == 4);
  CHECK(dual == 1);
  CHECK(gadget_edges == 8 * 14);
}

TEST_CASE("arrangement instance invariants for k up to 4") {
  for (int k = 1; k <= 4; ++k) {
    for (const auto& w : all_wiring_diagrams(k)) {
      auto inst = build_arrangement_instance(w);
      const Graph& g = inst.graph;
      REQUIRE(static_cast<int>(inst.vertex_roles.size()) == g.vertex_count());
      REQUIRE(static_cast<int>(inst.edge_roles.size()) == g.edge_count());

      // only the pseudoline chords stay out of F
      int non_f = 0;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (!inst.f.contains(e)) {
          ++non_f;
          CHECK(inst.edge_roles[static_cast<size_t>(e)] == EdgeRole::Pseudoline);
        }
      }
      CHECK(non_f == k);
      CHECK(inst.f.count() == g.edge_count() - k);

      int cycle = 0, spoke = 0;
      for (auto role : inst.edge_roles) {
        cycle += role == EdgeRole::FrameCycle;
        spoke += role == EdgeRole::Spoke;
      }
      CHECK(cycle == 4 * k);
      CHECK(spoke == 4 * k);

      // each frame edge owns one gadget; gadget interiors are disjoint
      int frame_edges = cycle + spoke;
      std::vector<std::set<int>> gadget_vertices;
      std::set<int> all_gadget_vertices;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (inst.edge_roles[static_cast<size_t>(e)] != EdgeRole::Gadget) continue;
        const Edge& ed = g.edge(e);
        for (int v : {ed.u, ed.v}) {
          if (inst.vertex_roles[static_cast<size_t>(v)] == VertexRole::Gadget) {
            all_gadget_vertices.insert(v);
          }
        }
      }
      CHECK(static_cast<int>(all_gadget_vertices.size()) == 4 * frame_edges);

      // gadget edge census: 14 per frame edge
      int gadget_edges = 0;
      for (auto role : inst.edge_roles) gadget_edges += role == EdgeRole::Gadget;
      CHECK(gadget_edges == 14 * frame_edges);

      // core audit: 2k line ends, 2k boundary cells, bounded-cell interiors, apex
      int va = 0, vb = 0, vi = 0, apex = 0;
      for (auto role : inst.vertex_roles) {
        va += role == VertexRole::LineEnd;
        vb += role == VertexRole::BoundaryCell;
        vi += role == VertexRole::InnerCell;
        apex += role == VertexRole::Apex;
      }
      CHECK(va == 2 * k);
      CHECK(vb == 2 * k);
      CHECK(vi == (k - 1) * (k - 2) / 2);
      CHECK(apex == 1);

      int dual = 0;
      for (auto role : inst.edge_roles) dual += role == EdgeRole::Dual;
      CHECK(dual == k * k);
    }
  }
}

TEST_CASE("arrangement instance k=3 headline numbers") {
  auto inst = build_arrangement_instance({3, {0, 1, 0}});
  int core = 0, gadget = 0;
  for (auto role : inst.vertex_roles) {
    if (role == VertexRole::Gadget) {
      ++gadget;
    } else {
      ++core;
    }
  }
  CHECK(core == 14);    // 6 line ends + 6 boundary cells + 1 inner cell + apex
  CHECK(gadget == 96);  // 24 frame edges
  int frame = 0, pseudoline = 0, dual = 0;
  for (auto role : inst.edge_roles) {
    frame += role == EdgeRole::FrameCycle || role == EdgeRole::Spoke;
    pseudoline += role == EdgeRole::Pseudoline;
    dual += role == EdgeRole::Dual;
  }
  CHECK(frame == 24);
  CHECK(pseudoline == 3);
  CHECK(dual == 9);
}

TEST_CASE("generate_random is deterministic and validates parameters") {
  auto a = generate_random(5, 8, 3, 7);
  auto b = generate_random(5, 8, 3, 7);
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.f.flags == b.f.flags);
  CHECK(a.graph.edge_count() == 8);
  CHECK(a.f.count() == 3);
  CHECK_THROWS_AS(generate_random(4, 7, 0, 0), ValidationError);  // m > C(4,2)
  CHECK_THROWS_AS(generate_random(4, 3, 4, 0), ValidationError);  // f > m
}

TEST_CASE("generate_k5 variants have the advertised F") {
  CHECK(generate_k5("full").f.count() == 10);
  CHECK(generate_k5("minus-one").f.count() == 9);
  auto two = generate_k5("minus-two-disjoint");
  CHECK(two.f.count() == 8);
  CHECK_FALSE(two.f.contains(two.graph.find_edge(0, 1)));
  CHECK_FALSE(two.f.contains(two.graph.find_edge(2, 3)));
  auto star = generate_k5("star");
  CHECK(star.f.count() == 4);
  for (int e = 0; e < star.graph.edge_count(); ++e) {
    CHECK(star.f.contains(e) == (star.graph.edge(e).u == 0));
  }
  CHECK_THROWS_AS(generate_k5("nope"), ValidationError);
}

TEST_CASE("generate_spanning_tree yields a spanning acyclic F") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 12);
    int max_extra = n * (n - 1) / 2 - (n - 1);
    int extra = max_extra == 0 ? 0 : static_cast<int>(rng() % static_cast<uint64_t>(max_extra + 1));
    auto inst = generate_spanning_tree(n, extra, rng());
    CHECK(inst.f.count() == n - 1);
    CHECK(inst.graph.edge_count() == n - 1 + extra);

    // F spans and is acyclic: union-find over the F edges
    std::vector<int> parent(static_cast<size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[static_cast<size_t>(v)] != v) v = parent[static_cast<size_t>(v)];
      return v;
    };
    int merges = 0;
    for (int e = 0; e < inst.graph.edge_count(); ++e) {
      if (!inst.f.contains(e)) continue;
      int a = find(inst.graph.edge(e).u);
      int b = find(inst.graph.edge(e).v);
      CHECK(a != b);  // acyclic
      parent[static_cast<size_t>(a)] = b;
      ++merges;
    }
    CHECK(merges == n - 1);  // spanning
  }
  auto fixed = generate_spanning_tree(6, 5, 1);
  CHECK(fixed.f.count() == 5);
  CHECK(fixed.graph.edge_count() == 10);
  CHECK_THROWS_AS(generate_spanning_tree(3, 99, 0), ValidationError);
}
