#include "partplanar/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace partplanar {

namespace {

constexpr int kMaxSkeletonVertices = 8;
constexpr int kMaxFixedEdges = 12;
constexpr int kMaxComponentVertices = 8;
constexpr int kMaxComponentEdges = 12;

void validate_rotation(const Graph& component, const RotationSystem& rot) {
  auto inc = component.incidence();
  if (rot.incident.size() != inc.size()) {
    throw ValidationError("rotation system covers " + std::to_string(rot.incident.size()) +
                          " vertices, component has " + std::to_string(inc.size()));
  }
  for (size_t v = 0; v < inc.size(); ++v) {
    std::vector<int> sorted = rot.incident[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != inc[v]) {
      throw ValidationError("rotation at vertex " + std::to_string(v) +
                            " is not a permutation of its incident edges");
    }
  }
}

// Mixed-radix counter; fn(idx) returning true stops the sweep.
template <typename Fn>
bool for_each_combo(const std::vector<int>& dims, Fn&& fn) {
  for (int d : dims) {
    if (d <= 0) return false;
  }
  std::vector<int> idx(dims.size(), 0);
  for (;;) {
    if (fn(idx)) return true;
    int i = static_cast<int>(dims.size()) - 1;
    while (i >= 0) {
      if (++idx[static_cast<size_t>(i)] < dims[static_cast<size_t>(i)]) break;
      idx[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) return false;
  }
}

struct SkeletonComponents {
  std::vector<Graph> graphs;
  std::vector<std::vector<int>> vertex_maps;  // local -> global vertex
  std::vector<std::vector<int>> edge_maps;    // local -> global edge index
};

// Connected components of the F-subgraph on the skeleton vertices, ordered by
// smallest global vertex; local ids follow ascending global ids.
SkeletonComponents split_skeleton(const Graph& g, const EdgeSubset& f) {
  SkeletonComponents sc;
  const int n = g.vertex_count();
  std::vector<std::vector<int>> f_adj(static_cast<size_t>(n));
  std::vector<std::vector<int>> f_inc(static_cast<size_t>(n));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!f.contains(e)) continue;
    const Edge& ed = g.edge(e);
    f_adj[static_cast<size_t>(ed.u)].push_back(ed.v);
    f_adj[static_cast<size_t>(ed.v)].push_back(ed.u);
    f_inc[static_cast<size_t>(ed.u)].push_back(e);
    f_inc[static_cast<size_t>(ed.v)].push_back(e);
  }
  std::vector<uint8_t> done(static_cast<size_t>(n), 0);
  for (int start = 0; start < n; ++start) {
    if (done[static_cast<size_t>(start)] || f_inc[static_cast<size_t>(start)].empty()) continue;
    std::vector<int> verts;
    std::set<int> edges;
    std::vector<int> stack = {start};
    done[static_cast<size_t>(start)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      verts.push_back(v);
      for (int e : f_inc[static_cast<size_t>(v)]) edges.insert(e);
      for (int w : f_adj[static_cast<size_t>(v)]) {
        if (!done[static_cast<size_t>(w)]) {
          done[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    std::vector<int> local_of(static_cast<size_t>(n), -1);
    for (size_t i = 0; i < verts.size(); ++i) local_of[static_cast<size_t>(verts[i])] = static_cast<int>(i);
    std::vector<Edge> local_edges;
    std::vector<int> edge_map;
    for (int e : edges) {
      const Edge& ed = g.edge(e);
      local_edges.push_back({local_of[static_cast<size_t>(ed.u)], local_of[static_cast<size_t>(ed.v)]});
      edge_map.push_back(e);
    }
    sc.graphs.emplace_back(static_cast<int>(verts.size()), std::move(local_edges));
    sc.vertex_maps.push_back(std::move(verts));
    sc.edge_maps.push_back(std::move(edge_map));
  }
  return sc;
}

// Region anchor: one face of one component, standing for the composite face
// it borders. A placed component's chosen outer face merges into its host's
// anchor, so only root faces and non-outer faces anchor regions.
struct Anchor {
  int component;
  int face;
};

}  // namespace

FaceSet face_trace(const Graph& component, const RotationSystem& rot) {
  validate_rotation(component, rot);
  const int m = component.edge_count();
  FaceSet fs;
  if (m == 0) {
    // Edgeless convention: one face holding every vertex.
    Face face;
    for (int v = 0; v < component.vertex_count(); ++v) face.vertices.push_back(v);
    fs.faces.push_back(std::move(face));
    return fs;
  }
  auto position_in = [&](int vertex, int edge) {
    const auto& list = rot.incident[static_cast<size_t>(vertex)];
    for (size_t i = 0; i < list.size(); ++i) {
      if (list[i] == edge) return static_cast<int>(i);
    }
    throw ValidationError("edge missing from rotation list");
  };
  std::vector<uint8_t> visited(static_cast<size_t>(2 * m), 0);
  for (int start = 0; start < 2 * m; ++start) {
    if (visited[static_cast<size_t>(start)]) continue;
    Face face;
    int cur = start;
    do {
      visited[static_cast<size_t>(cur)] = 1;
      int edge = cur / 2;
      uint8_t rev = static_cast<uint8_t>(cur % 2);
      face.arcs.push_back({edge, rev});
      const Edge& ed = component.edge(edge);
      int tail = rev ? ed.v : ed.u;
      int head = rev ? ed.u : ed.v;
      face.vertices.push_back(tail);
      const auto& list = rot.incident[static_cast<size_t>(head)];
      int i = position_in(head, edge);
      int succ = list[(static_cast<size_t>(i) + 1) % list.size()];
      uint8_t nrev = component.edge(succ).u == head ? 0 : 1;
      cur = succ * 2 + nrev;
    } while (cur != start);
    std::sort(face.vertices.begin(), face.vertices.end());
    face.vertices.erase(std::unique(face.vertices.begin(), face.vertices.end()),
                        face.vertices.end());
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

std::vector<RotationSystem> enumerate_planar_rotations(const Graph& component) {
  const int n = component.vertex_count();
  const int m = component.edge_count();
  if (n == 0) throw ValidationError("component must be nonempty");
  {
    auto adj = component.adjacency();
    std::vector<uint8_t> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++reached;
      for (int w : adj[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    if (reached != n) throw ValidationError("component must be connected");
  }
  // Planar graphs satisfy m <= 3n-6: beyond it no rotation can pass the face
  // count check, so skip the enumeration outright.
  if (n >= 3 && m > 3 * n - 6) return {};
  if (n > kMaxComponentVertices || m > kMaxComponentEdges) {
    throw SizeLimitError("refusing to enumerate embeddings of a component with " +
                         std::to_string(n) + " vertices and " + std::to_string(m) +
                         " edges (limits: " + std::to_string(kMaxComponentVertices) + ", " +
                         std::to_string(kMaxComponentEdges) + ")");
  }

  const int target_faces = 2 - n + m;
  auto inc = component.incidence();
  RotationSystem rot;
  rot.incident = inc;  // each list sorted: lexicographically first candidate
  std::vector<RotationSystem> planar;
  for (;;) {
    FaceSet fs = face_trace(component, rot);
    if (static_cast<int>(fs.faces.size()) == target_faces) planar.push_back(rot);
    // Advance: next permutation of the tail of some vertex list, first edge
    // pinned to quotient out rotations of the cyclic order.
    int v = n - 1;
    for (; v >= 0; --v) {
      auto& list = rot.incident[static_cast<size_t>(v)];
      if (list.size() >= 3 && std::next_permutation(list.begin() + 1, list.end())) break;
      list = inc[static_cast<size_t>(v)];
    }
    if (v < 0) break;
  }
  return planar;
}

OracleDecision oracle_decide(const Graph& g, const EdgeSubset& f) {
  require_subset_matches(g, f);
  BridgeDecomposition bd = bridge_decomposition(g, f);

  if (f.count() == 0) {
    OracleWitness w;
    w.bridge_faces.assign(bd.bridges.size(), BridgeFaceAssignment{});
    return {true, std::move(w)};
  }

  SkeletonComponents sc = split_skeleton(g, f);
  const int r = static_cast<int>(sc.graphs.size());

  for (const Graph& comp : sc.graphs) {
    if (comp.vertex_count() >= 3 && comp.edge_count() > 3 * comp.vertex_count() - 6) {
      return {false, std::nullopt};
    }
  }

  if (static_cast<int>(bd.skeleton_vertices.size()) > kMaxSkeletonVertices) {
    throw SizeLimitError("skeleton has " + std::to_string(bd.skeleton_vertices.size()) +
                         " vertices, oracle limit is " + std::to_string(kMaxSkeletonVertices));
  }
  if (f.count() > kMaxFixedEdges) {
    throw SizeLimitError("instance has " + std::to_string(f.count()) +
                         " crossing-free edges, oracle limit is " + std::to_string(kMaxFixedEdges));
  }

  // Compact bit per skeleton vertex.
  const std::vector<int>& skeleton = bd.skeleton_vertices;
  auto compact_bit = [&](int global) {
    auto it = std::lower_bound(skeleton.begin(), skeleton.end(), global);
    return static_cast<uint32_t>(1u << (it - skeleton.begin()));
  };

  std::vector<std::vector<RotationSystem>> rotations(static_cast<size_t>(r));
  std::vector<std::vector<std::vector<uint32_t>>> face_masks(static_cast<size_t>(r));
  for (int c = 0; c < r; ++c) {
    rotations[static_cast<size_t>(c)] = enumerate_planar_rotations(sc.graphs[static_cast<size_t>(c)]);
    if (rotations[static_cast<size_t>(c)].empty()) return {false, std::nullopt};
    for (const RotationSystem& rot : rotations[static_cast<size_t>(c)]) {
      FaceSet fs = face_trace(sc.graphs[static_cast<size_t>(c)], rot);
      std::vector<uint32_t> masks;
      masks.reserve(fs.faces.size());
      for (const Face& face : fs.faces) {
        uint32_t mask = 0;
        for (int local : face.vertices) {
          mask |= compact_bit(sc.vertex_maps[static_cast<size_t>(c)][static_cast<size_t>(local)]);
        }
        masks.push_back(mask);
      }
      face_masks[static_cast<size_t>(c)].push_back(std::move(masks));
    }
  }

  std::vector<uint32_t> bridge_mask;
  bridge_mask.reserve(bd.bridges.size());
  for (const Bridge& b : bd.bridges) {
    uint32_t mask = 0;
    for (int v : b.attachment_vertices) mask |= compact_bit(v);
    bridge_mask.push_back(mask);
  }
  std::vector<int> constrained;  // bridges needing two or more attachments together
  for (size_t i = 0; i < bridge_mask.size(); ++i) {
    if (std::popcount(bridge_mask[i]) >= 2) constrained.push_back(static_cast<int>(i));
  }

  OracleDecision decision;
  for (int root = 0; root < r && !decision.yes; ++root) {
    std::vector<int> rot_dims(static_cast<size_t>(r));
    for (int c = 0; c < r; ++c) {
      rot_dims[static_cast<size_t>(c)] = static_cast<int>(rotations[static_cast<size_t>(c)].size());
    }
    for_each_combo(rot_dims, [&](const std::vector<int>& rot_idx) {
      std::vector<int> others;
      for (int c = 0; c < r; ++c) {
        if (c != root) others.push_back(c);
      }
      std::vector<int> outer_dims;
      for (int c : others) {
        outer_dims.push_back(
            static_cast<int>(face_masks[static_cast<size_t>(c)][static_cast<size_t>(rot_idx[static_cast<size_t>(c)])].size()));
      }
      return for_each_combo(outer_dims, [&](const std::vector<int>& outer_idx) {
        std::vector<int> outer_of(static_cast<size_t>(r), -1);
        for (size_t i = 0; i < others.size(); ++i) {
          outer_of[static_cast<size_t>(others[i])] = outer_idx[i];
        }
        // Regions: every root face; every non-outer face of the others.
        std::vector<Anchor> anchors;
        for (int c = 0; c < r; ++c) {
          const auto& masks =
              face_masks[static_cast<size_t>(c)][static_cast<size_t>(rot_idx[static_cast<size_t>(c)])];
          for (int fi = 0; fi < static_cast<int>(masks.size()); ++fi) {
            if (c != root && fi == outer_of[static_cast<size_t>(c)]) continue;
            anchors.push_back({c, fi});
          }
        }
        std::vector<std::vector<int>> host_candidates(others.size());
        for (size_t i = 0; i < others.size(); ++i) {
          for (int a = 0; a < static_cast<int>(anchors.size()); ++a) {
            if (anchors[static_cast<size_t>(a)].component != others[i]) {
              host_candidates[i].push_back(a);
            }
          }
        }
        std::vector<int> host_dims;
        for (const auto& cands : host_candidates) host_dims.push_back(static_cast<int>(cands.size()));
        return for_each_combo(host_dims, [&](const std::vector<int>& host_idx) {
          std::vector<int> parent_comp(static_cast<size_t>(r), -1);
          std::vector<int> anchor_of(static_cast<size_t>(r), -1);
          for (size_t i = 0; i < others.size(); ++i) {
            int a = host_candidates[i][static_cast<size_t>(host_idx[i])];
            anchor_of[static_cast<size_t>(others[i])] = a;
            parent_comp[static_cast<size_t>(others[i])] = anchors[static_cast<size_t>(a)].component;
          }
          for (int c : others) {  // hosting must reach the root without cycles
            int cur = c;
            int steps = 0;
            while (cur != root) {
              cur = parent_comp[static_cast<size_t>(cur)];
              if (++steps > r) return false;
            }
          }
          std::vector<uint32_t> region(anchors.size());
          for (size_t a = 0; a < anchors.size(); ++a) {
            region[a] = face_masks[static_cast<size_t>(anchors[a].component)]
                                  [static_cast<size_t>(rot_idx[static_cast<size_t>(anchors[a].component)])]
                                  [static_cast<size_t>(anchors[a].face)];
          }
          for (int c : others) {
            region[static_cast<size_t>(anchor_of[static_cast<size_t>(c)])] |=
                face_masks[static_cast<size_t>(c)][static_cast<size_t>(rot_idx[static_cast<size_t>(c)])]
                          [static_cast<size_t>(outer_of[static_cast<size_t>(c)])];
          }
          for (int bi : constrained) {
            uint32_t need = bridge_mask[static_cast<size_t>(bi)];
            bool housed = false;
            for (uint32_t mask : region) {
              if ((mask & need) == need) {
                housed = true;
                break;
              }
            }
            if (!housed) return false;
          }
          // Found one: freeze the witness.
          OracleWitness w;
          w.components = sc.graphs;
          w.component_vertices = sc.vertex_maps;
          w.component_edges = sc.edge_maps;
          for (int c = 0; c < r; ++c) {
            w.rotations.push_back(
                rotations[static_cast<size_t>(c)][static_cast<size_t>(rot_idx[static_cast<size_t>(c)])]);
          }
          w.placement.root_component = root;
          w.placement.slots.assign(static_cast<size_t>(r), ComponentPlacement{});
          for (int c : others) {
            const Anchor& a = anchors[static_cast<size_t>(anchor_of[static_cast<size_t>(c)])];
            w.placement.slots[static_cast<size_t>(c)] = {a.component, a.face,
                                                         outer_of[static_cast<size_t>(c)]};
          }
          w.bridge_faces.assign(bd.bridges.size(), BridgeFaceAssignment{});
          for (size_t bi = 0; bi < bd.bridges.size(); ++bi) {
            uint32_t need = bridge_mask[bi];
            if (need == 0) continue;
            for (size_t a = 0; a < anchors.size(); ++a) {
              if ((region[a] & need) == need) {
                w.bridge_faces[bi] = {anchors[a].component, anchors[a].face};
                break;
              }
            }
          }
          decision.yes = true;
          decision.witness = std::move(w);
          return true;
        });
      });
    });
  }
  return decision;
}

bool verify_witness(const Graph& g, const EdgeSubset& f, const OracleWitness& w) {
  require_subset_matches(g, f);
  try {
    BridgeDecomposition bd = bridge_decomposition(g, f);
    if (f.count() == 0) return w.components.empty();

    SkeletonComponents sc = split_skeleton(g, f);
    const int r = static_cast<int>(sc.graphs.size());
    if (static_cast<int>(w.components.size()) != r || static_cast<int>(w.rotations.size()) != r ||
        w.component_vertices != sc.vertex_maps || w.component_edges != sc.edge_maps) {
      return false;
    }
    for (int c = 0; c < r; ++c) {
      if (w.components[static_cast<size_t>(c)].vertex_count() !=
              sc.graphs[static_cast<size_t>(c)].vertex_count() ||
          w.components[static_cast<size_t>(c)].edges() != sc.graphs[static_cast<size_t>(c)].edges()) {
        return false;
      }
    }

    std::vector<FaceSet> face_sets;
    for (int c = 0; c < r; ++c) {
      const Graph& comp = w.components[static_cast<size_t>(c)];
      FaceSet fs = face_trace(comp, w.rotations[static_cast<size_t>(c)]);
      if (static_cast<int>(fs.faces.size()) != 2 - comp.vertex_count() + comp.edge_count()) {
        return false;
      }
      face_sets.push_back(std::move(fs));
    }

    const int root = w.placement.root_component;
    if (root < 0 || root >= r || static_cast<int>(w.placement.slots.size()) != r) return false;
    for (int c = 0; c < r; ++c) {
      const ComponentPlacement& p = w.placement.slots[static_cast<size_t>(c)];
      if (c == root) {
        if (p.host_component != -1 || p.host_face != -1 || p.outer_face != -1) return false;
        continue;
      }
      if (p.host_component < 0 || p.host_component >= r || p.host_component == c) return false;
      if (p.outer_face < 0 ||
          p.outer_face >= static_cast<int>(face_sets[static_cast<size_t>(c)].faces.size())) {
        return false;
      }
      if (p.host_face < 0 ||
          p.host_face >= static_cast<int>(face_sets[static_cast<size_t>(p.host_component)].faces.size())) {
        return false;
      }
      if (p.host_component != root &&
          p.host_face == w.placement.slots[static_cast<size_t>(p.host_component)].outer_face) {
        return false;  // the host's outer face is not a region of the host
      }
    }
    for (int c = 0; c < r; ++c) {
      if (c == root) continue;
      int cur = c;
      int steps = 0;
      while (cur != root) {
        cur = w.placement.slots[static_cast<size_t>(cur)].host_component;
        if (++steps > r) return false;
      }
    }

    auto global_face_vertices = [&](int c, int fi) {
      std::set<int> out;
      for (int local : face_sets[static_cast<size_t>(c)].faces[static_cast<size_t>(fi)].vertices) {
        out.insert(sc.vertex_maps[static_cast<size_t>(c)][static_cast<size_t>(local)]);
      }
      return out;
    };
    auto is_region = [&](int c, int fi) {
      if (fi < 0 || c < 0 || c >= r) return false;
      if (fi >= static_cast<int>(face_sets[static_cast<size_t>(c)].faces.size())) return false;
      return c == root || fi != w.placement.slots[static_cast<size_t>(c)].outer_face;
    };
    auto region_vertices = [&](int c, int fi) {
      std::set<int> verts = global_face_vertices(c, fi);
      for (int other = 0; other < r; ++other) {
        if (other == root) continue;
        const ComponentPlacement& p = w.placement.slots[static_cast<size_t>(other)];
        if (p.host_component == c && p.host_face == fi) {
          auto outer = global_face_vertices(other, p.outer_face);
          verts.insert(outer.begin(), outer.end());
        }
      }
      return verts;
    };

    if (w.bridge_faces.size() != bd.bridges.size()) return false;
    for (size_t bi = 0; bi < bd.bridges.size(); ++bi) {
      const Bridge& bridge = bd.bridges[bi];
      const BridgeFaceAssignment& bf = w.bridge_faces[bi];
      if (bf.component == -1 && bf.face == -1) {
        if (!bridge.attachment_vertices.empty()) return false;
        continue;
      }
      if (!is_region(bf.component, bf.face)) return false;
      auto verts = region_vertices(bf.component, bf.face);
      for (int v : bridge.attachment_vertices) {
        if (!verts.count(v)) return false;
      }
    }
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace partplanar
