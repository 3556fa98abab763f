#ifndef PARTPLANAR_ORACLE_HPP
#define PARTPLANAR_ORACLE_HPP

#include <optional>
#include <vector>

#include "partplanar/graph.hpp"

namespace partplanar {

/// Thrown when an oracle call would require enumeration beyond the desk-scale
/// limits. Always an explicit refusal, never a silent truncation.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Combinatorial embedding: for each vertex, the cyclic order of its incident
/// edges.
struct RotationSystem {
  std::vector<std::vector<int>> incident;
};

/// Directed edge side: rev=0 walks u->v, rev=1 walks v->u.
struct Arc {
  int edge = 0;
  uint8_t rev = 0;
  bool operator==(const Arc&) const = default;
};

struct Face {
  std::vector<Arc> arcs;
  std::vector<int> vertices;  // sorted, unique
};

struct FaceSet {
  std::vector<Face> faces;
};

/// Faces of the embedded component: walk each directed edge side once,
/// leaving a vertex through the rotation successor of the arrival edge.
FaceSet face_trace(const Graph& component, const RotationSystem& rot);

/// Every rotation system of the connected component whose face count meets
/// Euler's formula. The first incident edge at each vertex is pinned to kill
/// rotational duplicates. Components that already violate the edge bound
/// m <= 3n-6 have no planar rotation and yield an empty list without
/// enumeration; otherwise components beyond ~8 vertices / ~12 edges are
/// refused.
std::vector<RotationSystem> enumerate_planar_rotations(const Graph& component);

/// Where a non-root skeleton component sits: inside which face of which
/// component, and which of its own faces opens toward the host.
struct ComponentPlacement {
  int host_component = -1;
  int host_face = -1;
  int outer_face = -1;
};

struct Placement {
  int root_component = -1;
  std::vector<ComponentPlacement> slots;  // per component; root entries stay -1
};

/// Anchor of the composite face assigned to a bridge; {-1,-1} marks a bridge
/// with no attachments, which is never constrained.
struct BridgeFaceAssignment {
  int component = -1;
  int face = -1;
};

struct OracleWitness {
  std::vector<Graph> components;                      // skeleton components, local ids
  std::vector<std::vector<int>> component_vertices;   // local -> global vertex
  std::vector<std::vector<int>> component_edges;      // local -> global edge
  std::vector<RotationSystem> rotations;              // per component
  Placement placement;
  std::vector<BridgeFaceAssignment> bridge_faces;     // aligned with bridges
};

struct OracleDecision {
  bool yes = false;
  std::optional<OracleWitness> witness;  // present iff yes
};

/// Exhaustive ground truth: YES iff the F-subgraph has planar embeddings of
/// all its components and a nesting of components such that every bridge's
/// attachment vertices lie on one composite face. Deterministic: reports the
/// first witness in enumeration order.
OracleDecision oracle_decide(const Graph& g, const EdgeSubset& f);

/// Re-checks a YES witness from scratch: face traces, Euler counts, placement
/// sanity and per-bridge containment.
bool verify_witness(const Graph& g, const EdgeSubset& f, const OracleWitness& w);

}  // namespace partplanar

#endif
