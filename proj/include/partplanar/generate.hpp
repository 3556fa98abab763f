#ifndef PARTPLANAR_GENERATE_HPP
#define PARTPLANAR_GENERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "partplanar/graph.hpp"

namespace partplanar {

/// Simple pseudoline arrangement as a wiring diagram: k lines labeled by
/// initial bottom-to-top position, and a left-to-right sequence of adjacent
/// transpositions, each given by the lower of the two swapped positions.
struct WiringDiagram {
  int k = 0;
  std::vector<int> swaps;
};

/// Checks the wiring invariants; returns every violation found (empty = ok):
/// swap count C(k,2), positions in range, each pair of lines crossing exactly
/// once.
std::vector<std::string> validate_wiring(const WiringDiagram& w);

/// Faces of the arrangement clipped to a region containing all crossings,
/// with segment adjacencies and the cyclic boundary structure.
struct CellComplex {
  struct Cell {
    int id = 0;
    bool bounded = false;        // touches no boundary arc
    int boundary_arc_count = 0;  // 0, 1, or 2; exactly one cell has 2
  };
  struct SegmentAdjacency {
    int cell_below = 0;
    int cell_above = 0;
    int line = 0;
  };
  struct BoundaryEntry {
    enum class Kind { LineEnd, CellMarker } kind = Kind::CellMarker;
    int line = -1;  // LineEnd: which pseudoline
    int side = 0;   // LineEnd: 0 = left entry, 1 = right exit
    int cell = -1;  // CellMarker: which boundary cell
  };

  std::vector<Cell> cells;
  std::vector<SegmentAdjacency> segment_adjacencies;  // one per pseudoline segment
  std::vector<BoundaryEntry> boundary_order;          // cyclic, alternating ends/cells
};

/// Left-to-right sweep of the diagram. Throws on invalid diagrams.
CellComplex cells(const WiringDiagram& w);

enum class VertexRole { LineEnd, BoundaryCell, InnerCell, Apex, Gadget };
enum class EdgeRole { Pseudoline, FrameCycle, Spoke, Dual, Gadget };

/// The arrangement graph: pseudoline chords, a frame (boundary cycle plus
/// apex spokes) with a fresh K6 welded onto every frame edge, and the dual
/// graph of the cells. F holds everything except the pseudoline chords.
struct ArrangementInstance {
  Graph graph;
  EdgeSubset f;
  std::vector<VertexRole> vertex_roles;
  std::vector<EdgeRole> edge_roles;
};

ArrangementInstance build_arrangement_instance(const WiringDiagram& w);

/// One-line text form `k; i1 i2 ... iC(k,2)`.
WiringDiagram parse_wiring(const std::string& text);
std::string format_wiring(const WiringDiagram& w);

/// Uniformly chosen eligible swaps until every pair has crossed.
WiringDiagram random_wiring(int k, uint64_t seed);

/// Every valid wiring diagram on k lines, lexicographic by swap sequence.
/// Guarded to k <= 5 (counts grow as reduced-word numbers).
std::vector<WiringDiagram> all_wiring_diagrams(int k);

struct GeneratedInstance {
  Graph graph;
  EdgeSubset f;
  std::string name;
};

/// n vertices, m distinct random edges, f_size of them flagged crossing-free.
GeneratedInstance generate_random(int n, int m, int f_size, uint64_t seed);

/// K5 with F one of: "full", "minus-one", "minus-two-disjoint", "star".
GeneratedInstance generate_k5(const std::string& variant);

/// "k5" or "k33", all edges crossing-free.
GeneratedInstance generate_kuratowski(const std::string& which);

/// Connected graph whose F is a uniformly random spanning tree (Pruefer
/// coded) plus `extra` random non-tree edges.
GeneratedInstance generate_spanning_tree(int n, int extra, uint64_t seed);

GeneratedInstance generate_arrangement(const WiringDiagram& w);

}  // namespace partplanar

#endif
