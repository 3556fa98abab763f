#ifndef PARTPLANAR_GF2_HPP
#define PARTPLANAR_GF2_HPP

#include <cstdint>
#include <vector>

#include "partplanar/graph.hpp"

namespace partplanar {

/// Linear system over GF(2), built sparsely. Rows are canonicalized on
/// insertion: supports sorted, repeated variables cancelled in pairs.
/// An empty-support row with rhs 1 is legal input and makes the system
/// inconsistent.
struct Gf2System {
  struct Row {
    std::vector<int> support;  // sorted, distinct variable indices
    uint8_t rhs = 0;
  };

  int num_variables = 0;
  std::vector<Row> rows;

  void add_row(std::vector<int> support, bool rhs);
};

struct EliminationResult {
  bool consistent = false;
  int rank = 0;
  /// One satisfying assignment with all free variables fixed to 0.
  /// Present (length num_variables) iff consistent.
  std::vector<uint8_t> solution;
  /// num_variables - rank; includes variables occurring in no row.
  int free_variable_count = 0;
};

/// Bit-packed Gaussian elimination. Dense columns are allocated only for
/// variables that actually occur; exact duplicate rows are dropped first.
/// Pivoting is deterministic (lowest-index eligible column, first eligible
/// row), so identical inputs give identical outputs.
EliminationResult eliminate(const Gf2System& sys);

/// True iff the assignment satisfies every row. Throws on length mismatch.
bool evaluate(const Gf2System& sys, const std::vector<uint8_t>& assignment);

}  // namespace partplanar

#endif
