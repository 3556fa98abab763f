#ifndef PARTPLANAR_IO_HPP
#define PARTPLANAR_IO_HPP

#include <optional>
#include <string>

#include "partplanar/decider.hpp"
#include "partplanar/graph.hpp"

namespace partplanar {

inline constexpr const char* kToolVersion = "partplanar 0.1.0";

struct InstanceMetadata {
  std::string name;
  std::string generator;
  std::optional<uint64_t> seed;

  bool empty() const { return name.empty() && generator.empty() && !seed.has_value(); }
  bool operator==(const InstanceMetadata&) const = default;
};

struct ParsedInstance {
  Graph graph;
  EdgeSubset f;
  InstanceMetadata metadata;
};

/// Accepts either the structured JSON document (leading '{') or the plain
/// edge-list format, one `u v fixed|free` line per edge. Diagnostics carry
/// line numbers; graph validation errors are mapped back to their lines.
ParsedInstance parse_instance(const std::string& text);

/// Canonical JSON document; parse_instance(emit_instance(x)) == x.
std::string emit_instance(const Graph& g, const EdgeSubset& f, const InstanceMetadata& meta = {});

/// Stable FNV-1a fingerprint of the instance itself (format-independent).
std::string instance_digest(const Graph& g, const EdgeSubset& f);

struct DecisionReport {
  bool yes = false;
  DecisionStats stats;
  MoveSet certificate;     // present in the document iff yes
  std::vector<int> order;  // convex order the decision used
  std::string tool_version;
  std::string input_digest;
};

DecisionReport make_report(const Decision& d, const ConvexDrawing& order_used, const Graph& g,
                           const EdgeSubset& f);

/// Deterministic JSON serialization; round-trips through parse_report.
std::string emit_report(const DecisionReport& r, const Graph& g);
DecisionReport parse_report(const std::string& text, const Graph& g);

}  // namespace partplanar

#endif
