#include "partplanar/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace partplanar {

namespace {

using ordered_json = nlohmann::ordered_json;

ParsedInstance parse_edge_list(const std::string& text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<uint8_t> flags;
  std::vector<int> line_of_edge;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int max_vertex = -1;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string su, sv, skind;
    if (!(fields >> su)) continue;  // blank line
    if (!(fields >> sv >> skind)) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected 'u v fixed|free', got '" + line + "'");
    }
    std::string trailing;
    if (fields >> trailing) {
      throw ValidationError("line " + std::to_string(line_no) + ": unexpected trailing field '" +
                            trailing + "'");
    }
    auto parse_vertex = [&](const std::string& s) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
        throw ValidationError("line " + std::to_string(line_no) + ": bad vertex '" + s + "'");
      }
      return value;
    };
    int u = parse_vertex(su);
    int v = parse_vertex(sv);
    bool in_f = false;
    if (skind == "fixed") {
      in_f = true;
    } else if (skind == "free") {
      in_f = false;
    } else {
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'fixed' or 'free', got '" +
                            skind + "'");
    }
    edges.emplace_back(u, v);
    flags.push_back(in_f ? 1 : 0);
    line_of_edge.push_back(line_no);
    max_vertex = std::max({max_vertex, u, v});
  }
  try {
    auto [graph, f] = build_graph(max_vertex + 1, edges, flags);
    return {std::move(graph), std::move(f), {}};
  } catch (const ValidationError& err) {
    // Point the validation message at the offending line.
    std::string what = err.what();
    auto pos = what.find("at edge ");
    if (pos != std::string::npos) {
      size_t idx = std::stoul(what.substr(pos + 8));
      if (idx < line_of_edge.size()) {
        throw ValidationError("line " + std::to_string(line_of_edge[idx]) + ": " + what);
      }
    }
    throw;
  }
}

ParsedInstance parse_document(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(std::string("instance document is not valid JSON: ") + err.what());
  }
  try {
    int n = doc.at("vertex_count").get<int>();
    std::vector<std::pair<int, int>> edges;
    std::vector<uint8_t> flags;
    for (const auto& edge : doc.at("edges")) {
      edges.emplace_back(edge.at("u").get<int>(), edge.at("v").get<int>());
      flags.push_back(edge.at("planar").get<bool>() ? 1 : 0);
    }
    InstanceMetadata meta;
    if (doc.contains("metadata")) {
      const auto& md = doc["metadata"];
      if (md.contains("name")) meta.name = md["name"].get<std::string>();
      if (md.contains("generator")) meta.generator = md["generator"].get<std::string>();
      if (md.contains("seed")) meta.seed = md["seed"].get<uint64_t>();
    }
    auto [graph, f] = build_graph(n, edges, flags);
    return {std::move(graph), std::move(f), std::move(meta)};
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(std::string("instance document field error: ") + err.what());
  }
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_document(text);
    return parse_edge_list(text);
  }
  throw ValidationError("empty instance input");
}

std::string emit_instance(const Graph& g, const EdgeSubset& f, const InstanceMetadata& meta) {
  require_subset_matches(g, f);
  ordered_json doc;
  doc["vertex_count"] = g.vertex_count();
  doc["edges"] = ordered_json::array();
  for (int e = 0; e < g.edge_count(); ++e) {
    doc["edges"].push_back(
        {{"u", g.edge(e).u}, {"v", g.edge(e).v}, {"planar", f.contains(e)}});
  }
  if (!meta.empty()) {
    ordered_json md = ordered_json::object();
    if (!meta.name.empty()) md["name"] = meta.name;
    if (!meta.generator.empty()) md["generator"] = meta.generator;
    if (meta.seed.has_value()) md["seed"] = *meta.seed;
    doc["metadata"] = std::move(md);
  }
  return doc.dump(2) + "\n";
}

std::string instance_digest(const Graph& g, const EdgeSubset& f) {
  require_subset_matches(g, f);
  std::string canonical = "n=" + std::to_string(g.vertex_count()) + ";";
  for (int e = 0; e < g.edge_count(); ++e) {
    canonical += std::to_string(g.edge(e).u) + "," + std::to_string(g.edge(e).v) +
                 (f.contains(e) ? "!" : ".") + ";";
  }
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

DecisionReport make_report(const Decision& d, const ConvexDrawing& order_used, const Graph& g,
                           const EdgeSubset& f) {
  DecisionReport r;
  r.yes = d.yes;
  r.stats = d.stats;
  if (d.yes) r.certificate = d.certificate;
  r.order = order_used.order();
  r.tool_version = kToolVersion;
  r.input_digest = instance_digest(g, f);
  return r;
}

std::string emit_report(const DecisionReport& r, const Graph& g) {
  ordered_json doc;
  doc["answer"] = r.yes ? "YES" : "NO";
  doc["stats"] = {{"num_equations", r.stats.num_equations},
                  {"num_variables_used", r.stats.num_variables_used},
                  {"rank", r.stats.rank},
                  {"elapsed_ms", r.stats.elapsed_ms}};
  if (r.yes) {
    doc["certificate"] = ordered_json::array();
    for (const Move& mv : r.certificate.moves) {
      const Edge& e = g.edge(mv.edge);
      doc["certificate"].push_back({{"edge", {e.u, e.v}}, {"vertex", mv.vertex}});
    }
  }
  doc["order"] = r.order;
  doc["tool_version"] = r.tool_version;
  doc["input_digest"] = r.input_digest;
  return doc.dump(2) + "\n";
}

DecisionReport parse_report(const std::string& text, const Graph& g) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(std::string("report is not valid JSON: ") + err.what());
  }
  try {
    DecisionReport r;
    std::string answer = doc.at("answer").get<std::string>();
    if (answer != "YES" && answer != "NO") {
      throw ValidationError("report answer must be YES or NO, got '" + answer + "'");
    }
    r.yes = answer == "YES";
    const auto& stats = doc.at("stats");
    r.stats.num_equations = stats.at("num_equations").get<int>();
    r.stats.num_variables_used = stats.at("num_variables_used").get<int>();
    r.stats.rank = stats.at("rank").get<int>();
    r.stats.elapsed_ms = stats.at("elapsed_ms").get<double>();
    if (r.yes != doc.contains("certificate")) {
      throw ValidationError("report certificate must be present exactly when the answer is YES");
    }
    if (r.yes) {
      for (const auto& move : doc.at("certificate")) {
        int u = move.at("edge").at(0).get<int>();
        int v = move.at("edge").at(1).get<int>();
        int edge = g.find_edge(u, v);
        if (edge < 0) {
          throw ValidationError("report certificate names edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} not present in the instance");
        }
        r.certificate.moves.push_back({edge, move.at("vertex").get<int>()});
      }
    }
    r.order = doc.at("order").get<std::vector<int>>();
    r.tool_version = doc.at("tool_version").get<std::string>();
    r.input_digest = doc.at("input_digest").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(std::string("report field error: ") + err.what());
  }
}

}  // namespace partplanar
