#include <random>

#include "doctest.h"
#include "partplanar/decider.hpp"
#include "partplanar/generate.hpp"
#include "partplanar/io.hpp"

using namespace partplanar;

TEST_CASE("edge-list parsing") {
  auto inst = parse_instance("0 1 fixed\n1 2 free\n");
  CHECK(inst.graph.vertex_count() == 3);
  CHECK(inst.graph.edge_count() == 2);
  CHECK(inst.f.contains(0));
  CHECK_FALSE(inst.f.contains(1));

  CHECK_THROWS_WITH_AS(parse_instance("0 0 fixed\n"), doctest::Contains("line 1"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("0 0 fixed\n"), doctest::Contains("self-loop"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("0 1 fixed\n\n2 x free\n"), doctest::Contains("line 3"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("0 1 sometimes\n"), doctest::Contains("fixed"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("0 1\n"), doctest::Contains("expected"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("0 1 fixed extra\n"), doctest::Contains("trailing"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("0 1 fixed\n0 1 free\n"), doctest::Contains("line 2"),
                       ValidationError);
  CHECK_THROWS_AS(parse_instance("   \n"), ValidationError);
}

TEST_CASE("document parsing accepts K5 and carries isolated vertices") {
  auto k5 = generate_k5("full");
  std::string doc = emit_instance(k5.graph, k5.f, {"k5-full", "k5_family", 0});
  auto parsed = parse_instance(doc);
  CHECK(parsed.graph.vertex_count() == 5);
  CHECK(parsed.graph.edges() == k5.graph.edges());
  CHECK(parsed.f.flags == k5.f.flags);
  CHECK(parsed.metadata.name == "k5-full");

  auto lonely = parse_instance("{\"vertex_count\": 4, \"edges\": [{\"u\":0,\"v\":1,\"planar\":true}]}");
  CHECK(lonely.graph.vertex_count() == 4);  // vertices 2,3 isolated

  CHECK_THROWS_WITH_AS(parse_instance("{\"edges\": []}"), doctest::Contains("field"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(parse_instance("{oops"), doctest::Contains("JSON"), ValidationError);
}

TEST_CASE("instance emit/parse round-trips on random instances") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    int max_m = n * (n - 1) / 2;
    int m = static_cast<int>(rng() % static_cast<uint64_t>(max_m + 1));
    int fs = m == 0 ? 0 : static_cast<int>(rng() % static_cast<uint64_t>(m + 1));
    auto inst = generate_random(n, m, fs, rng());
    InstanceMetadata meta{inst.name, "random", 7};
    std::string text = emit_instance(inst.graph, inst.f, meta);
    auto back = parse_instance(text);
    CHECK(back.graph.vertex_count() == inst.graph.vertex_count());
    CHECK(back.graph.edges() == inst.graph.edges());
    CHECK(back.f.flags == inst.f.flags);
    CHECK(back.metadata == meta);
    CHECK(emit_instance(back.graph, back.f, back.metadata) == text);  // canonical form
    CHECK(instance_digest(back.graph, back.f) == instance_digest(inst.graph, inst.f));
  }
}

TEST_CASE("digest separates instances and ignores metadata") {
  auto a = generate_k5("full");
  auto b = generate_k5("minus-one");
  CHECK(instance_digest(a.graph, a.f) != instance_digest(b.graph, b.f));
}

TEST_CASE("report round-trip for YES and NO decisions") {
  auto yes_inst = generate_k5("minus-two-disjoint");
  ConvexDrawing d = ConvexDrawing::identity(5);
  Decision yes = decide(yes_inst.graph, yes_inst.f, d);
  REQUIRE(yes.yes);
  DecisionReport report = make_report(yes, d, yes_inst.graph, yes_inst.f);
  std::string text = emit_report(report, yes_inst.graph);
  DecisionReport back = parse_report(text, yes_inst.graph);
  CHECK(back.yes);
  CHECK(back.certificate == report.certificate);
  CHECK(back.order == report.order);
  CHECK(back.stats.num_equations == report.stats.num_equations);
  CHECK(back.stats.rank == report.stats.rank);
  CHECK(back.input_digest == instance_digest(yes_inst.graph, yes_inst.f));
  CHECK(back.tool_version == kToolVersion);
  // the recorded certificate still verifies under the recorded order
  CHECK(verify_certificate(yes_inst.graph, yes_inst.f, ConvexDrawing(back.order),
                           back.certificate));

  auto no_inst = generate_k5("full");
  Decision no = decide(no_inst.graph, no_inst.f, d);
  REQUIRE_FALSE(no.yes);
  std::string no_text = emit_report(make_report(no, d, no_inst.graph, no_inst.f), no_inst.graph);
  CHECK(no_text.find("certificate") == std::string::npos);
  DecisionReport no_back = parse_report(no_text, no_inst.graph);
  CHECK_FALSE(no_back.yes);
  CHECK(no_back.certificate.moves.empty());

  // a YES with an empty certificate still writes the (empty) list
  std::vector<std::pair<int, int>> square = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  auto [c4, f4] = build_graph(4, square, {1, 1, 1, 1});
  Decision trivial = decide(c4, f4);
  REQUIRE(trivial.yes);
  std::string c4_text = emit_report(make_report(trivial, ConvexDrawing::identity(4), c4, f4), c4);
  CHECK(c4_text.find("\"certificate\": []") != std::string::npos);
}

TEST_CASE("malformed reports are rejected") {
  auto inst = generate_k5("full");
  CHECK_THROWS_WITH_AS(parse_report("{oops", inst.graph), doctest::Contains("JSON"),
                       ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_report(R"({"answer":"MAYBE","stats":{"num_equations":0,"num_variables_used":0,"rank":0,"elapsed_ms":0},"order":[],"tool_version":"x","input_digest":"y"})",
                   inst.graph),
      doctest::Contains("YES or NO"), ValidationError);
  // NO with a certificate is malformed
  CHECK_THROWS_WITH_AS(
      parse_report(R"({"answer":"NO","stats":{"num_equations":0,"num_variables_used":0,"rank":0,"elapsed_ms":0},"certificate":[],"order":[],"tool_version":"x","input_digest":"y"})",
                   inst.graph),
      doctest::Contains("certificate"), ValidationError);
  // a certificate edge that is not in the instance
  CHECK_THROWS_WITH_AS(
      parse_report(R"({"answer":"YES","stats":{"num_equations":0,"num_variables_used":0,"rank":0,"elapsed_ms":0},"certificate":[{"edge":[0,9],"vertex":2}],"order":[0,1,2,3,4],"tool_version":"x","input_digest":"y"})",
                   inst.graph),
      doctest::Contains("not present"), ValidationError);
}
