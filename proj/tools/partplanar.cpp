// Command-line front end: decide / oracle / verify / gen / crosscheck / bench.
// Exit codes: decide and oracle use 0=YES, 1=NO, 2=error; oracle adds
// 3=instance over the enumeration size limits. verify uses 0=report checks
// out, 1=check failed, 2=error. crosscheck returns 1 on any disagreement.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "partplanar/convex.hpp"
#include "partplanar/decider.hpp"
#include "partplanar/generate.hpp"
#include "partplanar/io.hpp"
#include "partplanar/oracle.hpp"

namespace {

using namespace partplanar;

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << text;
}

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      size_t used = 0;
      order.push_back(std::stoi(token, &used));
      if (used != token.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ValidationError("bad vertex '" + token + "' in --order");
    }
  }
  return order;
}

uint64_t rand_below(std::mt19937_64& rng, uint64_t bound) {
  uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

int run_decide(const std::string& instance_path, const std::string& order_text,
               const std::string& report_path) {
  ParsedInstance inst = parse_instance(read_text(instance_path));
  ConvexDrawing drawing = order_text.empty()
                              ? ConvexDrawing::identity(inst.graph.vertex_count())
                              : ConvexDrawing(parse_order(order_text));
  Decision d = decide(inst.graph, inst.f, drawing);
  std::cout << "answer: " << (d.yes ? "YES" : "NO") << "\n";
  std::cout << "equations: " << d.stats.num_equations
            << " variables_used: " << d.stats.num_variables_used << " rank: " << d.stats.rank
            << " elapsed_ms: " << d.stats.elapsed_ms << "\n";
  if (d.yes) std::cout << "certificate_moves: " << d.certificate.moves.size() << "\n";
  if (!report_path.empty()) {
    write_text(report_path, emit_report(make_report(d, drawing, inst.graph, inst.f), inst.graph));
  }
  return d.yes ? 0 : 1;
}

int run_oracle(const std::string& instance_path) {
  ParsedInstance inst = parse_instance(read_text(instance_path));
  OracleDecision d = oracle_decide(inst.graph, inst.f);
  std::cout << "answer: " << (d.yes ? "YES" : "NO") << "\n";
  return d.yes ? 0 : 1;
}

int run_verify(const std::string& instance_path, const std::string& report_path) {
  ParsedInstance inst = parse_instance(read_text(instance_path));
  DecisionReport report = parse_report(read_text(report_path), inst.graph);
  if (report.input_digest != instance_digest(inst.graph, inst.f)) {
    throw ValidationError("report digest " + report.input_digest +
                          " does not match this instance (" +
                          instance_digest(inst.graph, inst.f) + ")");
  }
  ConvexDrawing drawing((std::vector<int>(report.order)));
  if (report.yes) {
    bool ok = verify_certificate(inst.graph, inst.f, drawing, report.certificate);
    std::cout << "certificate: " << (ok ? "valid" : "INVALID") << "\n";
    return ok ? 0 : 1;
  }
  Decision again = decide(inst.graph, inst.f, drawing);
  bool ok = !again.yes;
  std::cout << "recorded NO " << (ok ? "reproduced" : "NOT reproduced") << "\n";
  return ok ? 0 : 1;
}

int run_crosscheck(int max_n, int trials, uint64_t seed) {
  std::mt19937_64 rng(seed);
  int skipped = 0;
  for (int t = 0; t < trials; ++t) {
    int n = 1 + static_cast<int>(rand_below(rng, static_cast<uint64_t>(max_n)));
    int max_m = n * (n - 1) / 2;
    int m = max_m == 0 ? 0 : static_cast<int>(rand_below(rng, static_cast<uint64_t>(max_m) + 1));
    int fs = m == 0 ? 0 : static_cast<int>(rand_below(rng, static_cast<uint64_t>(m) + 1));
    GeneratedInstance inst = generate_random(n, m, fs, rng());
    Decision d = decide(inst.graph, inst.f);
    try {
      OracleDecision o = oracle_decide(inst.graph, inst.f);
      if (o.yes != d.yes) {
        std::cout << "DISAGREEMENT on " << inst.name << ": decide says " << (d.yes ? "YES" : "NO")
                  << ", oracle says " << (o.yes ? "YES" : "NO") << "\n";
        std::cout << emit_instance(inst.graph, inst.f, {inst.name, "crosscheck", seed});
        return 1;
      }
    } catch (const SizeLimitError&) {
      ++skipped;
    }
  }
  std::cout << "agreed on " << (trials - skipped) << " instances";
  if (skipped > 0) std::cout << " (" << skipped << " skipped by the oracle size guard)";
  std::cout << "\n";
  return 0;
}

int run_bench(int n, int m, int fs, uint64_t seed) {
  GeneratedInstance inst = generate_random(n, m, fs, seed);
  Decision d = decide(inst.graph, inst.f);
  std::cout << "n=" << n << " m=" << m << " f=" << fs << " answer=" << (d.yes ? "YES" : "NO")
            << " equations=" << d.stats.num_equations
            << " variables_used=" << d.stats.num_variables_used << " rank=" << d.stats.rank
            << " elapsed_ms=" << d.stats.elapsed_ms << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial planarity: decide whether a graph has a drawing in which the selected "
               "edges are free of crossings"};
  app.require_subcommand(1);

  std::string instance_path, report_path, order_text, out_path, variant, wiring_text;
  int n = 6, m = 0, fs = 0, extra = 0, k = 3, trials = 200;
  uint64_t seed = 0;

  auto* decide_cmd = app.add_subcommand("decide", "decide an instance (exit 0 YES, 1 NO)");
  decide_cmd->add_option("instance", instance_path, "instance file, '-' for stdin")->required();
  decide_cmd->add_option("--order", order_text, "convex vertex order, comma separated");
  decide_cmd->add_option("--report", report_path, "write a decision report here");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive oracle (exit 3 if oversize)");
  oracle_cmd->add_option("instance", instance_path, "instance file, '-' for stdin")->required();

  auto* verify_cmd = app.add_subcommand("verify", "re-check a decision report");
  verify_cmd->add_option("instance", instance_path, "instance file")->required();
  verify_cmd->add_option("report", report_path, "report file")->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance document");
  gen_cmd->require_subcommand(1);
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "random graph and F");
  gen_random_cmd->add_option("--n", n, "vertices")->required();
  gen_random_cmd->add_option("--m", m, "edges")->required();
  gen_random_cmd->add_option("--f", fs, "crossing-free edges")->required();
  auto* gen_k5_cmd = gen_cmd->add_subcommand("k5", "K5 with a named F variant");
  gen_k5_cmd->add_option("--variant", variant, "full|minus-one|minus-two-disjoint|star")
      ->default_val("full");
  auto* gen_kur_cmd = gen_cmd->add_subcommand("kuratowski", "K5 or K3,3 with F=E");
  gen_kur_cmd->add_option("--which", variant, "k5|k33")->default_val("k33");
  auto* gen_tree_cmd = gen_cmd->add_subcommand("spanning-tree", "random spanning tree F");
  gen_tree_cmd->add_option("--n", n, "vertices")->required();
  gen_tree_cmd->add_option("--extra", extra, "non-tree edges")->required();
  auto* gen_arr_cmd = gen_cmd->add_subcommand("arrangement", "pseudoline arrangement graph");
  auto* wiring_opt = gen_arr_cmd->add_option("--wiring", wiring_text, "wiring diagram 'k; i1 i2 ...'");
  gen_arr_cmd->add_option("--k", k, "random wiring on k lines (with --seed)");
  for (auto* cmd : {gen_random_cmd, gen_tree_cmd, gen_arr_cmd}) {
    cmd->add_option("--seed", seed, "random seed");
  }
  for (auto* cmd : {gen_random_cmd, gen_k5_cmd, gen_kur_cmd, gen_tree_cmd, gen_arr_cmd}) {
    cmd->add_option("-o,--output", out_path, "output file (default stdout)");
  }

  auto* cross_cmd = app.add_subcommand("crosscheck", "random decide-vs-oracle agreement harness");
  cross_cmd->add_option("--n", n, "max vertices")->default_val(6);
  cross_cmd->add_option("--trials", trials, "number of instances")->default_val(200);
  cross_cmd->add_option("--seed", seed, "random seed");

  auto* bench_cmd = app.add_subcommand("bench", "time the decider on a random instance");
  bench_cmd->add_option("--n", n, "vertices")->default_val(40);
  bench_cmd->add_option("--m", m, "edges")->default_val(150);
  bench_cmd->add_option("--f", fs, "crossing-free edges")->default_val(40);
  bench_cmd->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (decide_cmd->parsed()) return run_decide(instance_path, order_text, report_path);
    if (oracle_cmd->parsed()) return run_oracle(instance_path);
    if (verify_cmd->parsed()) return run_verify(instance_path, report_path);
    if (gen_cmd->parsed()) {
      GeneratedInstance inst = [&] {
        if (gen_random_cmd->parsed()) return generate_random(n, m, fs, seed);
        if (gen_k5_cmd->parsed()) return generate_k5(variant);
        if (gen_kur_cmd->parsed()) return generate_kuratowski(variant);
        if (gen_tree_cmd->parsed()) return generate_spanning_tree(n, extra, seed);
        WiringDiagram w = wiring_opt->count() > 0 ? parse_wiring(wiring_text)
                                                  : random_wiring(k, seed);
        return generate_arrangement(w);
      }();
      InstanceMetadata meta;
      meta.name = inst.name;
      meta.generator = inst.name.substr(0, inst.name.find('('));
      write_text(out_path, emit_instance(inst.graph, inst.f, meta));
      return 0;
    }
    if (cross_cmd->parsed()) return run_crosscheck(n, trials, seed);
    if (bench_cmd->parsed()) return run_bench(n, m, fs, seed);
  } catch (const SizeLimitError& err) {
    std::cerr << "size limit: " << err.what() << "\n";
    return oracle_cmd->parsed() ? 3 : 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
