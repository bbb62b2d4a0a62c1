// msrtool: generate, embed, classify, solve, verify, and sweep small graphs
// for constructive minimum-semidefinite-rank upper bounds.
//
// Exit codes: 0 success, 1 verification/solver failure, 2 usage or format error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "msr/delta.hpp"
#include "msr/eig.hpp"
#include "msr/enumerate.hpp"
#include "msr/graph.hpp"
#include "msr/json_io.hpp"
#include "msr/layout.hpp"
#include "msr/oracles.hpp"
#include "msr/solver.hpp"
#include "msr/sweep.hpp"

namespace {

using namespace msr;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw format_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& text) {
  auto pos = text.find('\n');
  std::string line = pos == std::string::npos ? text : text.substr(0, pos);
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
  return line;
}

Graph load_graph(const std::string& path) { return graph6_decode(first_line(read_all(path))); }

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw format_error("cannot open " + path + " for writing");
  out << content;
}

Family parse_family(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "mobius_ladder") return Family::mobius_ladder;
  if (name == "prism") return Family::prism;
  if (name == "star") return Family::star;
  throw CLI::ValidationError("--family", "unknown family " + name);
}

VertexOrdering parse_order(const std::string& spec, const Graph& g) {
  int n = g.order();
  if (spec == "auto") {
    auto cert = find_delta_ordering(g);
    if (!cert) throw std::runtime_error("no delta ordering found; supply --order explicitly");
    return cert->order;
  }
  if (spec == "paper-rowmajor" || spec == "identity") {
    // Row-major product labeling: ranks follow vertex indices 1..n.
    VertexOrdering order(n);
    for (int i = 0; i < n; ++i) order[i] = i + 1;
    return order;
  }
  // Comma-separated permutation, or a file containing one.
  std::string text = spec;
  if (spec.find(',') == std::string::npos) text = first_line(read_all(spec));
  VertexOrdering order;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) order.push_back(std::stoi(tok));
  return order;
}

nlohmann::ordered_json certificate_json(const DeltaCertificate& cert) {
  nlohmann::ordered_json j;
  j["order"] = cert.order;
  j["first_three"] =
      cert.first_three_kind == TriplePattern::three_isolated ? "3K1" : "K2+K1";
  j["missed"] = cert.missed;
  j["budget"] = cert.budget;
  return j;
}

int cmd_gen(const std::string& family, int k, const std::string& out) {
  Graph g = generate(parse_family(family), k);
  write_out(out, graph6_encode(g) + "\n");
  return 0;
}

int cmd_embed(const std::string& graph_path, const std::string& format,
              const std::string& order_spec, double radius, double start_angle,
              const std::string& out) {
  Graph g = load_graph(graph_path);
  VertexOrdering order = parse_order(order_spec, g);
  CircularLayout layout = circular_layout(g, order, radius, start_angle);
  if (format == "svg") {
    write_out(out, emit_svg(layout, g));
  } else if (format == "dot") {
    write_out(out, emit_dot(layout, g));
  } else {
    throw CLI::ValidationError("--format", "embed supports svg or dot");
  }
  return 0;
}

int cmd_classify(const std::string& graph_path, const std::string& out) {
  Graph g = load_graph(graph_path);
  DeltaClass cls = classify_delta(g);
  nlohmann::ordered_json j;
  j["graph6"] = graph6_encode(g);
  j["kind"] = to_string(cls.kind);
  j["bound"] = g.order() - stats(g).min_degree;
  if (cls.graph_certificate) j["graph_certificate"] = certificate_json(*cls.graph_certificate);
  if (cls.complement_certificate)
    j["complement_certificate"] = certificate_json(*cls.complement_certificate);
  write_out(out, j.dump(2) + "\n");
  return 0;
}

SolverConfig make_config(int max_backtracks, const std::string& seed_pool) {
  SolverConfig config;
  config.max_backtracks = max_backtracks;
  if (!seed_pool.empty()) {
    config.value_pool.clear();
    std::stringstream ss(seed_pool);
    std::string tok;
    while (std::getline(ss, tok, ',')) config.value_pool.push_back(std::stol(tok));
    if (config.value_pool.empty())
      throw CLI::ValidationError("--seed-pool", "value pool must be nonempty");
  }
  return config;
}

int cmd_solve(const std::string& graph_path, const std::string& order_spec,
              const std::string& dim_spec, int max_backtracks,
              const std::string& seed_pool, const std::string& out) {
  Graph g = load_graph(graph_path);
  VertexOrdering order = parse_order(order_spec, g);
  int d;
  if (dim_spec == "auto") {
    d = g.order() - stats(g).min_degree;
  } else {
    d = std::stoi(dim_spec);
  }
  SolverConfig config = make_config(max_backtracks, seed_pool);
  BuildResult result = build_representation(g, order, d, config);
  if (!result.success) {
    std::cerr << "solve failed: " << result.failure << "\n";
    size_t shown = std::min<size_t>(result.trace.size(), 40);
    for (size_t i = 0; i < shown; ++i) {
      const auto& ev = result.trace[i];
      const char* kind = ev.kind == TraceEvent::Kind::placed      ? "placed"
                         : ev.kind == TraceEvent::Kind::infeasible ? "infeasible"
                                                                   : "revised";
      std::cerr << "  " << kind << " rank " << ev.rank
                << (ev.note.empty() ? "" : " (" + ev.note + ")") << "\n";
    }
    if (result.trace.size() > shown)
      std::cerr << "  ... " << (result.trace.size() - shown) << " more events\n";
    std::cerr << "failure is not a proof that no representation exists\n";
    return 1;
  }
  VerificationReport report = verify_representation(g, *result.rep);
  if (!report.ok()) {
    std::cerr << "internal error: built representation failed verification\n";
    return 1;
  }
  std::cerr << "solved in dimension " << d << " with " << result.backtracks
            << " backtracks; rank " << report.rank << "\n";
  write_out(out, representation_to_json(*result.rep));
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& rep_path,
               const std::string& out) {
  OrthogonalRepresentation rep = representation_from_json(read_all(rep_path));
  Graph g = graph_path.empty() ? rep.graph : load_graph(graph_path);
  VerificationReport report = verify_representation(g, rep);
  nlohmann::ordered_json j;
  j["pattern_ok"] = report.pattern_ok;
  j["pairwise_ok"] = report.pairwise_ok;
  j["rank"] = report.rank;
  j["psd_ok"] = report.psd_ok;
  j["bound"] = report.bound;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    nlohmann::ordered_json e;
    e["i"] = f.i;
    e["j"] = f.j;
    e["expected"] = f.expected_zero ? "zero" : "nonzero";
    e["got"] = to_string(f.got);
    fails.push_back(e);
  }
  j["failures"] = fails;
  j["msr_upper_bound_certified"] = report.ok();
  write_out(out, j.dump(2) + "\n");
  // Diagnostic cross-check only; exact pivots above are authoritative.
  auto gram = gram_matrix(to_rational_vectors(rep.vectors));
  std::cerr << "float eigenvalue diagnostic:";
  for (double ev : float_eigenvalues(gram)) std::cerr << " " << ev;
  std::cerr << "\n";
  return report.ok() ? 0 : 1;
}

int cmd_oracle(const std::string& graph_path, const std::string& out) {
  Graph g = load_graph(graph_path);
  MsrVerdict verdict = msr_known(g);
  ConjectureRecord rec = check_delta_conjecture(g);
  nlohmann::ordered_json j;
  j["graph6"] = graph6_encode(g);
  j["msr_known"] = nullptr;
  if (verdict.value) j["msr_known"] = *verdict.value;
  j["method"] = to_string(verdict.method);
  j["trace"] = verdict.trace;
  j["bound"] = rec.bound;
  j["status"] = to_string(rec.status);
  j["tight"] = rec.tight;
  if (rec.rep_dimension) j["rep_dimension"] = *rec.rep_dimension;
  write_out(out, j.dump(2) + "\n");
  return 0;
}

int cmd_sweep(int max_n, int jobs, int max_backtracks, const std::string& out) {
  SolverConfig config;
  config.max_backtracks = max_backtracks;
  std::ofstream file;
  if (!out.empty() && out != "-") {
    file.open(out);
    if (!file) throw format_error("cannot open " + out + " for writing");
  }
  std::ostream& sink = file.is_open() ? file : std::cout;
  SweepSummary sum = run_sweep(
      max_n, jobs,
      [&](const SweepRecord& rec) { sink << sweep_record_json(rec) << "\n" << std::flush; },
      config);
  std::cerr << "sweep: " << sum.graphs << " graphs, " << sum.verified_constructive
            << " verified_constructive, " << sum.verified_exact << " verified_exact, "
            << sum.inconclusive << " inconclusive, " << sum.solver_failures
            << " solver failures\n";
  return sum.solver_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthogonal representations and msr upper bounds for small graphs"};
  app.require_subcommand(1);

  std::string family, graph_path, rep_path, order_spec = "identity";
  std::string dim_spec = "auto", seed_pool, format = "svg", out;
  int k = 0, max_n = 6, jobs = 1, max_backtracks = 200;
  double radius = 1.0, start_angle = msr::kDefaultStartAngle;

  auto* gen = app.add_subcommand("gen", "emit a named graph as graph6");
  gen->add_option("--family", family, "path|cycle|complete|mobius_ladder|prism|star")
      ->required();
  gen->add_option("--k", k, "size parameter")->required();
  gen->add_option("--out", out, "output file (default stdout)");

  auto* embed = app.add_subcommand("embed", "circular embedding as SVG or DOT");
  embed->add_option("--graph", graph_path, "graph6 file ('-' for stdin)")->required();
  embed->add_option("--format", format, "svg|dot");
  embed->add_option("--order", order_spec, "identity|auto|paper-rowmajor|perm (comma ints)");
  embed->add_option("--radius", radius, "circle radius");
  embed->add_option("--start-angle", start_angle, "start angle in radians");
  embed->add_option("--out", out, "output file (default stdout)");

  auto* classify = app.add_subcommand("classify", "delta / C-delta classification");
  classify->add_option("--graph", graph_path, "graph6 file")->required();
  classify->add_option("--out", out, "output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "build an orthogonal representation");
  solve->add_option("--graph", graph_path, "graph6 file")->required();
  solve->add_option("--order", order_spec, "auto|paper-rowmajor|identity|perm|file");
  solve->add_option("--dim", dim_spec, "auto or an explicit dimension");
  solve->add_option("--max-backtracks", max_backtracks, "revision limit");
  solve->add_option("--seed-pool", seed_pool, "comma-separated value pool");
  solve->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "certify a representation JSON");
  verify->add_option("--rep", rep_path, "representation JSON file")->required();
  verify->add_option("--graph", graph_path, "graph6 file (default: graph from JSON)");
  verify->add_option("--out", out, "output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "known msr results and conjecture record");
  oracle->add_option("--graph", graph_path, "graph6 file")->required();
  oracle->add_option("--out", out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "conjecture sweep over small graphs");
  sweep->add_option("--max-n", max_n, "largest order (4..8)");
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--max-backtracks", max_backtracks, "revision limit per graph");
  sweep->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return cmd_gen(family, k, out);
    if (embed->parsed()) return cmd_embed(graph_path, format, order_spec, radius, start_angle, out);
    if (classify->parsed()) return cmd_classify(graph_path, out);
    if (solve->parsed())
      return cmd_solve(graph_path, order_spec, dim_spec, max_backtracks, seed_pool, out);
    if (verify->parsed()) return cmd_verify(graph_path, rep_path, out);
    if (oracle->parsed()) return cmd_oracle(graph_path, out);
    if (sweep->parsed()) return cmd_sweep(max_n, jobs, max_backtracks, out);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const msr::format_error& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 2;
  } catch (const msr::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
