// trifree: command-line front-end for the triangle-free spectral toolkit.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "trifree/bounds.hpp"
#include "trifree/constructions.hpp"
#include "trifree/errors.hpp"
#include "trifree/explorer.hpp"
#include "trifree/graph.hpp"
#include "trifree/json.hpp"
#include "trifree/spectral.hpp"
#include "trifree/srg.hpp"

namespace {

using nlohmann::json;
using namespace trifree;

enum class ExitCode { ok = 0, violation = 1, usage = 2 };

struct Config {
  srg::Format format = srg::Format::text;
  double tol = bounds::kVerdictTol;
  std::uint64_t seed = 1;
  double budget = bounds::kDefaultIndependenceBudget;
  int workers = 0;  // 0: TRIFREE_WORKERS or hardware concurrency
  bool timing = false;
};

// Input problems that are the caller's fault: reported with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double x) {
  if (std::abs(x) < 1e-12) x = 0.0;
  return fmt::format("{:.10g}", x);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int workers_of(const Config& cfg) { return cfg.workers > 0 ? cfg.workers : explorer::default_workers(); }

// --- analyze -------------------------------------------------------------

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return line.find_first_of(" \t", first) != std::string::npos;
  }
  return false;
}

Graph load_graph(const std::string& spec, std::string& label) {
  if (spec.rfind("named:", 0) == 0) {
    label = spec;
    try {
      return constructions::named_graph(spec.substr(6));
    } catch (const std::out_of_range& e) {
      throw UsageError(e.what());
    }
  }
  if (std::filesystem::is_regular_file(spec)) {
    label = spec;
    std::ifstream in(spec, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (looks_like_edge_list(text)) return parse_edge_list(text);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (!line.empty() && line != "\r") return decode_graph6(line);
    throw ParseError(fmt::format("{}: empty graph file", spec));
  }
  label = "graph6";
  return decode_graph6(spec);
}

ExitCode cmd_analyze(const Config& cfg, const std::string& input, bool with_independence) {
  std::string label;
  Graph g;
  try {
    g = load_graph(input, label);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const GraphError& e) {
    throw UsageError(e.what());
  }
  if (g.order() == 0) throw UsageError("graph has no vertices");

  const auto s = spectral::spectrum(g);
  const auto trace = spectral::trace_identity_report(g, s);
  const auto clusters = spectral::cluster_eigenvalues(s.values);
  const auto stats = degree_stats(g);
  const auto triangle = find_triangle(g);
  const std::int64_t triangles = triangle_count(g);
  const double qmin = spectral::signless_laplacian_min(g);
  std::optional<srg::SrgParams> params;
  std::string srg_reason;
  if (g.order() >= 2) {
    auto rec = srg::srg_recognize(g);
    params = rec.params;
    srg_reason = rec.reason;
  }
  std::optional<bounds::BoundReport> report;
  if (!triangle) report = bounds::evaluate_bounds(g.order(), s, cfg.tol);
  std::optional<srg::TableRow> row;
  if (params && params->a == 0) row = srg::make_row(*params);
  std::optional<double> hd;
  if (stats.is_regular && stats.degree && *stats.degree > 0) hd = bounds::hoffman_delsarte(g, s);
  std::optional<bounds::IndependenceResult> alpha;
  if (with_independence) alpha = bounds::independence_number(g, static_cast<std::int64_t>(cfg.budget));

  const bool violated = report && (!report->lemma_holds || !report->theorem_holds());

  json j;
  j["input"] = label;
  j["graph6"] = encode_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["triangles"] = triangles;
  j["triangle_free"] = !triangle;
  j["bipartite"] = is_bipartite(g);
  j["min_degree"] = stats.min_degree;
  j["max_degree"] = stats.max_degree;
  j["regular"] = stats.is_regular;
  j["spectrum"] = s;
  j["clusters"] = clusters;
  j["trace"] = trace;
  j["signless_laplacian_min"] = qmin;
  j["srg"] = params ? json(*params) : json(nullptr);
  if (row) j["exact_ratio"] = row->ratio;
  j["bounds"] = report ? json(*report) : json(nullptr);
  if (triangle) j["triangle"] = *triangle;
  j["hoffman_delsarte"] = hd ? json(*hd) : json(nullptr);
  if (alpha) j["independence"] = *alpha;
  j["violation"] = violated;

  if (cfg.format == srg::Format::json) {
    print_json(j);
  } else if (cfg.format == srg::Format::csv) {
    std::vector<std::pair<std::string, std::string>> kv = {
        {"input", label},
        {"graph6", encode_graph6(g)},
        {"n", std::to_string(g.order())},
        {"m", std::to_string(g.size())},
        {"triangles", std::to_string(triangles)},
        {"bipartite", is_bipartite(g) ? "true" : "false"},
        {"regular", stats.is_regular ? "true" : "false"},
        {"mu1", num(s.largest())},
        {"mun", num(s.smallest())},
        {"trace_residual_1", num(trace.residual1)},
        {"trace_residual_2", num(trace.residual2)},
        {"trace_residual_3", num(trace.residual3)},
        {"signless_laplacian_min", num(qmin)},
        {"srg", params ? params->to_string() : ""},
    };
    if (report) {
      kv.emplace_back("lemma_lhs", num(report->lemma_lhs));
      kv.emplace_back("lemma_rhs", num(report->lemma_rhs));
      kv.emplace_back("lemma_holds", report->lemma_holds ? "true" : "false");
      kv.emplace_back("theorem_margin", num(report->theorem_margin));
      kv.emplace_back("theorem_holds", report->theorem_holds() ? "true" : "false");
      kv.emplace_back("ratio", num(report->ratio));
    }
    if (row) kv.emplace_back("exact_ratio", row->ratio.to_string());
    if (hd) kv.emplace_back("hoffman_delsarte", num(*hd));
    if (alpha) {
      kv.emplace_back("independence_number", std::to_string(alpha->size));
      kv.emplace_back("independence_exact", alpha->exact ? "true" : "false");
    }
    std::cout << "key,value\n";
    for (const auto& [k, v] : kv) std::cout << k << "," << csv_field(v) << "\n";
  } else {
    std::cout << fmt::format("graph: {} (n = {}, m = {})\n", label, g.order(), g.size());
    std::cout << fmt::format("degrees: {}..{}{}, bipartite: {}, triangles: {}\n", stats.min_degree,
                             stats.max_degree, stats.is_regular ? " (regular)" : "",
                             is_bipartite(g) ? "yes" : "no", triangles);
    if (params) std::cout << "strongly regular: " << params->to_string() << "\n";
    else if (g.order() >= 2) std::cout << "strongly regular: no (" << srg_reason << ")\n";
    std::cout << "spectrum:";
    for (const auto& c : clusters) std::cout << fmt::format(" {}^{}", num(c.value), c.multiplicity);
    std::cout << "\n";
    std::cout << fmt::format("trace: sum mu = {} (target {}), sum mu^2 = {} (target {}), sum mu^3 = {} (target {})\n",
                             num(trace.sum1), num(trace.target1), num(trace.sum2), num(trace.target2),
                             num(trace.sum3), num(trace.target3));
    std::cout << fmt::format("signless laplacian min: {}\n", num(qmin));
    if (report) {
      std::cout << fmt::format("lemma: mu1 = {} <= -n mu_n / (mu1 - mu_n) = {}: {}\n", num(report->lemma_lhs),
                               num(report->lemma_rhs), report->lemma_holds ? "holds" : "VIOLATED");
      std::cout << fmt::format("theorem: mu1 + mu_n = {} <= (3 - 2 sqrt 2) n = {}: {} (margin {})\n",
                               num(report->mu1 + report->mun), num(bounds::kTheoremConstant * g.order()),
                               report->theorem_holds() ? "holds" : "VIOLATED", num(report->theorem_margin));
      std::cout << fmt::format("ratio (mu1 + mu_n) / n: {}\n", num(report->ratio));
    } else {
      std::cout << fmt::format("bounds: not applicable, vertices {}, {}, {} form a triangle\n", (*triangle)[0],
                               (*triangle)[1], (*triangle)[2]);
    }
    if (row) std::cout << "exact ratio (k + theta2) / n: " << row->ratio.to_string() << "\n";
    if (hd) std::cout << fmt::format("hoffman-delsarte bound: {}\n", num(*hd));
    if (alpha)
      std::cout << fmt::format("independence number: {}{}\n", alpha->size, alpha->exact ? "" : " (budget exhausted, lower bound)");
  }
  if (violated) {
    std::cerr << "counterexample: " << encode_graph6(g) << "\n";
    return ExitCode::violation;
  }
  return ExitCode::ok;
}

// --- srg-table / srg-check ------------------------------------------------

ExitCode cmd_srg_table(const Config& cfg, std::int64_t n_max, const std::string& tier_name, bool diff) {
  const auto tier = tier_name == "extended" ? srg::Tier::extended : srg::Tier::basic;
  if (n_max < 5 || n_max > srg::kHardMaxOrder)
    throw UsageError(fmt::format("--n-max must be in [5, {}]", srg::kHardMaxOrder));
  const auto rows = srg::enumerate_feasible(n_max, tier, workers_of(cfg));
  if (cfg.format == srg::Format::json) {
    json j;
    j["n_max"] = n_max;
    j["tier"] = tier_name;
    j["rows"] = rows;
    if (diff) j["diff"] = srg::diff_against_paper(rows);
    print_json(j);
    return ExitCode::ok;
  }
  std::cout << srg::render_table(rows, cfg.format);
  if (diff) {
    std::cout << "\n";
    std::cout << srg::render_diff(srg::diff_against_paper(rows), cfg.format);
  }
  return ExitCode::ok;
}

const char* pass_fail(bool b) { return b ? "pass" : "FAIL"; }

ExitCode cmd_srg_check(const Config& cfg, const std::vector<std::int64_t>& p) {
  const srg::SrgParams params{p[0], p[1], p[2], p[3]};
  const auto report = srg::feasibility(params, srg::Tier::extended);
  const auto existence = srg::lookup_existence(params);
  std::optional<srg::ChainReport> chain;
  std::string chain_note;
  if (params.a != 0) chain_note = "not applicable: a != 0";
  else if (!report.basic_passed) chain_note = "not applicable: basic feasibility fails";
  else chain = srg::theorem2_chain(params);

  if (cfg.format == srg::Format::json) {
    json j;
    j["params"] = params;
    j["feasibility"] = report;
    j["chain"] = chain ? json(*chain) : json(nullptr);
    if (!chain) j["chain_note"] = chain_note;
    j["existence"] = srg::to_string(existence.existence);
    j["existence_note"] = existence.note;
    print_json(j);
    return ExitCode::ok;
  }
  if (cfg.format == srg::Format::csv) {
    std::cout << "section,name,result,detail\n";
    for (const auto& c : report.conditions)
      std::cout << fmt::format("condition,{},{},{}\n", c.name,
                               !c.evaluated ? "skipped" : (c.passed ? "pass" : "fail"), csv_field(c.detail));
    if (report.eigen) {
      std::cout << fmt::format("eigen,theta1,{},m1={}\n", csv_field(report.eigen->theta1.to_string()), report.eigen->m1);
      std::cout << fmt::format("eigen,theta2,{},m2={}\n", csv_field(report.eigen->theta2.to_string()), report.eigen->m2);
    }
    if (chain) {
      for (const auto& c : chain->checks)
        std::cout << fmt::format("chain,{},{},{}\n", csv_field(c.name), c.holds ? "holds" : "fails",
                                 csv_field(c.lhs.to_string() + " " + c.relation + " " + c.rhs.to_string()));
      const auto& c = chain->inertia;
      std::cout << fmt::format("chain,{},{},{}\n", csv_field(c.name), c.holds ? "holds" : "fails",
                               csv_field(c.lhs.to_string() + " " + c.relation + " " + c.rhs.to_string()));
      std::cout << fmt::format("verdict,chain,{},\n", csv_field(srg::to_string(chain->verdict)));
    } else {
      std::cout << fmt::format("verdict,chain,skipped,{}\n", csv_field(chain_note));
    }
    std::cout << fmt::format("existence,curated,{},{}\n", srg::to_string(existence.existence),
                             csv_field(existence.note));
    return ExitCode::ok;
  }

  std::cout << "parameters: " << params.to_string() << "\n";
  std::size_t width = 0;
  for (const auto& c : report.conditions) width = std::max(width, c.name.size());
  std::cout << "feasibility:\n";
  for (const auto& c : report.conditions)
    std::cout << fmt::format("  {:<{}}  {:<7} {}\n", c.name, width, !c.evaluated ? "skipped" : pass_fail(c.passed),
                             c.detail);
  std::cout << fmt::format("basic: {}, extended: {}\n", pass_fail(report.basic_passed),
                           pass_fail(report.basic_passed && report.extended_passed));
  if (report.eigen) {
    const auto& e = *report.eigen;
    std::cout << fmt::format("eigenvalues: k = {} (1), theta1 = {} ({}), theta2 = {} ({}){}\n", params.k,
                             e.theta1.to_string(), e.m1, e.theta2.to_string(), e.m2,
                             e.conference ? ", conference case" : "");
  }
  if (chain) {
    std::cout << fmt::format("ratio (k + theta2) / n = {} ~ {}\n", chain->ratio.to_string(), num(chain->ratio.to_double()));
    std::cout << "chain:\n";
    auto line = [](const srg::ChainCheck& c) {
      std::cout << fmt::format("  {}: {} {} {}  {}\n", c.name, c.lhs.to_string(), c.relation, c.rhs.to_string(),
                               c.holds ? "holds" : "fails");
    };
    for (const auto& c : chain->checks) line(c);
    line(chain->inertia);
    std::cout << "verdict: " << srg::to_string(chain->verdict) << "\n";
  } else {
    std::cout << "chain: " << chain_note << "\n";
  }
  std::cout << "existence: " << srg::to_string(existence.existence);
  if (!existence.note.empty()) std::cout << " (" << existence.note << ")";
  std::cout << "\n";
  return ExitCode::ok;
}

// --- scan / search --------------------------------------------------------

ExitCode print_scan(const Config& cfg, const explorer::ScanReport& r, const std::string& kind) {
  if (cfg.format == srg::Format::json) {
    json j = r;
    if (!cfg.timing) j.erase("runtime_seconds");
    j["kind"] = kind;
    print_json(j);
  } else if (cfg.format == srg::Format::csv) {
    std::cout << "kind,n,graphs_scanned,triangle_free,lemma_violations,theorem_violations,max_ratio,argmax_graph";
    std::cout << (cfg.timing ? ",runtime_seconds\n" : "\n");
    std::cout << fmt::format("{},{},{},{},{},{},{},{}", kind, r.n, r.graphs_scanned, r.triangle_free_count,
                             r.lemma_violations.size(), r.theorem_violations.size(), fmt::format("{:.12f}", r.max_ratio),
                             csv_field(r.argmax_graph));
    if (cfg.timing) std::cout << fmt::format(",{:.3f}", r.runtime_seconds);
    std::cout << "\n";
  } else {
    std::cout << fmt::format("{} n = {}\n", kind, r.n);
    std::cout << fmt::format("graphs scanned: {}\n", r.graphs_scanned);
    std::cout << fmt::format("triangle-free graphs checked: {}\n", r.triangle_free_count);
    std::cout << fmt::format("lemma violations: {}\n", r.lemma_violations.size());
    std::cout << fmt::format("theorem violations: {}\n", r.theorem_violations.size());
    std::cout << fmt::format("max ratio (mu1 + mu_n) / n: {:.12f} at {}\n", r.max_ratio, r.argmax_graph);
    std::cout << fmt::format("bound 3 - 2 sqrt 2: {:.12f}\n", bounds::kTheoremConstant);
    if (cfg.timing) std::cout << fmt::format("runtime: {:.3f} s\n", r.runtime_seconds);
  }
  if (r.clean()) return ExitCode::ok;
  for (const auto& v : r.lemma_violations)
    std::cerr << fmt::format("counterexample (lemma): {} lhs {} rhs {}\n", v.graph6, num(v.lhs), num(v.rhs));
  for (const auto& v : r.theorem_violations)
    std::cerr << fmt::format("counterexample (theorem): {} lhs {} rhs {}\n", v.graph6, num(v.lhs), num(v.rhs));
  return ExitCode::violation;
}

// --- named / fmax ---------------------------------------------------------

ExitCode cmd_named(const Config& cfg) {
  json rows = json::array();
  struct Line {
    std::string name, description, params, exact, approx;
    int n;
    std::int64_t m;
  };
  std::vector<Line> lines;
  for (const auto& entry : constructions::named_graphs()) {
    const Graph g = entry.build();
    const auto s = spectral::spectrum(g);
    const auto rec = srg::srg_recognize(g);
    const double ratio = (s.largest() + s.smallest()) / g.order();
    std::string exact;
    if (rec.params && rec.params->a == 0) exact = srg::make_row(*rec.params).ratio.to_string();
    lines.push_back({entry.name, entry.description, rec.params ? rec.params->to_string() : "", exact, num(ratio),
                     g.order(), g.size()});
    json j;
    j["name"] = entry.name;
    j["description"] = entry.description;
    j["n"] = g.order();
    j["m"] = g.size();
    j["srg"] = rec.params ? json(*rec.params) : json(nullptr);
    j["ratio"] = ratio;
    j["exact_ratio"] = exact;
    j["triangle_free"] = is_triangle_free(g);
    rows.push_back(j);
  }
  if (cfg.format == srg::Format::json) {
    print_json(json{{"graphs", rows}});
  } else if (cfg.format == srg::Format::csv) {
    std::cout << "name,n,m,srg,exact_ratio,ratio,description\n";
    for (const auto& l : lines)
      std::cout << fmt::format("{},{},{},{},{},{},{}\n", l.name, l.n, l.m, csv_field(l.params), csv_field(l.exact),
                               l.approx, csv_field(l.description));
  } else {
    std::cout << fmt::format("{:<18} {:>4} {:>5}  {:<16} {:<12} {}\n", "name", "n", "m", "srg", "ratio", "exact");
    for (const auto& l : lines)
      std::cout << fmt::format("{:<18} {:>4} {:>5}  {:<16} {:<12} {}\n", l.name, l.n, l.m, l.params, l.approx, l.exact);
  }
  return ExitCode::ok;
}

ExitCode cmd_fmax(const Config& cfg) {
  const auto r = bounds::f_max();
  if (cfg.format == srg::Format::json) {
    print_json(json(r));
  } else if (cfg.format == srg::Format::csv) {
    std::cout << "argmax,value,search_argmax,search_value\n";
    std::cout << fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", r.argmax, r.value, r.search_argmax, r.search_value);
  } else {
    std::cout << fmt::format("argmax: {:.15f} (1 - 1/sqrt 2)\n", r.argmax);
    std::cout << fmt::format("value:  {:.15f} (3 - 2 sqrt 2)\n", r.value);
    std::cout << fmt::format("golden-section: argmax {:.15f}, value {:.15f}\n", r.search_argmax, r.search_value);
  }
  return ExitCode::ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral bounds and strongly regular graph tools for triangle-free graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "trifree 0.1.0");

  Config cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--tol", cfg.tol, "Verdict tolerance for the spectral bounds")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized subcommands")->capture_default_str();
  app.add_option("--budget", cfg.budget, "Branch-and-bound expansion budget for independence numbers")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Worker threads (default: TRIFREE_WORKERS or hardware concurrency)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", cfg.timing, "Include wall-clock runtimes in the output");

  auto* analyze = app.add_subcommand("analyze", "Spectrum, trace identities and bound report of one graph");
  std::string input;
  bool with_alpha = false;
  analyze->add_option("graph", input, "Edge-list or graph6 file, a graph6 string, or named:NAME")->required();
  analyze->add_flag("--independence", with_alpha, "Also compute the independence number");

  auto* table = app.add_subcommand("srg-table", "Feasible triangle-free SRG parameter sets");
  std::int64_t n_max = 816;
  std::string tier = "basic";
  bool diff = false;
  table->add_option("--n-max", n_max, "Largest order")->capture_default_str();
  table->add_option("--tier", tier, "Feasibility tier")
      ->check(CLI::IsMember({"basic", "extended"}))
      ->capture_default_str();
  table->add_flag("--diff-paper", diff, "Compare against the published 24-row table");

  auto* check = app.add_subcommand("srg-check", "Feasibility, eigenvalues and nonexistence chain for (n,k,a,b)");
  std::vector<std::int64_t> params;
  check->add_option("params", params, "n k a b")->required()->expected(4);

  auto* scan = app.add_subcommand("scan", "Check both bounds on every labelled triangle-free graph of order n");
  int scan_n = 0;
  bool allow_n8 = false;
  scan->add_option("--n", scan_n, "Order")->required();
  scan->add_flag("--allow-n8", allow_n8, "Permit n = 8 (2^28 masks)");

  auto* search = app.add_subcommand("search", "Seeded local search for large (mu1 + mu_n) / n");
  int search_n = 0;
  std::int64_t iters = 1000;
  search->add_option("--n", search_n, "Order")->required();
  search->add_option("--iters", iters, "Iterations")->capture_default_str()->check(CLI::NonNegativeNumber);
  search->add_option("--seed", cfg.seed, "Seed");

  auto* named = app.add_subcommand("named", "Built-in constructions with parameters and ratios");
  named->add_flag("--list", "List the constructions (default)");

  auto* fmax = app.add_subcommand("fmax", "Maximum of f(alpha) = (alpha - 2 alpha^2) / (1 - alpha)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::usage);
  }
  cfg.format = format == "json" ? srg::Format::json : format == "csv" ? srg::Format::csv : srg::Format::text;

  try {
    ExitCode code = ExitCode::ok;
    if (*analyze) code = cmd_analyze(cfg, input, with_alpha);
    else if (*table) code = cmd_srg_table(cfg, n_max, tier, diff);
    else if (*check) code = cmd_srg_check(cfg, params);
    else if (*scan) {
      explorer::ScanOptions opts;
      opts.workers = workers_of(cfg);
      opts.allow_n8 = allow_n8;
      opts.tol = cfg.tol;
      code = print_scan(cfg, explorer::scan_all(scan_n, opts), "scan");
    } else if (*search) {
      explorer::SearchOptions opts;
      opts.tol = cfg.tol;
      code = print_scan(cfg, explorer::random_search(search_n, iters, cfg.seed, opts), "search");
    } else if (*named) code = cmd_named(cfg);
    else if (*fmax) code = cmd_fmax(cfg);
    return static_cast<int>(code);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::usage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
