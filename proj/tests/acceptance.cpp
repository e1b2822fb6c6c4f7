// Acceptance checks: one PASS/FAIL line per criterion.
//
//   trifree_acceptance            run every criterion
//   trifree_acceptance --only 4   run one criterion (exit status reflects it)

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "brute.hpp"
#include "charpoly_oracle.hpp"
#include "trifree/bounds.hpp"
#include "trifree/constructions.hpp"
#include "trifree/explorer.hpp"
#include "trifree/graph.hpp"
#include "trifree/spectral.hpp"
#include "trifree/srg.hpp"

using namespace trifree;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

struct CliResult {
  int status = -1;
  std::string out;
};

// Runs the command-line tool when it was built alongside; the library is used
// directly otherwise.
#ifdef TRIFREE_CLI
CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + TRIFREE_CLI + "\" " + args;
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
#endif

// --- 1 ---------------------------------------------------------------------

Outcome check_table_reproduction() {
  Outcome o;
  const auto start = Clock::now();
  json report;
#ifdef TRIFREE_CLI
  const auto text = run_cli("srg-table --n-max 816 --tier basic --diff-paper");
  o.require(text.status == 0, "srg-table exited with status " + std::to_string(text.status));
  for (const auto& row : srg::paper_table()) {
    const auto& p = row.params;
    const auto needle = fmt::format("{:>3} {:>4} {:>2} {:>3}", p.n, p.k, p.a, p.b);
    o.require(text.out.find(needle) != std::string::npos, "text output lacks row " + p.to_string());
  }
  const auto js = run_cli("srg-table --n-max 816 --tier basic --diff-paper --format json");
  o.require(js.status == 0, "srg-table --format json exited with status " + std::to_string(js.status));
  report = json::parse(js.out);
#else
  const auto rows = srg::enumerate_feasible(816, srg::Tier::basic, explorer::default_workers());
  report["rows"] = json::parse(srg::render_table(rows, srg::Format::json));
  report["diff"] = json::parse(srg::render_diff(srg::diff_against_paper(rows), srg::Format::json));
#endif
  const double elapsed = seconds_since(start);
  const auto& diff = report["diff"];
  o.require(diff["paper_rows"].size() == 24, "diff does not cover 24 published rows");
  std::vector<std::string> multiplicity;
  for (const auto& d : diff["paper_rows"]) {
    const auto key = fmt::format("({},{},{},{})", d["params"]["n"].get<int>(), d["params"]["k"].get<int>(),
                                 d["params"]["a"].get<int>(), d["params"]["b"].get<int>());
    if (!d["found"].get<bool>()) {
      o.require(false, key + " not produced");
      continue;
    }
    o.require(d["eigen_match"].get<bool>(), key + ": theta1/theta2 differ from the printed row");
    o.require(d["ratio_match"].get<bool>(), key + ": printed (k+theta2)/n " + d["paper_ratio"].get<std::string>() +
                                                " but computed " + d["computed_ratio_label"].get<std::string>() + " = " +
                                                d["computed_ratio"]["exact"].get<std::string>());
    if (!d["multiplicities_match"].get<bool>()) multiplicity.push_back(key);
  }
  o.require(multiplicity == std::vector<std::string>{"(10,3,0,1)"},
            "multiplicity discrepancies other than the (10,3,0,1) transposition");
  for (const auto& e : diff["extras"])
    o.require(!e["eliminated_by"].empty() || e["open"].get<bool>() || !e["inertia_ok"].get<bool>(),
              "extra row without an eliminating condition or open flag");
  o.require(elapsed < 10.0, fmt::format("runtime {:.2f} s >= 10 s", elapsed));
  return o;
}

// --- 2 ---------------------------------------------------------------------

bool clusters_match(const std::vector<spectral::EigenCluster>& got, const std::vector<std::pair<double, int>>& want,
                    double tol) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (std::abs(got[i].value - want[i].first) > tol || got[i].multiplicity != want[i].second) return false;
  return true;
}

Outcome check_higman_sims() {
  Outcome o;
  const Graph g = constructions::higman_sims();
  const auto rec = srg::srg_recognize(g);
  o.require(rec.params && *rec.params == srg::SrgParams{100, 22, 0, 6}, "srg_recognize did not return (100,22,0,6)");
  const auto s = spectral::spectrum(g);
  // every value within 1e-8 of its exact eigenvalue
  int c22 = 0, c2 = 0, cm8 = 0;
  for (double v : s.values) {
    if (std::abs(v - 22) <= 1e-8) ++c22;
    else if (std::abs(v - 2) <= 1e-8) ++c2;
    else if (std::abs(v + 8) <= 1e-8) ++cm8;
  }
  o.require(c22 == 1 && c2 == 77 && cm8 == 22, fmt::format("spectrum counts {}/{}/{}, want 1/77/22", c22, c2, cm8));
  o.require(clusters_match(spectral::cluster_eigenvalues(s.values), {{22, 1}, {2, 77}, {-8, 22}}, 1e-8),
            "clustered spectrum differs from {22^1, 2^77, (-8)^22}");
  const auto row = srg::make_row({100, 22, 0, 6});
  o.require(row.ratio == exact::QuadSurd(exact::Rational(14, 100)), "exact ratio is not 14/100");
  o.require(row.ratio.to_string() == "7/50", "exact ratio renders as " + row.ratio.to_string());
  o.require(std::abs((s.largest() + s.smallest()) / 100 - 0.14) < 1e-12, "numeric ratio differs from 0.14");
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome check_named_spectra() {
  Outcome o;
  const auto start = Clock::now();
  std::map<std::int64_t, srg::PaperRow> printed;
  for (const auto& r : srg::paper_table()) printed[r.params.n] = r;
  for (const auto& entry : constructions::named_graphs()) {
    const Graph g = entry.build();
    const auto rec = srg::srg_recognize(g);
    if (!rec.params) {
      o.require(false, entry.name + " is not strongly regular");
      continue;
    }
    const auto it = printed.find(rec.params->n);
    if (it == printed.end() || it->second.params != *rec.params) {
      o.require(false, entry.name + " has no matching table row");
      continue;
    }
    const auto& row = it->second;
    // Eigenvalues from the printed row, multiplicities from the parameters.
    const auto eig = srg::srg_eigen(row.params);
    const std::vector<std::pair<double, int>> want{{double(row.params.k), 1},
                                                   {row.theta1.to_double(), int(eig.m1)},
                                                   {row.theta2.to_double(), int(eig.m2)}};
    const auto got = spectral::cluster_eigenvalues(spectral::spectrum(g).values);
    o.require(clusters_match(got, want, 1e-8), entry.name + " spectrum differs from its table row");
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 30.0, fmt::format("runtime {:.2f} s >= 30 s", elapsed));
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome check_exhaustive_scan() {
  Outcome o;
  const auto start = Clock::now();
  const double c5 = (3 - std::sqrt(5.0)) / 10;
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t lemma = 0, theorem = 0;
    double max_ratio = 0;
#ifdef TRIFREE_CLI
    const auto r = run_cli(fmt::format("scan --n {} --format json", n));
    o.require(r.status == 0, fmt::format("scan --n {} exited with status {}", n, r.status));
    const auto j = json::parse(r.out);
    lemma = j["lemma_violations"].size();
    theorem = j["theorem_violations"].size();
    max_ratio = j["max_ratio"].get<double>();
#else
    const auto r = explorer::scan_all(n, {explorer::default_workers(), false});
    lemma = r.lemma_violations.size();
    theorem = r.theorem_violations.size();
    max_ratio = r.max_ratio;
#endif
    o.require(lemma == 0, fmt::format("n = {}: {} lemma violations", n, lemma));
    o.require(theorem == 0, fmt::format("n = {}: {} theorem violations", n, theorem));
    o.require(max_ratio <= bounds::kTheoremConstant + 1e-9, fmt::format("n = {}: max ratio above 3 - 2 sqrt 2", n));
    if (n == 5)
      o.require(std::abs(max_ratio - c5) <= 1e-9, fmt::format("n = 5: max ratio {:.12f}, want {:.12f}", max_ratio, c5));
  }
  const double elapsed = seconds_since(start);
  o.require(elapsed < 300.0, fmt::format("runtime {:.1f} s >= 300 s", elapsed));
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome check_fmax() {
  Outcome o;
  const auto r = bounds::f_max();
  const double a = 1 - 1 / std::sqrt(2.0), v = 3 - 2 * std::sqrt(2.0);
  o.require(std::abs(r.argmax - a) <= 1e-12, "closed-form argmax off");
  o.require(std::abs(r.value - v) <= 1e-12, "closed-form value off");
  o.require(std::abs(r.search_argmax - a) <= 1e-12, fmt::format("golden-section argmax {:.15f}", r.search_argmax));
  o.require(std::abs(r.search_value - v) <= 1e-12, fmt::format("golden-section value {:.15f}", r.search_value));
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome check_theorem2_chain() {
  Outcome o;
  using exact::QuadSurd;
  using exact::Rational;
  const auto nonexistent = [](srg::ChainVerdict v) {
    return v == srg::ChainVerdict::inertia_contradiction || v == srg::ChainVerdict::chain_contradiction;
  };
  const auto r28 = srg::theorem2_chain({28, 9, 0, 4});
  o.require(r28.triggered && r28.ratio == QuadSurd(Rational(1, 7)), "(28,9,0,4) does not trigger at 1/7");
  o.require(!r28.inertia_ok && nonexistent(r28.verdict), "(28,9,0,4) not refuted by inertia");
  const auto r64 = srg::theorem2_chain({64, 21, 0, 10});
  o.require(r64.triggered && r64.ratio == QuadSurd(Rational(10, 64)), "(64,21,0,10) does not trigger at 10/64");
  o.require(!r64.inertia_ok && nonexistent(r64.verdict), "(64,21,0,10) not refuted by inertia");
  const auto hs = srg::theorem2_chain({100, 22, 0, 6});
  o.require(!hs.triggered, "(100,22,0,6) triggers");
  o.require(hs.inertia_ok && hs.inertia.lhs == hs.inertia.rhs, "(100,22,0,6) inertia not met with equality");
  o.require(hs.verdict == srg::ChainVerdict::not_triggered, "(100,22,0,6) verdict is " + srg::to_string(hs.verdict));
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome check_eigensolver_oracle() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::vector<Graph> suite;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    suite.push_back(brute::random_graph(n, 0.5, rng));
  }
  double worst = 0;
  for (const Graph& g : suite) {
    auto got = spectral::spectrum(g).values;
    auto want = oracle::eigenvalues(brute::matrix(g));
    if (got.size() != want.size()) {
      o.require(false, "eigenvalue count mismatch");
      continue;
    }
    for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - want[i]));
  }
  o.require(worst <= 1e-8, fmt::format("worst deviation from characteristic-polynomial roots {:.3e}", worst));
  for (const auto& entry : constructions::named_graphs()) suite.push_back(entry.build());
  for (const Graph& g : suite) {
    const auto t = spectral::trace_identity_report(g, spectral::spectrum(g));
    const double tol = 1e-8 * g.order() * g.order();
    o.require(std::abs(t.residual1) <= tol && std::abs(t.residual2) <= tol && std::abs(t.residual3) <= tol,
              fmt::format("trace identity off on graph {}", encode_graph6(g)));
  }
  return o;
}

// --- 8 ---------------------------------------------------------------------

Outcome check_regular_identity() {
  Outcome o;
  for (const auto& entry : constructions::named_graphs()) {
    const Graph g = entry.build();
    const auto s = spectral::spectrum(g);
    const double q = spectral::signless_laplacian_min(g);
    o.require(std::abs(q - (s.largest() + s.smallest())) <= 1e-8, entry.name + ": q_min differs from mu1 + mu_n");
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 40);
    const Graph g = constructions::random_triangle_free(n, seed, constructions::RandomModel::bipartite);
    const auto s = spectral::spectrum(g);
    o.require(std::abs(s.largest() + s.smallest()) <= 1e-8, fmt::format("bipartite seed {}: mu1 + mu_n != 0", seed));
  }
  return o;
}

// --- 9 ---------------------------------------------------------------------

Outcome check_graph6_round_trip() {
  Outcome o;
  std::uint64_t checked = 0;
  for (int n = 0; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1U) e.push_back(pairs[b]);
      const Graph g(n, e);
      if (!(decode_graph6(encode_graph6(g)) == g)) o.require(false, "round trip fails for " + encode_graph6(g));
      ++checked;
    }
  }
  o.require(checked == 1 + 1 + 2 + 8 + 64 + 1024 + 32768, "exhaustive enumeration size is wrong");
  std::mt19937_64 rng(777);
  for (int i = 0; i < 1000; ++i) {
    const int n = static_cast<int>(rng() % 51);
    const Graph g = brute::random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    if (!(decode_graph6(encode_graph6(g)) == g)) o.require(false, "round trip fails for " + encode_graph6(g));
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "table reproduction (srg-table --n-max 816 --tier basic --diff-paper)", check_table_reproduction},
      {2, "Higman-Sims graph: SRG(100,22,0,6), spectrum, ratio 14/100", check_higman_sims},
      {3, "named-graph spectra match their table rows", check_named_spectra},
      {4, "exhaustive scan n <= 7: no violations, n = 5 maximum (3-sqrt5)/10", check_exhaustive_scan},
      {5, "f_max = (1 - 1/sqrt2, 3 - 2 sqrt2), cross-checked by golden section", check_fmax},
      {6, "nonexistence chain for (28,9,0,4), (64,21,0,10); (100,22,0,6) untriggered", check_theorem2_chain},
      {7, "eigensolver vs characteristic-polynomial oracle; trace identities", check_eigensolver_oracle},
      {8, "signless Laplacian identity on regular graphs; bipartite symmetry", check_regular_identity},
      {9, "graph6 round trip (exhaustive n <= 6, 1000 random n <= 50)", check_graph6_round_trip},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: trifree_acceptance [--only N]\n";
      return 2;
    }
  }
  if (only != 0 && (only < 1 || only > static_cast<int>(criteria.size()))) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    std::cout << fmt::format("[{}] criterion {}: {} ({:.2f} s)\n", out.pass ? "PASS" : "FAIL", c.id, c.title,
                             seconds_since(start));
    for (const auto& note : out.notes) std::cout << "       " << note << "\n";
    if (!out.pass) ++failed;
  }
  std::cout.flush();
  return failed == 0 ? 0 : 1;
}
