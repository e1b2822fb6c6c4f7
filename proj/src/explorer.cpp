#include "trifree/explorer.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <random>
#include <thread>

#include <fmt/format.h>

#include "mutable_graph.hpp"
#include "trifree/bounds.hpp"
#include "trifree/constructions.hpp"
#include "trifree/spectral.hpp"

namespace trifree::explorer {

namespace {

using Clock = std::chrono::steady_clock;

struct Candidate {
  double ratio = -1e300;
  std::uint64_t mask = 0;
  bool set = false;

  void offer(double r, std::uint64_t m) {
    if (!set || r > ratio || (r == ratio && m < mask)) {
      ratio = r;
      mask = m;
      set = true;
    }
  }
};

struct ChunkResult {
  std::uint64_t scanned = 0;
  std::uint64_t triangle_free = 0;
  std::vector<Violation> lemma;
  std::vector<Violation> theorem;
  Candidate best;
};

class MaskScanner {
public:
  MaskScanner(int n, double tol) : n_(n), tol_(tol) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs_.push_back({i, j});
  }

  int pair_count() const { return static_cast<int>(pairs_.size()); }

  Graph graph_of(std::uint64_t mask) const {
    std::vector<Edge> edges;
    for (int b = 0; b < pair_count(); ++b)
      if ((mask >> b) & 1U) edges.emplace_back(pairs_[b][0], pairs_[b][1]);
    return Graph(n_, edges);
  }

  // Masks whose top `high_bits` bits equal `prefix`.
  void scan_chunk(std::uint64_t prefix, int high_bits, ChunkResult& out) {
    const int low = pair_count() - high_bits;
    adj_.fill(0);
    for (int b = 0; b < high_bits; ++b) {
      if (!((prefix >> b) & 1U)) continue;
      const auto [u, v] = pairs_[low + b];
      if (adj_[u] & adj_[v]) {
        out.scanned += std::uint64_t{1} << low;
        return;
      }
      adj_[u] |= 1U << v;
      adj_[v] |= 1U << u;
    }
    descend(0, low, prefix << low, out);
  }

private:
  void descend(int bit, int low, std::uint64_t mask, ChunkResult& out) {
    if (bit == low) {
      visit(mask, out);
      return;
    }
    descend(bit + 1, low, mask, out);
    const auto [u, v] = pairs_[bit];
    if (adj_[u] & adj_[v]) {
      out.scanned += std::uint64_t{1} << (low - bit - 1);
      return;
    }
    adj_[u] |= 1U << v;
    adj_[v] |= 1U << u;
    descend(bit + 1, low, mask | (std::uint64_t{1} << bit), out);
    adj_[u] &= ~(1U << v);
    adj_[v] &= ~(1U << u);
  }

  void visit(std::uint64_t mask, ChunkResult& out) {
    ++out.scanned;
    ++out.triangle_free;
    std::vector<double> a(static_cast<std::size_t>(n_ * n_), 0.0);
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if ((adj_[u] >> v) & 1U) a[u * n_ + v] = 1.0;
    spectral::Spectrum s;
    s.values = spectral::symmetric_eigenvalues(std::move(a), n_);
    const auto report = bounds::evaluate_bounds(n_, s, tol_);
    if (!report.lemma_holds)
      out.lemma.push_back({encode_graph6(graph_of(mask)), report.lemma_lhs, report.lemma_rhs});
    if (!report.theorem_holds())
      out.theorem.push_back({encode_graph6(graph_of(mask)), report.mu1 + report.mun, bounds::kTheoremConstant * n_});
    out.best.offer(report.ratio, mask);
  }

  int n_;
  double tol_;
  std::vector<std::array<int, 2>> pairs_;
  std::array<std::uint32_t, kMaxScanOrder> adj_{};
};

}  // namespace

int default_workers() {
  if (const char* env = std::getenv("TRIFREE_WORKERS")) {
    const int w = std::atoi(env);
    if (w > 0) return w;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ScanReport scan_all(int n, const ScanOptions& options) {
  const int cap = options.allow_n8 ? kMaxScanOrder : kDefaultScanOrderCap;
  if (n < 1 || n > cap)
    throw PreconditionError(fmt::format("scan_all supports 1 <= n <= {}{}", cap,
                                        options.allow_n8 ? "" : " (n = 8 must be enabled explicitly)"));
  const auto start = Clock::now();
  const int pairs = n * (n - 1) / 2;
  const int high_bits = std::min(pairs, 8);
  const std::uint64_t chunks = std::uint64_t{1} << high_bits;
  const int workers = static_cast<int>(std::clamp<std::uint64_t>(options.workers, 1, chunks));

  std::vector<ChunkResult> results(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    MaskScanner scanner(n, options.tol);
    const std::uint64_t lo = chunks * w / workers, hi = chunks * (w + 1) / workers;
    for (std::uint64_t c = lo; c < hi; ++c) scanner.scan_chunk(c, high_bits, results[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  ScanReport report;
  report.n = n;
  Candidate best;
  for (auto& r : results) {
    report.graphs_scanned += r.scanned;
    report.triangle_free_count += r.triangle_free;
    report.lemma_violations.insert(report.lemma_violations.end(), r.lemma.begin(), r.lemma.end());
    report.theorem_violations.insert(report.theorem_violations.end(), r.theorem.begin(), r.theorem.end());
    if (r.best.set) best.offer(r.best.ratio, r.best.mask);
  }
  report.max_ratio = best.ratio;
  report.argmax_graph = encode_graph6(MaskScanner(n, options.tol).graph_of(best.mask));
  report.runtime_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

ScanReport random_search(int n, std::int64_t iterations, std::uint64_t seed, const SearchOptions& options) {
  if (n < 5) throw PreconditionError("random_search needs n >= 5");
  const auto start = Clock::now();
  std::mt19937_64 rng(seed);
  ScanReport report;
  report.n = n;

  auto evaluate = [&](const detail::MutableGraph& g) {
    const Graph frozen = g.freeze();
    const auto s = spectral::spectrum(frozen);
    const auto r = bounds::evaluate_bounds(n, s, options.tol);
    ++report.graphs_scanned;
    ++report.triangle_free_count;
    if (!r.lemma_holds) report.lemma_violations.push_back({encode_graph6(frozen), r.lemma_lhs, r.lemma_rhs});
    if (!r.theorem_holds())
      report.theorem_violations.push_back({encode_graph6(frozen), r.mu1 + r.mun, bounds::kTheoremConstant * n});
    if (report.argmax_graph.empty() || r.ratio > report.max_ratio) {
      report.max_ratio = r.ratio;
      report.argmax_graph = encode_graph6(frozen);
    }
    return r.ratio;
  };

  auto fresh = [&] {
    const Graph g = constructions::random_triangle_free(n, rng(), constructions::RandomModel::process);
    detail::MutableGraph m(n);
    for (auto [u, v] : g.edges()) m.add(u, v);
    return m;
  };

  constexpr double plateau = 1e-12;
  detail::MutableGraph current = fresh();
  double current_ratio = evaluate(current);
  int stale = 0;
  std::bernoulli_distribution coin(0.5);

  for (std::int64_t it = 0; it < iterations; ++it) {
    if (stale >= options.restart_after) {
      current = fresh();
      current_ratio = evaluate(current);
      stale = 0;
      continue;
    }
    std::vector<Edge> additions;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (current.can_add(u, v)) additions.emplace_back(u, v);
    const auto present = current.edges();

    const bool add = !additions.empty() && (present.empty() || coin(rng));
    if (!add && present.empty()) break;
    const auto& pool = add ? additions : present;
    const Edge e = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    if (add) current.add(e.first, e.second);
    else current.remove(e.first, e.second);

    const double ratio = evaluate(current);
    if (ratio >= current_ratio - plateau) {
      stale = ratio > current_ratio + plateau ? 0 : stale + 1;
      current_ratio = ratio;
    } else {
      if (add) current.remove(e.first, e.second);
      else current.add(e.first, e.second);
      ++stale;
    }
  }
  report.runtime_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

}  // namespace trifree::explorer
