#include <algorithm>
#include <bit>

#include "trifree/bounds.hpp"

namespace trifree::bounds {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& s) {
  int c = 0;
  for (auto w : s) c += std::popcount(w);
  return c;
}

class IndependentSetSearch {
public:
  IndependentSetSearch(const Graph& g, std::int64_t budget)
      : g_(g), words_(g.words_per_row()), budget_(budget) {}

  IndependenceResult run() {
    seed_incumbent();
    Bits all(words_, 0);
    for (int v = 0; v < g_.order(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<int> current;
    expand(all, current);
    IndependenceResult r;
    r.size = static_cast<int>(best_.size());
    r.exact = !aborted_;
    r.expansions = expansions_;
    r.witness = best_;
    std::sort(r.witness.begin(), r.witness.end());
    return r;
  }

private:
  bool independent(const std::vector<int>& set) const {
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = i + 1; j < set.size(); ++j)
        if (g_.adjacent(set[i], set[j])) return false;
    return true;
  }

  // Neighbourhoods are independent in triangle-free graphs; also try a
  // min-degree greedy pass so the incumbent is reasonable everywhere.
  void seed_incumbent() {
    for (int v = 0; v < g_.order(); ++v) {
      auto nb = g_.neighbors(v);
      if (nb.size() > best_.size() && independent(nb)) best_ = std::move(nb);
    }
    std::vector<char> removed(static_cast<std::size_t>(g_.order()), 0);
    std::vector<int> greedy;
    for (;;) {
      int pick = -1, pick_deg = 0;
      for (int v = 0; v < g_.order(); ++v) {
        if (removed[v]) continue;
        int d = 0;
        for (int w : g_.neighbors(v)) d += removed[w] ? 0 : 1;
        if (pick < 0 || d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      if (pick < 0) break;
      greedy.push_back(pick);
      removed[pick] = 1;
      for (int w : g_.neighbors(pick)) removed[w] = 1;
    }
    if (greedy.size() > best_.size()) best_ = std::move(greedy);
  }

  int degree_within(int v, const Bits& p) const {
    auto r = g_.row(v);
    int d = 0;
    for (std::size_t i = 0; i < words_; ++i) d += std::popcount(r[i] & p[i]);
    return d;
  }

  // Number of cliques in a greedy clique cover of G[p]; bounds alpha(G[p]).
  int clique_cover_bound(Bits p) const {
    int cliques = 0;
    for (std::size_t i = 0; i < words_; ++i) {
      while (p[i] != 0) {
        const int v = static_cast<int>(i * 64 + std::countr_zero(p[i]));
        p[i] &= p[i] - 1;
        Bits cand(words_);
        auto rv = g_.row(v);
        for (std::size_t k = 0; k < words_; ++k) cand[k] = p[k] & rv[k];
        for (std::size_t k = 0; k < words_; ++k) {
          while (cand[k] != 0) {
            const int w = static_cast<int>(k * 64 + std::countr_zero(cand[k]));
            p[k] &= ~(std::uint64_t{1} << (w & 63));
            auto rw = g_.row(w);
            for (std::size_t t = 0; t < words_; ++t) cand[t] &= rw[t];
          }
        }
        ++cliques;
      }
    }
    return cliques;
  }

  void take(int v, Bits& p, std::vector<int>& current) const {
    current.push_back(v);
    p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    auto rv = g_.row(v);
    for (std::size_t i = 0; i < words_; ++i) p[i] &= ~rv[i];
  }

  void expand(Bits p, std::vector<int>& current) {
    if (aborted_) return;
    if (++expansions_ > budget_) {
      aborted_ = true;
      return;
    }
    const std::size_t depth = current.size();

    // Vertices of degree <= 1 in G[p] belong to some maximum independent set.
    int branch = -1, branch_deg = -1;
    for (bool reduced = true; reduced;) {
      reduced = false;
      branch = -1;
      branch_deg = -1;
      for (std::size_t i = 0; i < words_ && !reduced; ++i) {
        for (auto w = p[i]; w != 0; w &= w - 1) {
          const int v = static_cast<int>(i * 64 + std::countr_zero(w));
          const int d = degree_within(v, p);
          if (d <= 1) {
            take(v, p, current);
            reduced = true;
            break;
          }
          if (d > branch_deg) {
            branch = v;
            branch_deg = d;
          }
        }
      }
    }

    if (branch < 0) {
      if (current.size() > best_.size()) best_ = current;
    } else if (static_cast<int>(current.size()) + clique_cover_bound(p) > static_cast<int>(best_.size())) {
      Bits with = p;
      take(branch, with, current);
      expand(std::move(with), current);
      current.pop_back();
      p[branch >> 6] &= ~(std::uint64_t{1} << (branch & 63));
      if (static_cast<int>(current.size()) + popcount(p) > static_cast<int>(best_.size()))
        expand(std::move(p), current);
    }
    current.resize(depth);
  }

  const Graph& g_;
  std::size_t words_;
  std::int64_t budget_;
  std::int64_t expansions_ = 0;
  bool aborted_ = false;
  std::vector<int> best_;
};

}  // namespace

IndependenceResult independence_number(const Graph& g, std::int64_t budget) {
  return IndependentSetSearch(g, budget).run();
}

}  // namespace trifree::bounds
