#include "trifree/srg.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include <fmt/format.h>

#include "trifree/data.hpp"
#include "trifree/errors.hpp"

namespace trifree::srg {

using exact::BigInt;

std::string SrgParams::to_string() const { return fmt::format("({},{},{},{})", n, k, a, b); }

bool SrgParams::satisfies_invariants() const {
  return 0 < k && k < n && 0 <= a && a < k && b >= 1 && k * (k - a - 1) == (n - k - 1) * b;
}

Recognition srg_recognize(const Graph& g) {
  if (g.order() < 2) throw PreconditionError("strong regularity needs at least 2 vertices");
  const auto stats = degree_stats(g);
  if (!stats.is_regular)
    return {std::nullopt, fmt::format("not regular (degrees {}..{})", stats.min_degree, stats.max_degree)};
  const int n = g.order(), k = *stats.degree;
  if (k == 0) return {std::nullopt, "edgeless"};
  if (k == n - 1) return {std::nullopt, "complete graph"};

  std::optional<int> a, b;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int common = g.common_neighbors(u, v);
      auto& slot = g.adjacent(u, v) ? a : b;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        return {std::nullopt, fmt::format("{} pairs have {} and {} common neighbours",
                                          g.adjacent(u, v) ? "adjacent" : "non-adjacent", *slot, common)};
      }
    }
  }
  if (*b == 0) return {std::nullopt, "disconnected (non-adjacent pairs share no neighbours)"};
  return {SrgParams{n, k, *a, *b}, {}};
}

SrgEigenData srg_eigen(const SrgParams& p) {
  if (!p.satisfies_invariants())
    throw PreconditionError(fmt::format("{} violates 0 < k < n, 0 <= a < k, b >= 1 or k(k-a-1) = (n-k-1)b",
                                        p.to_string()));
  const BigInt disc = BigInt(p.a - p.b) * (p.a - p.b) + 4 * BigInt(p.k - p.b);
  if (disc <= 0) throw InfeasibleError(fmt::format("{}: non-positive discriminant", p.to_string()));

  SrgEigenData e;
  const QuadSurd root = QuadSurd::sqrt(disc);
  e.theta1 = (QuadSurd(p.a - p.b) + root) / Rational(2);
  e.theta2 = (QuadSurd(p.a - p.b) - root) / Rational(2);

  const BigInt excess = BigInt(2 * p.k) + BigInt(p.n - 1) * (p.a - p.b);
  BigInt s;
  if (exact::is_perfect_square(disc, &s)) {
    const Rational m1 = (Rational(p.n - 1) - Rational(excess) / Rational(s)) / 2;
    const Rational m2 = Rational(p.n - 1) - m1;
    if (boost::multiprecision::denominator(m1) != 1 || m1 <= 0 || m2 <= 0)
      throw InfeasibleError(fmt::format("{}: multiplicities {} and {} are not positive integers", p.to_string(),
                                        exact::to_string(m1), exact::to_string(m2)));
    e.m1 = static_cast<std::int64_t>(boost::multiprecision::numerator(m1));
    e.m2 = static_cast<std::int64_t>(boost::multiprecision::numerator(m2));
  } else {
    if (excess != 0 || (p.n - 1) % 2 != 0)
      throw InfeasibleError(fmt::format("{}: irrational eigenvalues without equal integral multiplicities",
                                        p.to_string()));
    e.m1 = e.m2 = (p.n - 1) / 2;
    e.conference = true;
  }

  const QuadSurd trace = QuadSurd(p.k) + QuadSurd(e.m1) * e.theta1 + QuadSurd(e.m2) * e.theta2;
  if (trace.sign() != 0 || e.theta1.sign() < 0 || e.theta2.sign() >= 0)
    throw InfeasibleError(fmt::format("{}: eigen data fails the trace or sign conditions", p.to_string()));
  return e;
}

std::vector<std::string> FeasibilityReport::failed_extended() const {
  std::vector<std::string> out;
  for (const auto& c : conditions)
    if ((c.name.starts_with("krein") || c.name.starts_with("absolute")) && !c.passed) out.push_back(c.name);
  return out;
}

FeasibilityReport feasibility(const SrgParams& p, Tier tier) {
  FeasibilityReport r;
  r.params = p;
  r.tier = tier;

  const BigInt lhs = BigInt(p.k) * (p.k - p.a - 1), rhs = BigInt(p.n - p.k - 1) * p.b;
  r.conditions.push_back({"counting-identity", lhs == rhs, true,
                          fmt::format("k(k-a-1) = {}, (n-k-1)b = {}", lhs.str(), rhs.str())});
  const bool in_range = 0 < p.b && p.b <= p.k && p.k < p.n && 0 <= p.a && p.a < p.k;
  r.conditions.push_back({"parameter-range", in_range, true, "0 < b <= k < n, 0 <= a < k"});
  r.conditions.push_back({"not-complete-multipartite", p.k != p.b, true, "k != b"});

  Condition integral{"integral-multiplicities", false, true, {}};
  if (lhs == rhs && in_range) {
    try {
      r.eigen = srg_eigen(p);
      integral.passed = true;
      integral.detail = fmt::format("m1 = {}, m2 = {}", r.eigen->m1, r.eigen->m2);
    } catch (const InfeasibleError& e) {
      integral.detail = e.what();
    }
  } else {
    integral.evaluated = false;
    integral.detail = "skipped: identity or range failed";
  }
  r.conditions.push_back(integral);
  r.basic_passed = std::all_of(r.conditions.begin(), r.conditions.end(), [](const Condition& c) { return c.passed; });

  if (tier == Tier::extended) {
    if (!r.eigen) {
      for (const char* name : {"krein-1", "krein-2", "absolute-bound-1", "absolute-bound-2"})
        r.conditions.push_back({name, false, false, "skipped: no eigen data"});
    } else {
      const auto& e = *r.eigen;
      const QuadSurd k(p.k), one(1), two(2);
      const QuadSurd& t1 = e.theta1;
      const QuadSurd& t2 = e.theta2;
      const QuadSurd k1_lhs = (t1 + one) * (k + t1 + two * t1 * t2);
      const QuadSurd k1_rhs = (k + t1) * (t2 + one) * (t2 + one);
      const QuadSurd k2_lhs = (t2 + one) * (k + t2 + two * t1 * t2);
      const QuadSurd k2_rhs = (k + t2) * (t1 + one) * (t1 + one);
      r.conditions.push_back({"krein-1", k1_lhs <= k1_rhs, true,
                              fmt::format("{} <= {}", k1_lhs.to_string(), k1_rhs.to_string())});
      r.conditions.push_back({"krein-2", k2_lhs <= k2_rhs, true,
                              fmt::format("{} <= {}", k2_lhs.to_string(), k2_rhs.to_string())});
      int index = 1;
      for (std::int64_t m : {e.m1, e.m2}) {
        const BigInt cap = BigInt(m) * (m + 3) / 2;
        r.conditions.push_back({fmt::format("absolute-bound-{}", index++), BigInt(p.n) <= cap, true,
                                fmt::format("n = {} <= m(m+3)/2 = {}", p.n, cap.str())});
      }
    }
    r.extended_passed = r.failed_extended().empty();
  }
  return r;
}

std::string to_string(Existence e) {
  switch (e) {
    case Existence::yes: return "yes";
    case Existence::no: return "no";
    case Existence::unknown: break;
  }
  return "unknown";
}

Existence parse_existence(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "yes") return Existence::yes;
  if (t == "no") return Existence::no;
  if (t == "?" || t == "unknown") return Existence::unknown;
  throw ParseError("unknown existence value \"" + std::string(text) + "\"");
}

std::vector<ExistenceEntry> parse_existence_annotations(std::string_view text) {
  std::vector<ExistenceEntry> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    ExistenceEntry entry;
    char open = 0, c1 = 0, c2 = 0, c3 = 0, close = 0;
    std::istringstream fields(line);
    std::string existence;
    if (!(fields >> open >> entry.params.n >> c1 >> entry.params.k >> c2 >> entry.params.a >> c3 >>
          entry.params.b >> close >> existence) ||
        open != '(' || c1 != ',' || c2 != ',' || c3 != ',' || close != ')')
      throw ParseError(fmt::format("existence annotation line {} is malformed", line_no));
    entry.existence = parse_existence(existence);
    std::getline(fields >> std::ws, entry.note);
    out.push_back(std::move(entry));
  }
  return out;
}

const std::vector<ExistenceEntry>& existence_annotations() {
  static const std::vector<ExistenceEntry> entries = parse_existence_annotations(data::srg_existence());
  return entries;
}

ExistenceEntry lookup_existence(const SrgParams& params) {
  for (const auto& e : existence_annotations())
    if (e.params == params) return e;
  return {params, Existence::unknown, {}};
}

TableRow make_row(const SrgParams& params) {
  TableRow row;
  row.params = params;
  row.eigen = srg_eigen(params);
  row.ratio = (QuadSurd(params.k) + row.eigen.theta2) / Rational(params.n);
  row.ratio_approx = row.ratio.to_double();
  const auto existence = lookup_existence(params);
  row.existence = existence.existence;
  row.existence_note = existence.note;
  const auto extended = feasibility(params, Tier::extended);
  row.extended_passed = extended.extended_passed;
  row.failed_extended = extended.failed_extended();
  return row;
}

namespace {

std::vector<TableRow> enumerate_range(std::int64_t n_lo, std::int64_t n_hi, Tier tier) {
  std::vector<TableRow> rows;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    for (std::int64_t k = 1; k < n - 1; ++k) {
      // a = 0: k(k-1) = (n-k-1) b
      const std::int64_t lhs = k * (k - 1), denom = n - k - 1;
      if (lhs == 0 || lhs % denom != 0) continue;
      const std::int64_t b = lhs / denom;
      if (b >= k) continue;
      const SrgParams p{n, k, 0, b};
      if (feasibility(p, tier).passed()) rows.push_back(make_row(p));
    }
  }
  return rows;
}

}  // namespace

std::vector<TableRow> enumerate_feasible(std::int64_t n_max, Tier tier, int workers) {
  if (n_max < 5) throw PreconditionError("enumeration needs n_max >= 5");
  if (n_max > kHardMaxOrder) throw PreconditionError(fmt::format("n_max is capped at {}", kHardMaxOrder));
  workers = std::max(1, workers);

  // Cost grows like n^2, so split the range into equal-area chunks.
  std::vector<std::future<std::vector<TableRow>>> parts;
  std::int64_t lo = 5;
  for (int w = 0; w < workers && lo <= n_max; ++w) {
    const double frac = static_cast<double>(w + 1) / workers;
    std::int64_t hi = w + 1 == workers ? n_max
                                       : std::max(lo, static_cast<std::int64_t>(std::sqrt(frac) * n_max));
    parts.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async, enumerate_range, lo,
                               std::min(hi, n_max), tier));
    lo = hi + 1;
  }
  std::vector<TableRow> rows;
  for (auto& part : parts) {
    auto chunk = part.get();
    rows.insert(rows.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
    return std::tie(x.params.n, x.params.k) < std::tie(y.params.n, y.params.k);
  });
  return rows;
}

std::string to_string(ChainVerdict v) {
  switch (v) {
    case ChainVerdict::not_triggered: return "not-triggered";
    case ChainVerdict::inertia_contradiction: return "inertia-contradiction: no such graph";
    case ChainVerdict::chain_contradiction: return "chain-contradiction: no such graph";
    case ChainVerdict::triggered_consistent: return "triggered-consistent";
  }
  return "unknown";
}

Rational chain_threshold() { return Rational(7, 50); }

Rational chain_order_bound() {
  const Rational t = chain_threshold();
  return Rational(16) / (t * t);
}

ChainReport theorem2_chain(const SrgParams& params) {
  if (params.a != 0)
    throw PreconditionError(fmt::format("{}: the chain applies to triangle-free parameters (a = 0)", params.to_string()));
  const auto basic = feasibility(params, Tier::basic);
  if (!basic.passed()) throw InfeasibleError(fmt::format("{} fails basic feasibility", params.to_string()));
  const auto& e = *basic.eigen;

  ChainReport r;
  r.params = params;
  const QuadSurd n(params.n), k(params.k);
  r.ratio = (k + e.theta2) / Rational(params.n);
  r.r = -e.theta2;
  r.x = r.r / Rational(params.k);

  ChainCheck trigger{"(k+theta2)/n > 7/50", r.ratio, QuadSurd(chain_threshold()), ">", false};
  trigger.holds = trigger.lhs > trigger.rhs;
  r.triggered = trigger.holds;
  r.checks.push_back(trigger);

  ChainCheck x_check{"x > 1/5", r.x, QuadSurd(Rational(1, 5)), ">", false};
  x_check.holds = x_check.lhs > x_check.rhs;
  r.checks.push_back(x_check);

  ChainCheck order_check{"n > r^2", n, r.r * r.r, ">", false};
  order_check.holds = order_check.lhs > order_check.rhs;
  r.checks.push_back(order_check);

  ChainCheck cap_check{"n < 16/(7/50)^2", n, QuadSurd(chain_order_bound()), "<", false};
  cap_check.holds = cap_check.lhs < cap_check.rhs;
  r.checks.push_back(cap_check);

  r.inertia = {"m_n >= k", QuadSurd(e.m2), k, ">=", e.m2 >= params.k};
  r.inertia_ok = r.inertia.holds;

  const bool chain_ok = std::all_of(r.checks.begin() + 1, r.checks.end(), [](const ChainCheck& c) { return c.holds; });
  if (!r.inertia_ok) r.verdict = ChainVerdict::inertia_contradiction;
  else if (!r.triggered) r.verdict = ChainVerdict::not_triggered;
  else if (!chain_ok) r.verdict = ChainVerdict::chain_contradiction;
  else r.verdict = ChainVerdict::triggered_consistent;
  return r;
}

}  // namespace trifree::srg
