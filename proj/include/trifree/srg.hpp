#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trifree/exact.hpp"
#include "trifree/graph.hpp"

namespace trifree::srg {

using exact::QuadSurd;
using exact::Rational;

/// Parameters (n, k, a, b) of a strongly regular graph: n vertices, k-regular,
/// adjacent pairs share a neighbours, non-adjacent pairs share b.
struct SrgParams {
  std::int64_t n = 0, k = 0, a = 0, b = 0;

  auto operator<=>(const SrgParams&) const = default;
  std::string to_string() const;  // "(n,k,a,b)"
  /// 0 < k < n, 0 <= a < k, b >= 1 and k(k - a - 1) = (n - k - 1) b.
  bool satisfies_invariants() const;
};

inline constexpr std::int64_t kHardMaxOrder = 10000;

/// Restricted eigenvalues theta1 > theta2 with multiplicities m1, m2.
struct SrgEigenData {
  QuadSurd theta1, theta2;
  std::int64_t m1 = 0, m2 = 0;
  bool conference = false;  // irrational eigenvalues, m1 = m2 = (n - 1) / 2
};

struct Recognition {
  std::optional<SrgParams> params;
  std::string reason;  // why the graph is not strongly regular
};

/// Throws PreconditionError for n < 2.
Recognition srg_recognize(const Graph& g);

/// Throws PreconditionError when params violate the SrgParams invariants and
/// InfeasibleError when the multiplicities are not positive integers.
SrgEigenData srg_eigen(const SrgParams& params);

enum class Tier { basic, extended };

struct Condition {
  std::string name;
  bool passed = false;
  bool evaluated = true;
  std::string detail;
};

struct FeasibilityReport {
  SrgParams params;
  Tier tier = Tier::basic;
  std::vector<Condition> conditions;
  std::optional<SrgEigenData> eigen;
  bool basic_passed = false;
  bool extended_passed = false;  // only meaningful for Tier::extended

  bool passed() const { return tier == Tier::basic ? basic_passed : basic_passed && extended_passed; }
  /// Names of failed extended-tier conditions.
  std::vector<std::string> failed_extended() const;
};

/// Basic: counting identity, 0 < b <= k < n with a < k, k != b, positive
/// integral multiplicities. Extended adds both Krein conditions and the
/// absolute bound n <= m_i (m_i + 3) / 2. Exact arithmetic throughout.
FeasibilityReport feasibility(const SrgParams& params, Tier tier);

enum class Existence { yes, no, unknown };
std::string to_string(Existence e);
Existence parse_existence(std::string_view text);

struct ExistenceEntry {
  SrgParams params;
  Existence existence = Existence::unknown;
  std::string note;
};

/// Curated existence annotations ("(n,k,a,b) existence note" per line).
const std::vector<ExistenceEntry>& existence_annotations();
std::vector<ExistenceEntry> parse_existence_annotations(std::string_view text);
ExistenceEntry lookup_existence(const SrgParams& params);

struct TableRow {
  SrgParams params;
  SrgEigenData eigen;
  QuadSurd ratio;  // (k + theta2) / n
  double ratio_approx = 0;
  Existence existence = Existence::unknown;
  std::string existence_note;
  bool extended_passed = false;
  std::vector<std::string> failed_extended;
};

TableRow make_row(const SrgParams& params);

/// All triangle-free (n, k, 0, b) with n <= n_max passing the tier's
/// conditions, sorted by (n, k). The n-range is split across `workers`.
std::vector<TableRow> enumerate_feasible(std::int64_t n_max, Tier tier, int workers = 1);

struct ChainCheck {
  std::string name;
  QuadSurd lhs, rhs;
  std::string relation;  // ">", "<", ">="
  bool holds = false;
};

enum class ChainVerdict {
  not_triggered,          // ratio <= 7/50 and inertia holds
  inertia_contradiction,  // m_n < k: no such graph
  chain_contradiction,    // triggered but a derived inequality fails: no such graph
  triggered_consistent,   // triggered and every check passes
};
std::string to_string(ChainVerdict v);

struct ChainReport {
  SrgParams params;
  QuadSurd ratio;  // (k + theta2) / n
  QuadSurd r;      // -theta2
  QuadSurd x;      // r / k
  bool triggered = false;
  std::vector<ChainCheck> checks;  // trigger first, then the derived chain
  ChainCheck inertia;              // m_n >= k
  bool inertia_ok = false;
  ChainVerdict verdict = ChainVerdict::not_triggered;
};

/// Threshold 7/50 and bound 16 / (7/50)^2 = 40000/49 as exact rationals.
Rational chain_threshold();
Rational chain_order_bound();

/// Requires a = 0 (PreconditionError) and basic feasibility (InfeasibleError).
ChainReport theorem2_chain(const SrgParams& params);

// --- table rendering -------------------------------------------------------

enum class Format { text, csv, json };

/// floor(1000 x) / 1000 and round-half-up to 3 decimals, as decimal strings.
std::string truncate3(const QuadSurd& x);
std::string round3(const QuadSurd& x);

/// (k + theta2) / n rendered unreduced over n as in the original table.
std::string ratio_label(const TableRow& row);

std::string render_table(const std::vector<TableRow>& rows, Format format);

// --- comparison with the published table -----------------------------------

struct PaperRow {
  SrgParams params;
  QuadSurd theta1, theta2;
  std::int64_t m1 = 0, m2 = 0;
  QuadSurd ratio;
  std::string ratio_text;
  std::string appr;
  Existence existence = Existence::unknown;
};

/// Transcription of the published 24-row table, typos included.
const std::vector<PaperRow>& paper_table();
std::vector<PaperRow> parse_paper_table(std::string_view csv);

struct PaperRowDiff {
  PaperRow paper;
  bool found = false;
  bool core_match = false;  // n, k, b, theta1, theta2, ratio
  bool eigen_match = false;
  bool ratio_match = false;
  QuadSurd computed_ratio;
  bool multiplicities_match = false;
  std::int64_t computed_m1 = 0, computed_m2 = 0;
  bool appr_matches_truncation = false;
  bool appr_matches_rounding = false;
  std::string computed_truncated, computed_rounded;
  bool existence_matches = false;
};

struct ExtraRow {
  TableRow row;
  std::vector<std::string> eliminated_by;  // failed extended conditions
  bool inertia_ok = true;
  bool open = false;  // nothing implemented here rules it out
};

struct TableDiff {
  std::vector<PaperRowDiff> paper_rows;
  std::vector<ExtraRow> extras;

  bool all_paper_rows_found() const;
  bool all_core_match() const;
  std::vector<SrgParams> multiplicity_discrepancies() const;
  std::vector<SrgParams> appr_discrepancies() const;  // matches neither rounding
};

TableDiff diff_against_paper(const std::vector<TableRow>& computed,
                             const std::vector<PaperRow>& paper = paper_table());

std::string render_diff(const TableDiff& diff, Format format);

/// Computed (k + theta2) / n written over n ("45/650"), for comparison with a printed cell.
std::string ratio_over_n(const PaperRowDiff& d);

}  // namespace trifree::srg
