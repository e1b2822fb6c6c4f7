#include <algorithm>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "trifree/data.hpp"
#include "trifree/errors.hpp"
#include "trifree/json.hpp"
#include "trifree/srg.hpp"

namespace trifree::srg {

using exact::BigInt;

namespace {

std::string decimal3(const BigInt& thousandths) {
  const bool negative = thousandths < 0;
  const BigInt mag = negative ? BigInt(-thousandths) : thousandths;
  return fmt::format("{}{}.{:0>3}", negative ? "-" : "", BigInt(mag / 1000).str(), BigInt(mag % 1000).str());
}

// Decimal digits to an integer; cpp_int would read a leading 0 as octal.
BigInt decimal_digits(std::string_view digits) {
  const auto first = digits.find_first_not_of('0');
  if (first == std::string_view::npos) return 0;
  return BigInt(std::string(digits.substr(first)));
}

Rational parse_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(decimal_digits(text));
  const auto frac = text.substr(dot + 1);
  BigInt scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rational(decimal_digits(text.substr(0, dot))) + Rational(decimal_digits(frac), scale);
}

std::string paper_existence(Existence e) {
  switch (e) {
    case Existence::yes: return "Yes";
    case Existence::no: return "No";
    case Existence::unknown: break;
  }
  return "?";
}

// Display width in code points.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

std::string render_aligned(const std::vector<std::vector<std::string>>& lines) {
  std::vector<std::size_t> widths;
  for (const auto& line : lines) {
    widths.resize(std::max(widths.size(), line.size()), 0);
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], width(line[c]));
  }
  std::string out;
  for (const auto& line : lines) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) text += "  ";
      text += std::string(widths[c] - width(line[c]), ' ') + line[c];
    }
    out += text + '\n';
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

std::string truncate3(const QuadSurd& x) { return decimal3((x * QuadSurd(1000)).floor()); }

std::string round3(const QuadSurd& x) {
  return decimal3((x * QuadSurd(1000) + QuadSurd(Rational(1, 2))).floor());
}

std::string ratio_label(const TableRow& row) {
  const QuadSurd numerator = QuadSurd(row.params.k) + row.eigen.theta2;
  if (numerator.is_rational() && boost::multiprecision::denominator(numerator.as_rational()) == 1)
    return fmt::format("{}/{}", boost::multiprecision::numerator(numerator.as_rational()).str(), row.params.n);
  return row.ratio.to_string();
}

std::string render_table(const std::vector<TableRow>& rows, Format format) {
  if (format == Format::json) return nlohmann::json(rows).dump(2) + '\n';

  if (format == Format::csv) {
    std::string out =
        "n,k,a,b,theta1,theta2,m1,m2,ratio,ratio_reduced,appr,appr_trunc,existence,extended_feasible,failed_extended\n";
    for (const auto& r : rows) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.params.n, r.params.k, r.params.a,
                         r.params.b, r.eigen.theta1.to_string(), r.eigen.theta2.to_string(), r.eigen.m1, r.eigen.m2,
                         ratio_label(r), r.ratio.to_string(), round3(r.ratio), truncate3(r.ratio),
                         to_string(r.existence), r.extended_passed ? "yes" : "no", join(r.failed_extended, ";"));
    }
    return out;
  }

  std::vector<std::vector<std::string>> lines;
  lines.push_back({"n", "k", "a", "b", "θ1", "θ2", "m1", "m2", "(k+θ2)/n", "Appr.", "Existence"});
  std::vector<std::string> footnotes;
  for (const auto& r : rows) {
    std::string appr = round3(r.ratio);
    if (const auto trunc = truncate3(r.ratio); trunc != appr) {
      appr += "*";
      footnotes.push_back(fmt::format("{} {}", r.params.to_string(), trunc));
    }
    lines.push_back({std::to_string(r.params.n), std::to_string(r.params.k), std::to_string(r.params.a),
                     std::to_string(r.params.b), r.eigen.theta1.to_string(), r.eigen.theta2.to_string(),
                     std::to_string(r.eigen.m1), std::to_string(r.eigen.m2), ratio_label(r), appr,
                     paper_existence(r.existence)});
  }
  std::string out = render_aligned(lines);
  if (!footnotes.empty()) out += "* rounded value; truncated to 3 decimals: " + join(footnotes, ", ") + '\n';
  return out;
}

std::vector<PaperRow> parse_paper_table(std::string_view csv) {
  std::vector<PaperRow> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header = true;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 11) throw ParseError(fmt::format("published table line {}: expected 11 columns", line_no));
    try {
      PaperRow row;
      row.params = {std::stoll(f[0]), std::stoll(f[1]), std::stoll(f[2]), std::stoll(f[3])};
      row.theta1 = QuadSurd::parse(f[4]);
      row.theta2 = QuadSurd::parse(f[5]);
      row.m1 = std::stoll(f[6]);
      row.m2 = std::stoll(f[7]);
      row.ratio = QuadSurd::parse(f[8]);
      row.ratio_text = f[8];
      row.appr = f[9];
      row.existence = parse_existence(f[10]);
      rows.push_back(std::move(row));
    } catch (const std::invalid_argument& e) {
      throw ParseError(fmt::format("published table line {}: {}", line_no, e.what()));
    }
  }
  return rows;
}

const std::vector<PaperRow>& paper_table() {
  static const std::vector<PaperRow> rows = parse_paper_table(data::paper_table_csv());
  return rows;
}

bool TableDiff::all_paper_rows_found() const {
  return std::all_of(paper_rows.begin(), paper_rows.end(), [](const PaperRowDiff& d) { return d.found; });
}

bool TableDiff::all_core_match() const {
  return std::all_of(paper_rows.begin(), paper_rows.end(), [](const PaperRowDiff& d) { return d.core_match; });
}

std::vector<SrgParams> TableDiff::multiplicity_discrepancies() const {
  std::vector<SrgParams> out;
  for (const auto& d : paper_rows)
    if (d.found && !d.multiplicities_match) out.push_back(d.paper.params);
  return out;
}

std::vector<SrgParams> TableDiff::appr_discrepancies() const {
  std::vector<SrgParams> out;
  for (const auto& d : paper_rows)
    if (d.found && !d.appr_matches_truncation && !d.appr_matches_rounding) out.push_back(d.paper.params);
  return out;
}

TableDiff diff_against_paper(const std::vector<TableRow>& computed, const std::vector<PaperRow>& paper) {
  TableDiff diff;
  std::map<SrgParams, const TableRow*> by_params;
  for (const auto& row : computed) by_params[row.params] = &row;

  for (const auto& p : paper) {
    PaperRowDiff d;
    d.paper = p;
    if (auto it = by_params.find(p.params); it != by_params.end()) {
      const TableRow& row = *it->second;
      d.found = true;
      d.eigen_match = row.eigen.theta1 == p.theta1 && row.eigen.theta2 == p.theta2;
      d.ratio_match = row.ratio == p.ratio;
      d.computed_ratio = row.ratio;
      d.core_match = d.eigen_match && d.ratio_match;
      d.computed_m1 = row.eigen.m1;
      d.computed_m2 = row.eigen.m2;
      d.multiplicities_match = row.eigen.m1 == p.m1 && row.eigen.m2 == p.m2;
      d.computed_truncated = truncate3(row.ratio);
      d.computed_rounded = round3(row.ratio);
      const Rational printed = parse_decimal(p.appr);
      d.appr_matches_truncation = parse_decimal(d.computed_truncated) == printed;
      d.appr_matches_rounding = parse_decimal(d.computed_rounded) == printed;
      d.existence_matches = row.existence == p.existence;
    }
    diff.paper_rows.push_back(std::move(d));
  }

  for (const auto& row : computed) {
    const bool listed = std::any_of(paper.begin(), paper.end(), [&](const PaperRow& p) { return p.params == row.params; });
    if (listed) continue;
    ExtraRow extra;
    extra.row = row;
    extra.eliminated_by = row.failed_extended;
    extra.inertia_ok = row.eigen.m2 >= row.params.k;
    extra.open = extra.eliminated_by.empty() && extra.inertia_ok;
    diff.extras.push_back(std::move(extra));
  }
  return diff;
}

std::string render_diff(const TableDiff& diff, Format format) {
  if (format == Format::json) return nlohmann::json(diff).dump(2) + '\n';

  if (format == Format::csv) {
    std::string out = "kind,params,published,computed,note\n";
    for (const auto& d : diff.paper_rows) {
      const auto key = d.paper.params.to_string();
      if (!d.found) {
        out += fmt::format("missing,\"{}\",,,published row not produced by the enumeration\n", key);
        continue;
      }
      if (!d.eigen_match) out += fmt::format("eigenvalue-mismatch,\"{}\",,,theta1 or theta2 differ\n", key);
      if (!d.ratio_match)
        out += fmt::format("ratio-mismatch,\"{}\",{},{},\n", key, d.paper.ratio_text, ratio_over_n(d));
      if (!d.multiplicities_match)
        out += fmt::format("multiplicity,\"{}\",m1={} m2={},m1={} m2={},\n", key, d.paper.m1, d.paper.m2,
                           d.computed_m1, d.computed_m2);
      if (!d.appr_matches_truncation && !d.appr_matches_rounding)
        out += fmt::format("appr,\"{}\",{},trunc={} round={},matches neither\n", key, d.paper.appr,
                           d.computed_truncated, d.computed_rounded);
      if (!d.existence_matches)
        out += fmt::format("existence,\"{}\",{},,curated annotation differs\n", key, to_string(d.paper.existence));
    }
    for (const auto& e : diff.extras)
      out += fmt::format("extra,\"{}\",,{},{}\n", e.row.params.to_string(), e.row.ratio.to_string(),
                         e.open ? std::string("open") : "eliminated by " + join(e.eliminated_by, ";") +
                                                            (e.inertia_ok ? "" : (e.eliminated_by.empty() ? "inertia" : ";inertia")));
    return out;
  }

  std::string out;
  const auto found = std::count_if(diff.paper_rows.begin(), diff.paper_rows.end(), [](const auto& d) { return d.found; });
  const auto core = std::count_if(diff.paper_rows.begin(), diff.paper_rows.end(), [](const auto& d) { return d.core_match; });
  out += fmt::format("Comparison with the published table ({} rows)\n", diff.paper_rows.size());
  out += fmt::format("  rows found:                       {}/{}\n", found, diff.paper_rows.size());
  out += fmt::format("  n,k,b,θ1,θ2,(k+θ2)/n exact match: {}/{}\n", core, diff.paper_rows.size());
  for (const auto& d : diff.paper_rows) {
    if (!d.found) out += fmt::format("  missing row {}\n", d.paper.params.to_string());
    else if (!d.eigen_match) out += fmt::format("  eigenvalue mismatch in row {}\n", d.paper.params.to_string());
    else if (!d.ratio_match)
      out += fmt::format("  ratio mismatch in row {}: printed {}, computed {} = {}\n", d.paper.params.to_string(),
                         d.paper.ratio_text, ratio_over_n(d), d.computed_ratio.to_string());
  }
  out += "Multiplicity discrepancies:\n";
  bool any = false;
  for (const auto& d : diff.paper_rows) {
    if (!d.found || d.multiplicities_match) continue;
    any = true;
    out += fmt::format("  {} printed m1={} m2={}, computed m1={} m2={}", d.paper.params.to_string(), d.paper.m1,
                       d.paper.m2, d.computed_m1, d.computed_m2);
    if (d.paper.m1 == d.computed_m2 && d.paper.m2 == d.computed_m1) out += " (transposed)";
    out += '\n';
  }
  if (!any) out += "  none\n";
  out += "Appr. column (printed vs truncated/rounded to 3 decimals):\n";
  any = false;
  for (const auto& d : diff.paper_rows) {
    if (!d.found || d.appr_matches_truncation) continue;
    any = true;
    out += fmt::format("  {} printed {}, truncated {}, rounded {}{}\n", d.paper.params.to_string(), d.paper.appr,
                       d.computed_truncated, d.computed_rounded,
                       d.appr_matches_rounding ? "" : " (matches neither)");
  }
  if (!any) out += "  every printed value is the truncation\n";
  out += "Existence annotations differing from the printed column:\n";
  any = false;
  for (const auto& d : diff.paper_rows) {
    if (!d.found || d.existence_matches) continue;
    any = true;
    out += fmt::format("  {} printed {}\n", d.paper.params.to_string(), paper_existence(d.paper.existence));
  }
  if (!any) out += "  none\n";
  out += fmt::format("Computed rows absent from the published table: {}\n", diff.extras.size());
  for (const auto& e : diff.extras) {
    std::vector<std::string> reasons = e.eliminated_by;
    if (!e.inertia_ok) reasons.push_back("inertia m_n >= k");
    out += fmt::format("  {} ratio {} ~ {:.3f}: {}\n", e.row.params.to_string(), ratio_label(e.row),
                       e.row.ratio_approx, e.open ? std::string("open (no implemented condition removes it)")
                                                  : "eliminated by " + join(reasons, ", "));
  }
  return out;
}

std::string ratio_over_n(const PaperRowDiff& d) {
  const QuadSurd top = d.computed_ratio * QuadSurd(Rational(d.paper.params.n));
  return top.is_rational() && boost::multiprecision::denominator(top.as_rational()) == 1
             ? fmt::format("{}/{}", top.to_string(), d.paper.params.n)
             : d.computed_ratio.to_string();
}

}  // namespace trifree::srg
