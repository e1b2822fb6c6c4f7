#include "trifree/json.hpp"

namespace trifree {

namespace spectral {

void to_json(nlohmann::json& j, const Spectrum& s) { j = {{"values", s.values}, {"tol", s.tol}}; }

void to_json(nlohmann::json& j, const TraceReport& r) {
  j = {{"sum1", r.sum1},           {"sum2", r.sum2},           {"sum3", r.sum3},
       {"target1", r.target1},     {"target2", r.target2},     {"target3", r.target3},
       {"residual1", r.residual1}, {"residual2", r.residual2}, {"residual3", r.residual3}};
}

void to_json(nlohmann::json& j, const EigenCluster& c) {
  j = {{"value", c.value}, {"multiplicity", c.multiplicity}};
}

}  // namespace spectral

namespace bounds {

void to_json(nlohmann::json& j, const BoundReport& r) {
  j = {{"n", r.n},
       {"mu1", r.mu1},
       {"mun", r.mun},
       {"lemma_lhs", r.lemma_lhs},
       {"lemma_rhs", r.lemma_rhs},
       {"lemma_holds", r.lemma_holds},
       {"theorem_margin", r.theorem_margin},
       {"theorem_holds", r.theorem_holds()},
       {"ratio", r.ratio},
       {"degenerate", r.degenerate}};
}

void to_json(nlohmann::json& j, const IndependenceResult& r) {
  j = {{"size", r.size}, {"exact", r.exact}, {"expansions", r.expansions}, {"witness", r.witness}};
}

void to_json(nlohmann::json& j, const FMax& r) {
  j = {{"argmax", r.argmax},
       {"value", r.value},
       {"search_argmax", r.search_argmax},
       {"search_value", r.search_value}};
}

}  // namespace bounds

namespace exact {

void to_json(nlohmann::json& j, const QuadSurd& q) { j = {{"exact", q.to_string()}, {"approx", q.to_double()}}; }

}  // namespace exact

namespace srg {

void to_json(nlohmann::json& j, const SrgParams& p) { j = {{"n", p.n}, {"k", p.k}, {"a", p.a}, {"b", p.b}}; }

void to_json(nlohmann::json& j, const SrgEigenData& e) {
  j = {{"theta1", e.theta1}, {"theta2", e.theta2}, {"m1", e.m1}, {"m2", e.m2}, {"conference", e.conference}};
}

void to_json(nlohmann::json& j, const Condition& c) {
  j = {{"name", c.name}, {"passed", c.passed}, {"evaluated", c.evaluated}, {"detail", c.detail}};
}

void to_json(nlohmann::json& j, const FeasibilityReport& r) {
  j = {{"params", r.params},
       {"tier", r.tier == Tier::basic ? "basic" : "extended"},
       {"conditions", r.conditions},
       {"basic_passed", r.basic_passed},
       {"passed", r.passed()}};
  if (r.tier == Tier::extended) j["extended_passed"] = r.extended_passed;
  j["eigen"] = r.eigen ? nlohmann::json(*r.eigen) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const ChainCheck& c) {
  j = {{"name", c.name}, {"lhs", c.lhs}, {"relation", c.relation}, {"rhs", c.rhs}, {"holds", c.holds}};
}

void to_json(nlohmann::json& j, const ChainReport& r) {
  j = {{"params", r.params},
       {"ratio", r.ratio},
       {"r", r.r},
       {"x", r.x},
       {"triggered", r.triggered},
       {"checks", r.checks},
       {"inertia", r.inertia},
       {"inertia_ok", r.inertia_ok},
       {"verdict", to_string(r.verdict)}};
}

void to_json(nlohmann::json& j, const TableRow& r) {
  j = {{"n", r.params.n},
       {"k", r.params.k},
       {"a", r.params.a},
       {"b", r.params.b},
       {"theta1", r.eigen.theta1.to_string()},
       {"theta2", r.eigen.theta2.to_string()},
       {"m1", r.eigen.m1},
       {"m2", r.eigen.m2},
       {"ratio", ratio_label(r)},
       {"ratio_reduced", r.ratio.to_string()},
       {"ratio_approx", r.ratio_approx},
       {"appr", round3(r.ratio)},
       {"appr_trunc", truncate3(r.ratio)},
       {"existence", to_string(r.existence)},
       {"existence_note", r.existence_note},
       {"conference", r.eigen.conference},
       {"extended_feasible", r.extended_passed},
       {"failed_extended", r.failed_extended}};
}

void to_json(nlohmann::json& j, const PaperRowDiff& d) {
  j = {{"params", d.paper.params},
       {"found", d.found},
       {"core_match", d.core_match},
       {"eigen_match", d.eigen_match},
       {"ratio_match", d.ratio_match},
       {"paper_ratio", d.paper.ratio_text},
       {"computed_ratio", d.computed_ratio},
       {"computed_ratio_label", d.found ? ratio_over_n(d) : std::string()},
       {"multiplicities_match", d.multiplicities_match},
       {"paper_m1", d.paper.m1},
       {"paper_m2", d.paper.m2},
       {"computed_m1", d.computed_m1},
       {"computed_m2", d.computed_m2},
       {"paper_appr", d.paper.appr},
       {"computed_truncated", d.computed_truncated},
       {"computed_rounded", d.computed_rounded},
       {"appr_matches_truncation", d.appr_matches_truncation},
       {"appr_matches_rounding", d.appr_matches_rounding},
       {"existence_matches", d.existence_matches}};
}

void to_json(nlohmann::json& j, const ExtraRow& e) {
  j = {{"row", e.row}, {"eliminated_by", e.eliminated_by}, {"inertia_ok", e.inertia_ok}, {"open", e.open}};
}

void to_json(nlohmann::json& j, const TableDiff& d) {
  std::vector<SrgParams> multiplicity = d.multiplicity_discrepancies();
  std::vector<SrgParams> appr = d.appr_discrepancies();
  j = {{"paper_rows", d.paper_rows},
       {"extras", d.extras},
       {"all_paper_rows_found", d.all_paper_rows_found()},
       {"all_core_match", d.all_core_match()},
       {"multiplicity_discrepancies", multiplicity},
       {"appr_discrepancies", appr}};
}

}  // namespace srg

namespace explorer {

void to_json(nlohmann::json& j, const Violation& v) {
  j = {{"graph6", v.graph6}, {"lhs", v.lhs}, {"rhs", v.rhs}};
}

void to_json(nlohmann::json& j, const ScanReport& r) {
  j = {{"n", r.n},
       {"graphs_scanned", r.graphs_scanned},
       {"triangle_free_count", r.triangle_free_count},
       {"lemma_violations", r.lemma_violations},
       {"theorem_violations", r.theorem_violations},
       {"max_ratio", r.max_ratio},
       {"argmax_graph", r.argmax_graph},
       {"runtime_seconds", r.runtime_seconds}};
}

}  // namespace explorer

}  // namespace trifree
