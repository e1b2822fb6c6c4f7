#pragma once

// JSON views of the report types, shared by the CLI and render_table.

#include <json.hpp>

#include "trifree/bounds.hpp"
#include "trifree/explorer.hpp"
#include "trifree/spectral.hpp"
#include "trifree/srg.hpp"

namespace trifree::spectral {
void to_json(nlohmann::json& j, const Spectrum& s);
void to_json(nlohmann::json& j, const TraceReport& r);
void to_json(nlohmann::json& j, const EigenCluster& c);
}  // namespace trifree::spectral

namespace trifree::bounds {
void to_json(nlohmann::json& j, const BoundReport& r);
void to_json(nlohmann::json& j, const IndependenceResult& r);
void to_json(nlohmann::json& j, const FMax& r);
}  // namespace trifree::bounds

namespace trifree::srg {
void to_json(nlohmann::json& j, const SrgParams& p);
void to_json(nlohmann::json& j, const SrgEigenData& e);
void to_json(nlohmann::json& j, const Condition& c);
void to_json(nlohmann::json& j, const FeasibilityReport& r);
void to_json(nlohmann::json& j, const ChainCheck& c);
void to_json(nlohmann::json& j, const ChainReport& r);
void to_json(nlohmann::json& j, const TableRow& r);
void to_json(nlohmann::json& j, const PaperRowDiff& d);
void to_json(nlohmann::json& j, const ExtraRow& e);
void to_json(nlohmann::json& j, const TableDiff& d);
}  // namespace trifree::srg

namespace trifree::explorer {
void to_json(nlohmann::json& j, const Violation& v);
void to_json(nlohmann::json& j, const ScanReport& r);
}  // namespace trifree::explorer

namespace trifree::exact {
void to_json(nlohmann::json& j, const QuadSurd& q);  // {"exact": "...", "approx": ...}
}  // namespace trifree::exact
