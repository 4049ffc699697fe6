#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include <recon/Metrics.hpp>
#include <recon/Models.hpp>

namespace recon {

/// Version of every JSON document written by the tools.
constexpr int reportSchemaVersion = 1;

/// Shortest round-trip decimal form of x.
std::string formatReal(double x);

nlohmann::json toJson(const FeatureVector &f);
nlohmann::json toJson(const ComparisonReport &report);
nlohmann::json toJson(const ModelParams &params);
nlohmann::json toJson(const PowerLawFit &fit);
nlohmann::json toJson(const CommunityFit &fit);
nlohmann::json toJson(const HudgReference &ref);
nlohmann::json toJson(const LfrReference &ref);

/// "feature,original,replica,value,kind" with kind "ratio" or "delta".
void writeComparisonCsv(std::ostream &out, const ComparisonReport &report);

/// Scaling-study rows: model, scale, seed, then every feature.
void writeFeatureCsvHeader(std::ostream &out);
void writeFeatureCsvRow(std::ostream &out, const std::string &model, count scale, std::uint64_t seed,
                        const FeatureVector &f);

} // namespace recon
