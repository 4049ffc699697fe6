#include <charconv>
#include <ostream>

#include <recon/Reports.hpp>

namespace recon {

std::string formatReal(double x) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), x);
    return ec == std::errc{} ? std::string(buffer, ptr) : std::string("nan");
}

nlohmann::json toJson(const FeatureVector &f) {
    return {
        {"n", f.n},
        {"m", f.m},
        {"max_degree", f.maxDegree},
        {"degree_gini", f.degreeGini},
        {"avg_clustering", f.avgClustering},
        {"diameter", f.diameter},
        {"diameter_mode", f.diameterMode},
        {"components", f.components},
        {"communities", f.communities},
        {"nontrivial_communities", f.nontrivialCommunities},
    };
}

namespace {

nlohmann::json toJson(const std::vector<CentralitySummary> &summaries) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto &s : summaries)
        out[s.measure] = s.quantiles;
    return out;
}

std::string_view sourceName(InitiatorSource source) {
    switch (source) {
    case InitiatorSource::Preset:
        return "preset";
    case InitiatorSource::Random:
        return "random";
    case InitiatorSource::Explicit:
        return "explicit";
    }
    return "?";
}

} // namespace

nlohmann::json toJson(const ComparisonReport &report) {
    nlohmann::json features = nlohmann::json::array();
    for (const auto &c : report.features) {
        features.push_back({
            {"feature", c.name},
            {"original", c.original},
            {"replica", c.replica},
            {"value", c.value},
            {"kind", c.isRatio ? "ratio" : "delta"},
        });
    }
    nlohmann::json out = {{"features", features}};
    if (!report.originalCentrality.empty() || !report.replicaCentrality.empty()) {
        out["centrality_quantile_levels"] = summaryQuantiles;
        out["centrality_original"] = toJson(report.originalCentrality);
        out["centrality_replica"] = toJson(report.replicaCentrality);
    }
    return out;
}

nlohmann::json toJson(const PowerLawFit &fit) {
    return {{"gamma", fit.gamma}, {"d_min", fit.dMin},         {"d_max", fit.dMax},
            {"target_mean", fit.targetMean}, {"degenerate", fit.degenerate}, {"clamped", fit.clamped}};
}

nlohmann::json toJson(const CommunityFit &fit) {
    return {{"beta", fit.beta},
            {"c_min", fit.cMin},
            {"c_max", fit.cMax},
            {"target_mean", fit.targetMean},
            {"expected_mean", fit.expectedMean},
            {"degenerate", fit.degenerate},
            {"min_raised", fit.minRaised}};
}

nlohmann::json toJson(const ModelParams &params) {
    return std::visit(
        [](const auto &p) -> nlohmann::json {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ErParams>) {
                return {{"model", "er"}, {"n", p.n}, {"p", p.p}};
            } else if constexpr (std::is_same_v<T, BaParams>) {
                return {{"model", "ba"}, {"n", p.n}, {"k", p.k}};
            } else if constexpr (std::is_same_v<T, ClParams> || std::is_same_v<T, EsmcParams>) {
                constexpr bool cl = std::is_same_v<T, ClParams>;
                return {{"model", cl ? "cl" : "esmc"}, {"n", p.degrees.size()}, {"degrees", p.degrees}};
            } else if constexpr (std::is_same_v<T, RmatParams>) {
                const auto &I = p.initiator;
                return {{"model", "rmat"},
                        {"s", p.scale},
                        {"e", p.edgeFactor},
                        {"n", p.targetNodes},
                        {"initiator", {I.a, I.b, I.c, I.d}},
                        {"initiator_source", sourceName(p.source)},
                        // kronfit is not run; the initiator is a substitute
                        {"initiator_approximate", true}};
            } else if constexpr (std::is_same_v<T, PowerLawFit>) {
                return toJson(p);
            } else {
                return toJson(p);
            }
        },
        params);
}

nlohmann::json toJson(const HudgReference &ref) {
    return {{"model", "hudg"}, {"n", ref.n}, {"average_degree", ref.averageDegree}, {"gamma", ref.exponent},
            {"reference_only", true}};
}

nlohmann::json toJson(const LfrReference &ref) {
    return {{"model", "lfr"},          {"n", ref.n},
            {"degrees", toJson(ref.degrees)}, {"communities", toJson(ref.communities)},
            {"mixing", ref.mixing},    {"mixing_definition", "inter_edges / m"},
            {"reference_only", true}};
}

void writeComparisonCsv(std::ostream &out, const ComparisonReport &report) {
    out << "feature,original,replica,value,kind\n";
    for (const auto &c : report.features)
        out << c.name << ',' << formatReal(c.original) << ',' << formatReal(c.replica) << ','
            << formatReal(c.value) << ',' << (c.isRatio ? "ratio" : "delta") << '\n';
}

void writeFeatureCsvHeader(std::ostream &out) {
    out << "model,scale,seed,n,m,max_degree,degree_gini,avg_clustering,diameter,diameter_mode,"
           "components,communities,nontrivial_communities\n";
}

void writeFeatureCsvRow(std::ostream &out, const std::string &model, count scale, std::uint64_t seed,
                        const FeatureVector &f) {
    out << model << ',' << scale << ',' << seed << ',' << f.n << ',' << f.m << ',' << f.maxDegree << ','
        << formatReal(f.degreeGini) << ',' << formatReal(f.avgClustering) << ',' << formatReal(f.diameter) << ','
        << f.diameterMode << ',' << f.components << ',' << f.communities << ',' << f.nontrivialCommunities << '\n';
}

} // namespace recon
