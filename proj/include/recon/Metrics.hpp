#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <recon/Graph.hpp>
#include <recon/Statistics.hpp>

namespace recon {

/// Scalar realism features of one graph.
struct FeatureVector {
    count n = 0;
    count m = 0;
    count maxDegree = 0;
    double degreeGini = 0;
    double avgClustering = 0;
    double diameter = 0;
    std::string diameterMode = "exact";
    count components = 0;
    count communities = 0;
    /// PLM communities with at least three nodes.
    count nontrivialCommunities = 0;
};

/// Minimum community size counted by nontrivialCommunities.
constexpr count nontrivialCommunitySize = 3;

struct ProfileOptions {
    std::uint64_t seed = 42;
    DiameterOptions diameter{};
};

/// All features of g; communities come from plm(g, seed). Requires n >= 1.
/// The Gini coefficient of an edgeless graph is reported as 0.
FeatureVector profile(const Graph &g, const ProfileOptions &options = {});

/// (name, value) pairs in report order.
std::vector<std::pair<std::string, double>> namedFeatures(const FeatureVector &f);

struct FeatureComparison {
    std::string name;
    double original = 0;
    double replica = 0;
    /// replica / original, or replica - original when original is 0.
    double value = 0;
    bool isRatio = true;
};

inline constexpr std::array<double, 7> summaryQuantiles = {0.01, 0.05, 0.25, 0.50, 0.75, 0.95, 0.99};

struct CentralitySummary {
    std::string measure;
    std::array<double, 7> quantiles{};
};

struct ComparisonReport {
    std::vector<FeatureComparison> features;
    std::vector<CentralitySummary> originalCentrality;
    std::vector<CentralitySummary> replicaCentrality;
};

ComparisonReport compare(const FeatureVector &original, const FeatureVector &replica);

struct CentralityDistribution {
    std::string measure;
    std::vector<double> scores; // min-max normalized to [0, 1]
};

struct CentralityOptions {
    std::uint64_t seed = 42;
    /// Betweenness and closeness are exact up to this many nodes, sampled above.
    count exactLimit = 5000;
    /// Measures computed concurrently; results do not depend on it.
    unsigned threads = 1;
};

/// Degree, harmonic closeness, local clustering, core number, PageRank and
/// betweenness, each min-max normalized. Constant vectors map to zeros.
std::vector<CentralityDistribution> centralityDistributions(const Graph &g, const CentralityOptions &options = {});

std::vector<double> minMaxNormalize(std::vector<double> values);

/// Linear-interpolation quantile (the common "type 7" rule) of unsorted values.
double quantile(std::vector<double> values, double q);

std::vector<CentralitySummary> summarize(const std::vector<CentralityDistribution> &distributions);

} // namespace recon
