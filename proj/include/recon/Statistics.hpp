#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <recon/Graph.hpp>

namespace recon {

/**
 * Population Gini coefficient of non-negative values:
 *   G = 2 * sum_i i * x_(i) / (n * sum x) - (n + 1) / n  over the ascending order.
 * Throws UndefinedInput for empty or all-zero input.
 */
double gini(std::span<const double> values);
double degreeGini(const Graph &g);

/// Triangles through v over deg(v) choose 2; nodes with degree < 2 get 0.
std::vector<double> localClustering(const Graph &g);
double averageLocalClustering(const Graph &g);

struct DegreeClustering {
    count nodes = 0;          // n_d
    double avgClustering = 0; // c_d
};

/// Per-degree node counts and mean clustering, keyed by degree.
std::map<count, DegreeClustering> clusteringByDegree(const Graph &g);

struct Components {
    count number = 0;
    std::vector<index> id; // dense 0..number-1

    std::vector<count> sizes() const;
    index largest() const;
};

Components connectedComponents(const Graph &g);

enum class DiameterMode { Exact, Effective90 };

struct DiameterOptions {
    DiameterMode mode = DiameterMode::Exact;
    /// Largest components up to this size are searched from every node.
    count exactThreshold = 10000;
    /// BFS sources drawn above the threshold.
    count samples = 1000;
    std::uint64_t seed = 42;
};

struct DiameterResult {
    double value = 0;
    DiameterMode mode = DiameterMode::Exact;
    bool sampled = false;

    /// "exact", "exact-sampled", "effective90" or "effective90-sampled".
    std::string label() const;
};

/**
 * Diameter of the largest connected component. Exact mode reports the largest
 * BFS eccentricity; Effective90 the (interpolated) distance within which 90% of
 * the connected ordered pairs lie. Throws UndefinedInput when n = 0.
 */
DiameterResult diameter(const Graph &g, const DiameterOptions &options = {});

} // namespace recon
