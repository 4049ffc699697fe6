#pragma once

#include <cstdint>
#include <vector>

#include <recon/Graph.hpp>

namespace recon {

struct PageRankOptions {
    double damping = 0.85;
    double tolerance = 1e-8;
    count maxIterations = 1000;
};

/// Power iteration of the uniform-teleport random walk; degree-0 nodes spread
/// their mass uniformly. Scores sum to 1. Throws UndefinedInput for n = 0.
std::vector<double> pageRank(const Graph &g, const PageRankOptions &options = {});

/**
 * Source-sampled Brandes betweenness: dependencies of `samples` distinct
 * uniformly drawn sources, scaled by n / samples. Every unordered pair counts
 * once, so samples = n reproduces exact betweenness.
 */
std::vector<double> betweenness(const Graph &g, count samples, std::uint64_t seed);

/// Default sample size, max(1, n / 10).
count defaultBetweennessSamples(count n);

/// Harmonic closeness, sum over other reachable nodes of 1 / distance divided
/// by n - 1. With samples < n it is estimated from sampled sources.
std::vector<double> harmonicCloseness(const Graph &g, count samples, std::uint64_t seed);

struct CoreDecomposition {
    std::vector<count> core;
    /// Nodes in the order they were peeled.
    std::vector<node> order;
    count maxCore = 0;
};

/// Bucket peeling in O(n + m).
CoreDecomposition coreDecomposition(const Graph &g);

struct TriangleCount {
    count total = 0;
    std::vector<count> perNode;
};

/// Degree-ordered neighbor intersection.
TriangleCount countTriangles(const Graph &g);

/// Union-find spanning forest; n - (number of components) edges.
std::vector<Edge> spanningForest(const Graph &g);

} // namespace recon
