#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <recon/Community.hpp>
#include <recon/Graph.hpp>

namespace recon {

/**
 * Fitted signature of a graph: a community assignment and, per node, its
 * internal and external degree. The original intra- and inter-community edges
 * are kept as the starting realization that generation randomizes.
 */
struct ReconModel {
    count n = 0;
    std::vector<index> community;
    std::vector<count> communitySizes;
    std::vector<count> internalDegree;
    std::vector<count> externalDegree;
    std::vector<Edge> intraEdges;
    std::vector<Edge> interEdges;

    count numberOfCommunities() const noexcept { return communitySizes.size(); }
    count numberOfEdges() const noexcept { return intraEdges.size() + interEdges.size(); }
    /// Intra-edge count per community.
    std::vector<count> intraEdgesPerCommunity() const;
};

/// Fits against `partition`, or against plm(g, seed) when none is given.
/// Throws std::invalid_argument if the partition does not cover g.
ReconModel fitRecon(const Graph &g, const std::optional<Partition> &partition, std::uint64_t seed);

struct GenerateOptions {
    /// Workers for the per-community randomization. Output does not depend on it.
    unsigned threads = 1;
    count maxRewiringPasses = 100;
};

struct Replica {
    Graph graph;
    /// Community of each replica node; copy i of community c has id i*k + c.
    std::vector<index> community;
    count scale = 1;
    count forbiddenAfterGlobal = 0;
    count residualForbidden = 0;
    count rewiringPasses = 0;
};

/**
 * Scale-x replica: x disjoint copies, every community copy randomized by its own
 * switching chain (10 attempts per intra edge), then the inter-community edges by
 * one global chain (10 attempts per edge). Global edges that end up inside a
 * community copy are switched with random partners until none remain or the pass
 * budget is spent; leftovers are reported in residualForbidden.
 */
Replica generate(const ReconModel &model, count x, std::uint64_t seed,
                 const GenerateOptions &options = {});

struct ReplicationResult {
    Replica replica;
    count communities = 0;
    double msFit = 0;
    double msGenerate = 0;
};

ReplicationResult replicate(const Graph &g, count x, std::uint64_t seed,
                            const std::optional<Partition> &partition = std::nullopt,
                            const GenerateOptions &options = {});

} // namespace recon
