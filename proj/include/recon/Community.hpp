#pragma once

#include <cstdint>
#include <vector>

#include <recon/Graph.hpp>

namespace recon {

/**
 * Disjoint assignment of nodes to communities with dense ids 0..k-1, plus the
 * per-community aggregates computed against a specific graph.
 */
class Partition {
public:
    Partition() = default;

    /// Validates `assignment` against g and computes the aggregates. Ids that are
    /// not dense are rejected with std::invalid_argument.
    Partition(const Graph &g, std::vector<index> assignment);

    /// Relabels arbitrary ids to dense ids in order of first appearance.
    static Partition compacted(const Graph &g, std::vector<index> assignment);
    static Partition singletons(const Graph &g);
    static Partition oneCommunity(const Graph &g);

    count numberOfNodes() const noexcept { return assignment_.size(); }
    count numberOfCommunities() const noexcept { return sizes_.size(); }

    index operator[](node u) const { return assignment_[u]; }
    const std::vector<index> &assignment() const noexcept { return assignment_; }
    const std::vector<count> &sizes() const noexcept { return sizes_; }
    const std::vector<count> &intraEdges() const noexcept { return intra_; }
    count interEdges() const noexcept { return inter_; }
    count totalIntraEdges() const noexcept;

private:
    std::vector<index> assignment_;
    std::vector<count> sizes_;
    std::vector<count> intra_;
    count inter_ = 0;
};

/// Newman-Girvan modularity; throws UndefinedInput when g has no edges.
double modularity(const Graph &g, const Partition &p);

/// Fraction of edges that cross communities; throws UndefinedInput when m = 0.
double mixingParameter(const Graph &g, const Partition &p);

struct PlmOptions {
    std::uint64_t seed = 42;
    /// Move-phase sweeps per level.
    count maxIterations = 32;
};

/**
 * Louvain-style modularity maximization: shuffled local moves until no node
 * improves Q, then contraction, repeated until a level changes nothing. A node
 * only leaves its community for a strictly better one. Edgeless graphs yield
 * singletons.
 */
Partition plm(const Graph &g, const PlmOptions &options = {});

} // namespace recon
