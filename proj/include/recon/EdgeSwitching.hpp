#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <recon/Graph.hpp>
#include <recon/Random.hpp>

namespace recon {

/**
 * Mutable adjacency with fixed per-node capacity. Edge switches never change a
 * degree, so neighbor slots are replaced in place. Membership is a linear scan
 * of the shorter neighbor array, which beats hashing at the low degrees typical
 * of sparse networks.
 */
class SwitchableAdjacency {
public:
    SwitchableAdjacency(count n, std::span<const Edge> edges);

    count numberOfNodes() const noexcept { return offsets_.size() - 1; }
    count degree(node u) const { return offsets_[u + 1] - offsets_[u]; }
    bool hasEdge(node u, node v) const;

    /// Rewrites the slot of `from` in u's neighbor array to `to`.
    void replaceNeighbor(node u, node from, node to);

private:
    std::vector<count> offsets_;
    std::vector<node> slots_;
};

/**
 * Degree-preserving switches on an edge array. A switch takes edges
 * {u, v} = edges[i] and {y, z} = edges[j] (or {z, y} when flipped) and replaces
 * them with {u, z} and {y, v}; it is rejected if that creates a self-loop or
 * an edge already present in the adjacency.
 *
 * The edge array may be a subset of the adjacency's edges: membership tests then
 * also guard against duplicating edges outside the array.
 */
class EdgeSwitcher {
public:
    EdgeSwitcher(SwitchableAdjacency &adjacency, std::vector<Edge> &edges)
        : adjacency_(adjacency), edges_(edges) {}

    /// The two edges a switch of (i, j, flip) would produce.
    std::pair<Edge, Edge> proposal(index i, index j, bool flip) const;

    bool isValid(const std::pair<Edge, Edge> &proposed) const;

    /// Applies the switch if valid; returns whether it was applied.
    bool trySwitch(index i, index j, bool flip);

    /// `attempts` uniformly drawn switch attempts; rejected attempts count.
    /// Returns the number of accepted switches.
    count run(count attempts, Rng &rng);

private:
    void apply(index i, index j, const std::pair<Edge, Edge> &proposed);

    SwitchableAdjacency &adjacency_;
    std::vector<Edge> &edges_;
};

/// Ten switch attempts per edge.
constexpr count defaultSwaps(count m) noexcept {
    return 10 * m;
}

/// Randomized copy of g after `swaps` switch attempts. Graphs with fewer than
/// two edges are returned unchanged.
Graph edgeSwitch(const Graph &g, count swaps, std::uint64_t seed);

} // namespace recon
