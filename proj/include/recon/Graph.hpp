#pragma once

#include <span>
#include <utility>
#include <vector>

#include <recon/Globals.hpp>

namespace recon {

using Edge = std::pair<node, node>;

/**
 * Immutable undirected simple graph with sorted adjacency arrays (CSR layout).
 *
 * Construct through fromEdges(); self-loops and repeated pairs are dropped and
 * counted in the BuildStats it reports.
 */
class Graph {
public:
    struct BuildStats {
        count selfLoops = 0;
        count duplicates = 0;
    };

    Graph() = default;

    /// Graph on n nodes without edges.
    explicit Graph(count n);

    static Graph fromEdges(count n, std::span<const Edge> edges, BuildStats *stats = nullptr);

    count numberOfNodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    count numberOfEdges() const noexcept { return neighbors_.size() / 2; }

    count degree(node u) const { return offsets_[u + 1] - offsets_[u]; }

    /// Sorted neighbor ids of u.
    std::span<const node> neighbors(node u) const {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }

    bool hasEdge(node u, node v) const;

    count maxDegree() const;

    /// Every edge once, as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    template <typename F>
    void forEdges(F &&f) const {
        const count n = numberOfNodes();
        for (node u = 0; u < n; ++u)
            for (node v : neighbors(u))
                if (u < v)
                    f(u, v);
    }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    std::vector<count> offsets_;
    std::vector<node> neighbors_;
};

} // namespace recon
