#include <algorithm>
#include <stdexcept>

#include <recon/Graph.hpp>

namespace recon {

Graph::Graph(count n) : offsets_(n + 1, 0) {}

Graph Graph::fromEdges(count n, std::span<const Edge> edges, BuildStats *stats) {
    BuildStats local;
    std::vector<count> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::out_of_range("edge endpoint exceeds node count");
        if (u == v) {
            ++local.selfLoops;
            continue;
        }
        ++deg[u];
        ++deg[v];
    }

    Graph g;
    g.offsets_.assign(n + 1, 0);
    for (node u = 0; u < n; ++u)
        g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.neighbors_.resize(g.offsets_[n]);

    std::vector<count> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        if (u == v)
            continue;
        g.neighbors_[fill[u]++] = v;
        g.neighbors_[fill[v]++] = u;
    }

    // sort, then drop repeated neighbors and compact
    std::vector<count> newOffsets(n + 1, 0);
    count write = 0;
    for (node u = 0; u < n; ++u) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]);
        std::sort(first, last);
        auto uniqueEnd = std::unique(first, last);
        local.duplicates += static_cast<count>(last - uniqueEnd);
        for (auto it = first; it != uniqueEnd; ++it)
            g.neighbors_[write++] = *it;
        newOffsets[u + 1] = write;
    }
    g.neighbors_.resize(write);
    g.neighbors_.shrink_to_fit();
    g.offsets_ = std::move(newOffsets);
    // each repeated pair was seen from both endpoints
    local.duplicates /= 2;

    if (stats)
        *stats = local;
    return g;
}

bool Graph::hasEdge(node u, node v) const {
    if (degree(u) > degree(v))
        std::swap(u, v);
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

count Graph::maxDegree() const {
    count best = 0;
    for (node u = 0; u < numberOfNodes(); ++u)
        best = std::max(best, degree(u));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(numberOfEdges());
    forEdges([&](node u, node v) { out.emplace_back(u, v); });
    return out;
}

} // namespace recon
