#include <algorithm>
#include <stdexcept>

#include <recon/EdgeSwitching.hpp>

namespace recon {

SwitchableAdjacency::SwitchableAdjacency(count n, std::span<const Edge> edges)
    : offsets_(n + 1, 0) {
    for (auto [u, v] : edges) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (node u = 0; u < n; ++u)
        offsets_[u + 1] += offsets_[u];
    slots_.resize(offsets_[n]);
    std::vector<count> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        slots_[fill[u]++] = v;
        slots_[fill[v]++] = u;
    }
}

bool SwitchableAdjacency::hasEdge(node u, node v) const {
    if (degree(u) > degree(v))
        std::swap(u, v);
    const node *first = slots_.data() + offsets_[u];
    const node *last = slots_.data() + offsets_[u + 1];
    return std::find(first, last, v) != last;
}

void SwitchableAdjacency::replaceNeighbor(node u, node from, node to) {
    node *first = slots_.data() + offsets_[u];
    node *last = slots_.data() + offsets_[u + 1];
    node *slot = std::find(first, last, from);
    if (slot == last)
        throw std::logic_error("replaceNeighbor: edge not present");
    *slot = to;
}

std::pair<Edge, Edge> EdgeSwitcher::proposal(index i, index j, bool flip) const {
    const auto [u, v] = edges_[i];
    auto [y, z] = edges_[j];
    if (flip)
        std::swap(y, z);
    return {{u, z}, {y, v}};
}

bool EdgeSwitcher::isValid(const std::pair<Edge, Edge> &proposed) const {
    const auto [a, b] = proposed.first;
    const auto [c, d] = proposed.second;
    if (a == b || c == d)
        return false;
    return !adjacency_.hasEdge(a, b) && !adjacency_.hasEdge(c, d);
}

void EdgeSwitcher::apply(index i, index j, const std::pair<Edge, Edge> &proposed) {
    const auto [u, v] = edges_[i];
    const node z = proposed.first.second;
    const node y = proposed.second.first;
    // old: {u, v}, {y, z}; new: {u, z}, {y, v}
    adjacency_.replaceNeighbor(u, v, z);
    adjacency_.replaceNeighbor(v, u, y);
    adjacency_.replaceNeighbor(y, z, v);
    adjacency_.replaceNeighbor(z, y, u);
    edges_[i] = proposed.first;
    edges_[j] = proposed.second;
}

bool EdgeSwitcher::trySwitch(index i, index j, bool flip) {
    if (i == j)
        return false;
    auto proposed = proposal(i, j, flip);
    if (!isValid(proposed))
        return false;
    apply(i, j, proposed);
    return true;
}

count EdgeSwitcher::run(count attempts, Rng &rng) {
    const count m = edges_.size();
    if (m < 2)
        return 0;
    count accepted = 0;
    for (count t = 0; t < attempts; ++t) {
        const index i = uniformBelow(rng, m);
        index j = uniformBelow(rng, m - 1);
        if (j >= i)
            ++j;
        const bool flip = (rng() >> 63) != 0;
        accepted += trySwitch(i, j, flip) ? 1 : 0;
    }
    return accepted;
}

Graph edgeSwitch(const Graph &g, count swaps, std::uint64_t seed) {
    if (g.numberOfEdges() < 2)
        return g;
    auto edges = g.edges();
    SwitchableAdjacency adjacency(g.numberOfNodes(), edges);
    EdgeSwitcher switcher(adjacency, edges);
    auto rng = makeRng(seed);
    switcher.run(swaps, rng);
    return Graph::fromEdges(g.numberOfNodes(), edges);
}

} // namespace recon
