#include <stdexcept>

#include <recon/GraphTools.hpp>

namespace recon {

DegreeSequence degreeSequence(const Graph &g) {
    DegreeSequence d(g.numberOfNodes());
    for (node u = 0; u < g.numberOfNodes(); ++u)
        d[u] = g.degree(u);
    return d;
}

Graph disjointUnion(const Graph &g, count copies) {
    if (copies == 0)
        throw std::invalid_argument("disjointUnion: number of copies must be positive");
    const count n = g.numberOfNodes();
    std::vector<Edge> edges;
    edges.reserve(copies * g.numberOfEdges());
    for (count i = 0; i < copies; ++i)
        g.forEdges([&](node u, node v) { edges.emplace_back(i * n + u, i * n + v); });
    return Graph::fromEdges(copies * n, edges);
}

bool isSimpleUndirected(const Graph &g) {
    count halfEdges = 0;
    for (node u = 0; u < g.numberOfNodes(); ++u) {
        auto nb = g.neighbors(u);
        halfEdges += nb.size();
        for (std::size_t i = 0; i < nb.size(); ++i) {
            if (nb[i] == u || nb[i] >= g.numberOfNodes())
                return false;
            if (i > 0 && nb[i - 1] >= nb[i])
                return false;
            if (!g.hasEdge(nb[i], u))
                return false;
        }
    }
    return halfEdges == 2 * g.numberOfEdges();
}

} // namespace recon
