#include <algorithm>
#include <cmath>
#include <numeric>

#include <recon/Algorithms.hpp>
#include <recon/Errors.hpp>
#include <recon/Random.hpp>

namespace recon {

std::vector<double> pageRank(const Graph &g, const PageRankOptions &options) {
    const count n = g.numberOfNodes();
    if (n == 0)
        throw UndefinedInput("pageRank: graph has no nodes");
    if (!(options.damping > 0 && options.damping < 1))
        throw std::invalid_argument("pageRank: damping must lie in (0, 1)");
    if (!(options.tolerance > 0))
        throw std::invalid_argument("pageRank: tolerance must be positive");

    const auto nd = static_cast<double>(n);
    const double d = options.damping;
    std::vector<double> score(n, 1.0 / nd);
    std::vector<double> next(n);
    for (count iteration = 0; iteration < options.maxIterations; ++iteration) {
        double dangling = 0;
        for (node u = 0; u < n; ++u)
            if (g.degree(u) == 0)
                dangling += score[u];
        const double base = (1.0 - d) / nd + d * dangling / nd;
        double change = 0;
        for (node v = 0; v < n; ++v) {
            double incoming = 0;
            for (node u : g.neighbors(v))
                incoming += score[u] / static_cast<double>(g.degree(u));
            next[v] = base + d * incoming;
            change += std::abs(next[v] - score[v]);
        }
        score.swap(next);
        if (change <= options.tolerance)
            break;
    }
    const double total = std::accumulate(score.begin(), score.end(), 0.0);
    for (auto &s : score)
        s /= total;
    return score;
}

count defaultBetweennessSamples(count n) {
    return std::max<count>(1, n / 10);
}

namespace {

std::vector<node> sampleSources(count n, count samples, std::uint64_t seed) {
    std::vector<node> all(n);
    std::iota(all.begin(), all.end(), node{0});
    if (samples >= n)
        return all;
    auto rng = makeRng(seed);
    std::vector<node> chosen;
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), static_cast<std::ptrdiff_t>(samples), rng);
    return chosen;
}

} // namespace

std::vector<double> betweenness(const Graph &g, count samples, std::uint64_t seed) {
    const count n = g.numberOfNodes();
    std::vector<double> score(n, 0.0);
    if (n == 0)
        return score;
    if (samples == 0)
        throw std::invalid_argument("betweenness: need at least one sample");
    const auto sources = sampleSources(n, samples, seed);

    std::vector<count> dist(n, none);
    std::vector<double> paths(n, 0.0);
    std::vector<double> dependency(n, 0.0);
    std::vector<node> stack;
    stack.reserve(n);
    for (node s : sources) {
        stack.clear();
        dist[s] = 0;
        paths[s] = 1;
        stack.push_back(s);
        for (std::size_t head = 0; head < stack.size(); ++head) {
            const node u = stack[head];
            for (node v : g.neighbors(u)) {
                if (dist[v] == none) {
                    dist[v] = dist[u] + 1;
                    stack.push_back(v);
                }
                if (dist[v] == dist[u] + 1)
                    paths[v] += paths[u];
            }
        }
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const node w = *it;
            for (node v : g.neighbors(w))
                if (dist[v] + 1 == dist[w])
                    dependency[v] += paths[v] / paths[w] * (1.0 + dependency[w]);
            if (w != s)
                score[w] += dependency[w];
        }
        for (node v : stack) {
            dist[v] = none;
            paths[v] = 0;
            dependency[v] = 0;
        }
    }
    // each unordered pair is accumulated from both of its endpoints
    const double scale = static_cast<double>(n) / static_cast<double>(sources.size()) / 2.0;
    for (auto &b : score)
        b *= scale;
    return score;
}

std::vector<double> harmonicCloseness(const Graph &g, count samples, std::uint64_t seed) {
    const count n = g.numberOfNodes();
    std::vector<double> score(n, 0.0);
    if (n < 2)
        return score;
    const auto sources = sampleSources(n, std::max<count>(samples, 1), seed);
    std::vector<count> dist(n, none);
    std::vector<node> queue;
    queue.reserve(n);
    for (node s : sources) {
        queue.clear();
        queue.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const node u = queue[head];
            for (node v : g.neighbors(u)) {
                if (dist[v] == none) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        // distances are symmetric: s contributes 1/d(s, v) to every reached v
        for (node v : queue) {
            if (v != s)
                score[v] += 1.0 / static_cast<double>(dist[v]);
            dist[v] = none;
        }
    }
    const double scale = static_cast<double>(n) / static_cast<double>(sources.size())
                         / static_cast<double>(n - 1);
    for (auto &c : score)
        c *= scale;
    return score;
}

CoreDecomposition coreDecomposition(const Graph &g) {
    const count n = g.numberOfNodes();
    CoreDecomposition result;
    result.core.assign(n, 0);
    if (n == 0)
        return result;

    // Batagelj & Zaversnik
    const count maxDeg = g.maxDegree();
    std::vector<count> degree(n);
    std::vector<count> binStart(maxDeg + 1, 0);
    for (node u = 0; u < n; ++u) {
        degree[u] = g.degree(u);
        ++binStart[degree[u]];
    }
    count start = 0;
    for (count d = 0; d <= maxDeg; ++d) {
        const count size = binStart[d];
        binStart[d] = start;
        start += size;
    }
    std::vector<node> vert(n);
    std::vector<count> pos(n);
    for (node u = 0; u < n; ++u) {
        pos[u] = binStart[degree[u]]++;
        vert[pos[u]] = u;
    }
    for (count d = maxDeg; d > 0; --d)
        binStart[d] = binStart[d - 1];
    binStart[0] = 0;

    for (count i = 0; i < n; ++i) {
        const node v = vert[i];
        for (node u : g.neighbors(v)) {
            if (degree[u] > degree[v]) {
                const count du = degree[u];
                const count pu = pos[u];
                const count pw = binStart[du];
                const node w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++binStart[du];
                --degree[u];
            }
        }
    }
    result.core = std::move(degree);
    result.order = std::move(vert);
    result.maxCore = *std::max_element(result.core.begin(), result.core.end());
    return result;
}

TriangleCount countTriangles(const Graph &g) {
    const count n = g.numberOfNodes();
    TriangleCount result;
    result.perNode.assign(n, 0);
    // orient every edge towards the endpoint of higher (degree, id) rank
    auto before = [&](node a, node b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
    };
    std::vector<std::vector<node>> out(n);
    g.forEdges([&](node u, node v) {
        if (before(u, v))
            out[u].push_back(v);
        else
            out[v].push_back(u);
    });
    for (auto &list : out)
        std::sort(list.begin(), list.end());

    for (node u = 0; u < n; ++u) {
        for (node v : out[u]) {
            // common out-neighbors close a triangle exactly once
            auto a = out[u].begin();
            auto b = out[v].begin();
            while (a != out[u].end() && b != out[v].end()) {
                if (*a < *b) {
                    ++a;
                } else if (*b < *a) {
                    ++b;
                } else {
                    ++result.total;
                    ++result.perNode[u];
                    ++result.perNode[v];
                    ++result.perNode[*a];
                    ++a;
                    ++b;
                }
            }
        }
    }
    return result;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(count n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), index{0}); }

    index find(index u) {
        while (parent_[u] != u) {
            parent_[u] = parent_[parent_[u]];
            u = parent_[u];
        }
        return u;
    }

    bool merge(index u, index v) {
        u = find(u);
        v = find(v);
        if (u == v)
            return false;
        parent_[std::max(u, v)] = std::min(u, v);
        return true;
    }

private:
    std::vector<index> parent_;
};

} // namespace

std::vector<Edge> spanningForest(const Graph &g) {
    UnionFind uf(g.numberOfNodes());
    std::vector<Edge> forest;
    g.forEdges([&](node u, node v) {
        if (uf.merge(u, v))
            forest.emplace_back(u, v);
    });
    return forest;
}

} // namespace recon
