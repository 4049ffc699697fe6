#pragma once

// Brute-force reference implementations for small graphs.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <recon/Graph.hpp>

#include "TestGraphs.hpp"

namespace recon::testing {

using Matrix = std::vector<std::vector<double>>;

inline constexpr double unreachable = std::numeric_limits<double>::infinity();

// Floyd-Warshall distances plus shortest-path counts.
struct AllPairs {
    Matrix dist;
    Matrix paths;
};

inline AllPairs allPairs(const Graph &g) {
    const auto n = g.numberOfNodes();
    AllPairs ap{Matrix(n, std::vector<double>(n, unreachable)), Matrix(n, std::vector<double>(n, 0))};
    for (node u = 0; u < n; ++u) {
        ap.dist[u][u] = 0;
        ap.paths[u][u] = 1;
        for (node v : g.neighbors(u)) {
            ap.dist[u][v] = 1;
            ap.paths[u][v] = 1;
        }
    }
    for (node k = 0; k < n; ++k)
        for (node i = 0; i < n; ++i)
            for (node j = 0; j < n; ++j)
                ap.dist[i][j] = std::min(ap.dist[i][j], ap.dist[i][k] + ap.dist[k][j]);
    // count paths by layering on distance
    for (double d = 2; d < static_cast<double>(n); ++d) {
        for (node i = 0; i < n; ++i) {
            for (node j = 0; j < n; ++j) {
                if (ap.dist[i][j] != d)
                    continue;
                double total = 0;
                for (node w : g.neighbors(j))
                    if (ap.dist[i][w] == d - 1)
                        total += ap.paths[i][w];
                ap.paths[i][j] = total;
            }
        }
    }
    return ap;
}

inline std::vector<double> bruteBetweenness(const Graph &g) {
    const auto n = g.numberOfNodes();
    auto ap = allPairs(g);
    std::vector<double> score(n, 0);
    for (node s = 0; s < n; ++s)
        for (node t = s + 1; t < n; ++t) {
            if (ap.dist[s][t] == unreachable)
                continue;
            for (node v = 0; v < n; ++v)
                if (v != s && v != t && ap.dist[s][v] + ap.dist[v][t] == ap.dist[s][t])
                    score[v] += ap.paths[s][v] * ap.paths[v][t] / ap.paths[s][t];
        }
    return score;
}

inline std::vector<double> bruteCloseness(const Graph &g) {
    const auto n = g.numberOfNodes();
    auto ap = allPairs(g);
    std::vector<double> score(n, 0);
    for (node u = 0; u < n; ++u) {
        for (node v = 0; v < n; ++v)
            if (u != v && ap.dist[u][v] != unreachable)
                score[u] += 1.0 / ap.dist[u][v];
        if (n > 1)
            score[u] /= static_cast<double>(n - 1);
    }
    return score;
}

// Solves (I - d M) x = (1 - d) / n by Gaussian elimination, M the walk matrix
// with dangling columns spread uniformly.
inline std::vector<double> densePageRank(const Graph &g, double damping) {
    const auto n = g.numberOfNodes();
    const double nn = static_cast<double>(n);
    Matrix a(n, std::vector<double>(n + 1, 0));
    for (node i = 0; i < n; ++i) {
        a[i][i] = 1;
        a[i][n] = (1 - damping) / nn;
    }
    for (node j = 0; j < n; ++j) {
        if (g.degree(j) == 0) {
            for (node i = 0; i < n; ++i)
                a[i][j] -= damping / nn;
        } else {
            for (node i : g.neighbors(j))
                a[i][j] -= damping / static_cast<double>(g.degree(j));
        }
    }
    for (node c = 0; c < n; ++c) {
        node pivot = c;
        for (node r = c + 1; r < n; ++r)
            if (std::abs(a[r][c]) > std::abs(a[pivot][c]))
                pivot = r;
        std::swap(a[c], a[pivot]);
        for (node r = 0; r < n; ++r) {
            if (r == c)
                continue;
            const double f = a[r][c] / a[c][c];
            for (node k = c; k <= n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<double> x(n);
    for (node i = 0; i < n; ++i)
        x[i] = a[i][n] / a[i][i];
    return x;
}

inline std::vector<count> bruteCores(const Graph &g) {
    const auto n = g.numberOfNodes();
    std::vector<count> core(n, 0);
    for (count k = 1; k <= n; ++k) {
        std::vector<bool> alive(n, true);
        bool changed = true;
        while (changed) {
            changed = false;
            for (node u = 0; u < n; ++u) {
                if (!alive[u])
                    continue;
                count deg = 0;
                for (node v : g.neighbors(u))
                    deg += alive[v] ? 1 : 0;
                if (deg < k) {
                    alive[u] = false;
                    changed = true;
                }
            }
        }
        for (node u = 0; u < n; ++u)
            if (alive[u])
                core[u] = k;
    }
    return core;
}

inline count bruteTriangles(const Graph &g) {
    const auto n = g.numberOfNodes();
    count total = 0;
    for (node a = 0; a < n; ++a)
        for (node b = a + 1; b < n; ++b)
            for (node c = b + 1; c < n; ++c)
                total += (g.hasEdge(a, b) && g.hasEdge(b, c) && g.hasEdge(a, c)) ? 1 : 0;
    return total;
}

inline std::vector<Graph> smallCorpus() {
    std::vector<Graph> corpus;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        corpus.push_back(randomGraph(4 + seed % 9, 0.1 + 0.08 * static_cast<double>(seed % 10), seed));
    return corpus;
}

inline count bruteComponents(const Graph &g) {
    auto ap = allPairs(g);
    count number = 0;
    for (node u = 0; u < g.numberOfNodes(); ++u) {
        bool first = true;
        for (node v = 0; v < u; ++v)
            first = first && ap.dist[u][v] == unreachable;
        number += first ? 1 : 0;
    }
    return number;
}

} // namespace recon::testing
