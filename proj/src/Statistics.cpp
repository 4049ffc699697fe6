#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include <recon/Errors.hpp>
#include <recon/Random.hpp>
#include <recon/Statistics.hpp>

namespace recon {

double gini(std::span<const double> values) {
    if (values.empty())
        throw UndefinedInput("gini: empty input");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0)
        throw std::invalid_argument("gini: negative value");
    const double total = std::accumulate(sorted.begin(), sorted.end(), 0.0);
    if (total <= 0)
        throw UndefinedInput("gini: all values are zero");
    const auto n = static_cast<double>(sorted.size());
    double weighted = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        weighted += static_cast<double>(i + 1) * sorted[i];
    const double g = 2.0 * weighted / (n * total) - (n + 1.0) / n;
    return std::clamp(g, 0.0, 1.0);
}

double degreeGini(const Graph &g) {
    std::vector<double> d(g.numberOfNodes());
    for (node u = 0; u < g.numberOfNodes(); ++u)
        d[u] = static_cast<double>(g.degree(u));
    return gini(d);
}

std::vector<double> localClustering(const Graph &g) {
    const count n = g.numberOfNodes();
    std::vector<double> c(n, 0.0);
    std::vector<char> mark(n, 0);
    for (node u = 0; u < n; ++u) {
        const count d = g.degree(u);
        if (d < 2)
            continue;
        for (node v : g.neighbors(u))
            mark[v] = 1;
        count closed = 0;
        for (node v : g.neighbors(u))
            for (node w : g.neighbors(v))
                closed += mark[w];
        for (node v : g.neighbors(u))
            mark[v] = 0;
        // each triangle through u is seen from both of its other corners
        c[u] = static_cast<double>(closed) / static_cast<double>(d * (d - 1));
    }
    return c;
}

double averageLocalClustering(const Graph &g) {
    if (g.numberOfNodes() == 0)
        return 0.0;
    auto c = localClustering(g);
    return std::accumulate(c.begin(), c.end(), 0.0) / static_cast<double>(c.size());
}

std::map<count, DegreeClustering> clusteringByDegree(const Graph &g) {
    auto c = localClustering(g);
    std::map<count, DegreeClustering> byDegree;
    for (node u = 0; u < g.numberOfNodes(); ++u) {
        auto &entry = byDegree[g.degree(u)];
        ++entry.nodes;
        entry.avgClustering += c[u];
    }
    for (auto &[d, entry] : byDegree)
        entry.avgClustering /= static_cast<double>(entry.nodes);
    return byDegree;
}

std::vector<count> Components::sizes() const {
    std::vector<count> s(number, 0);
    for (index c : id)
        ++s[c];
    return s;
}

index Components::largest() const {
    if (number == 0)
        return none;
    auto s = sizes();
    return static_cast<index>(std::max_element(s.begin(), s.end()) - s.begin());
}

Components connectedComponents(const Graph &g) {
    const count n = g.numberOfNodes();
    Components comps;
    comps.id.assign(n, none);
    std::vector<node> queue;
    queue.reserve(n);
    for (node s = 0; s < n; ++s) {
        if (comps.id[s] != none)
            continue;
        const index c = comps.number++;
        comps.id[s] = c;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (node v : g.neighbors(queue[head])) {
                if (comps.id[v] == none) {
                    comps.id[v] = c;
                    queue.push_back(v);
                }
            }
        }
    }
    return comps;
}

std::string DiameterResult::label() const {
    std::string base = mode == DiameterMode::Exact ? "exact" : "effective90";
    return sampled ? base + "-sampled" : base;
}

namespace {

// BFS from s; adds the number of nodes at each distance to `histogram`.
void accumulateDistances(const Graph &g, node s, std::vector<count> &dist,
                         std::vector<node> &queue, std::vector<count> &histogram) {
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
    for (node v : queue) {
        if (dist[v] >= histogram.size())
            histogram.resize(dist[v] + 1, 0);
        ++histogram[dist[v]];
        dist[v] = none;
    }
}

} // namespace

DiameterResult diameter(const Graph &g, const DiameterOptions &options) {
    const count n = g.numberOfNodes();
    if (n == 0)
        throw UndefinedInput("diameter: graph has no nodes");

    auto comps = connectedComponents(g);
    const index giant = comps.largest();
    std::vector<node> members;
    for (node u = 0; u < n; ++u)
        if (comps.id[u] == giant)
            members.push_back(u);

    DiameterResult result;
    result.mode = options.mode;
    std::vector<node> sources = members;
    if (members.size() > options.exactThreshold && options.samples < members.size()) {
        auto rng = makeRng(options.seed);
        std::vector<node> sample;
        std::sample(members.begin(), members.end(), std::back_inserter(sample),
                    static_cast<std::ptrdiff_t>(options.samples), rng);
        sources = std::move(sample);
        result.sampled = true;
    }

    std::vector<count> dist(n, none);
    std::vector<node> queue;
    queue.reserve(members.size());
    std::vector<count> histogram;
    for (node s : sources)
        accumulateDistances(g, s, dist, queue, histogram);

    if (options.mode == DiameterMode::Exact) {
        result.value = histogram.empty() ? 0.0 : static_cast<double>(histogram.size() - 1);
        return result;
    }

    // distance 0 entries are the sources themselves
    count pairs = 0;
    for (std::size_t h = 1; h < histogram.size(); ++h)
        pairs += histogram[h];
    if (pairs == 0)
        return result;
    const double target = 0.9;
    double previous = 0;
    count cumulative = 0;
    for (std::size_t h = 1; h < histogram.size(); ++h) {
        cumulative += histogram[h];
        const double fraction = static_cast<double>(cumulative) / static_cast<double>(pairs);
        if (fraction >= target) {
            result.value = static_cast<double>(h - 1) + (target - previous) / (fraction - previous);
            return result;
        }
        previous = fraction;
    }
    result.value = static_cast<double>(histogram.size() - 1);
    return result;
}

} // namespace recon
