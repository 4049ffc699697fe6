#include <algorithm>
#include <cmath>
#include <functional>
#include <future>

#include <recon/Algorithms.hpp>
#include <recon/Community.hpp>
#include <recon/Metrics.hpp>

namespace recon {

FeatureVector profile(const Graph &g, const ProfileOptions &options) {
    FeatureVector f;
    f.n = g.numberOfNodes();
    f.m = g.numberOfEdges();
    f.maxDegree = g.maxDegree();
    f.degreeGini = f.m > 0 ? degreeGini(g) : 0.0;
    f.avgClustering = averageLocalClustering(g);

    auto diameterOptions = options.diameter;
    diameterOptions.seed = options.seed;
    const auto d = diameter(g, diameterOptions);
    f.diameter = d.value;
    f.diameterMode = d.label();

    f.components = connectedComponents(g).number;
    const Partition p = plm(g, PlmOptions{options.seed});
    f.communities = p.numberOfCommunities();
    f.nontrivialCommunities = static_cast<count>(
        std::count_if(p.sizes().begin(), p.sizes().end(), [](count s) { return s >= nontrivialCommunitySize; }));
    return f;
}

std::vector<std::pair<std::string, double>> namedFeatures(const FeatureVector &f) {
    auto real = [](count c) { return static_cast<double>(c); };
    return {
        {"n", real(f.n)},
        {"m", real(f.m)},
        {"max_degree", real(f.maxDegree)},
        {"degree_gini", f.degreeGini},
        {"avg_clustering", f.avgClustering},
        {"diameter", f.diameter},
        {"components", real(f.components)},
        {"communities", real(f.communities)},
        {"nontrivial_communities", real(f.nontrivialCommunities)},
    };
}

ComparisonReport compare(const FeatureVector &original, const FeatureVector &replica) {
    ComparisonReport report;
    const auto lhs = namedFeatures(original);
    const auto rhs = namedFeatures(replica);
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        FeatureComparison c;
        c.name = lhs[i].first;
        c.original = lhs[i].second;
        c.replica = rhs[i].second;
        if (c.original != 0) {
            c.value = c.replica / c.original;
        } else {
            c.isRatio = false;
            c.value = c.replica - c.original;
        }
        report.features.push_back(std::move(c));
    }
    return report;
}

std::vector<double> minMaxNormalize(std::vector<double> values) {
    if (values.empty())
        return values;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    const double low = *lo;
    const double range = *hi - low;
    for (auto &v : values)
        v = range > 0 ? (v - low) / range : 0.0;
    return values;
}

double quantile(std::vector<double> values, double q) {
    if (values.empty())
        return 0.0;
    std::sort(values.begin(), values.end());
    const double position = q * static_cast<double>(values.size() - 1);
    const auto below = static_cast<std::size_t>(std::floor(position));
    const std::size_t above = std::min(below + 1, values.size() - 1);
    const double fraction = position - static_cast<double>(below);
    return values[below] + fraction * (values[above] - values[below]);
}

std::vector<CentralityDistribution> centralityDistributions(const Graph &g, const CentralityOptions &options) {
    const count n = g.numberOfNodes();
    const count sampled = n <= options.exactLimit ? n : defaultBetweennessSamples(n);
    auto toReal = [](const std::vector<count> &v) { return std::vector<double>(v.begin(), v.end()); };

    const std::vector<std::pair<std::string, std::function<std::vector<double>()>>> measures = {
        {"degree",
         [&] {
             std::vector<double> d(n);
             for (node u = 0; u < n; ++u)
                 d[u] = static_cast<double>(g.degree(u));
             return d;
         }},
        {"closeness", [&] { return harmonicCloseness(g, sampled, options.seed); }},
        {"local_clustering", [&] { return localClustering(g); }},
        {"core_number", [&] { return toReal(coreDecomposition(g).core); }},
        {"pagerank", [&] { return n > 0 ? pageRank(g) : std::vector<double>{}; }},
        {"betweenness", [&] { return n > 0 ? betweenness(g, sampled, options.seed) : std::vector<double>{}; }},
    };

    std::vector<CentralityDistribution> out(measures.size());
    if (options.threads > 1) {
        std::vector<std::future<std::vector<double>>> pending;
        for (const auto &entry : measures)
            pending.push_back(std::async(std::launch::async, entry.second));
        for (std::size_t i = 0; i < measures.size(); ++i)
            out[i] = {measures[i].first, minMaxNormalize(pending[i].get())};
    } else {
        for (std::size_t i = 0; i < measures.size(); ++i)
            out[i] = {measures[i].first, minMaxNormalize(measures[i].second())};
    }
    return out;
}

std::vector<CentralitySummary> summarize(const std::vector<CentralityDistribution> &distributions) {
    std::vector<CentralitySummary> out;
    for (const auto &dist : distributions) {
        CentralitySummary s;
        s.measure = dist.measure;
        for (std::size_t i = 0; i < summaryQuantiles.size(); ++i)
            s.quantiles[i] = quantile(dist.scores, summaryQuantiles[i]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace recon
