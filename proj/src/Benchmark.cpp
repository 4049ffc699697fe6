#include <chrono>
#include <functional>
#include <ostream>

#include <recon/Algorithms.hpp>
#include <recon/Benchmark.hpp>
#include <recon/Community.hpp>
#include <recon/Statistics.hpp>

namespace recon {

BenchmarkRun timedSuite(const Graph &g, std::uint64_t seed, count reps) {
    BenchmarkRun run;
    if (g.numberOfEdges() == 0) {
        run.diagnostic = "graph has no edges; benchmark suite skipped";
        return run;
    }
    reps = std::max<count>(reps, 1);

    // sink keeps results observable so nothing is optimized away
    volatile std::size_t sink = 0;
    const std::vector<std::pair<std::string, std::function<void()>>> suite = {
        {"connected_components", [&] { sink = sink + connectedComponents(g).number; }},
        {"pagerank", [&] { sink = sink + pageRank(g).size(); }},
        {"betweenness_approx",
         [&] { sink = sink + betweenness(g, defaultBetweennessSamples(g.numberOfNodes()), seed).size(); }},
        {"plm", [&] { sink = sink + plm(g, PlmOptions{seed}).numberOfCommunities(); }},
        {"core_decomposition", [&] { sink = sink + coreDecomposition(g).maxCore; }},
        {"triangle_count", [&] { sink = sink + countTriangles(g).total; }},
        {"spanning_forest", [&] { sink = sink + spanningForest(g).size(); }},
    };

    const auto m = static_cast<double>(g.numberOfEdges());
    for (const auto &[name, algorithm] : suite) {
        algorithm();
        const auto start = std::chrono::steady_clock::now();
        for (count r = 0; r < reps; ++r)
            algorithm();
        const auto elapsed = std::chrono::steady_clock::now() - start;
        double seconds = std::chrono::duration<double>(elapsed).count() / static_cast<double>(reps);
        seconds = std::max(seconds, 1e-9);
        run.entries.push_back({name, seconds * 1e3, m / seconds});
    }
    return run;
}

void writeBenchmarkHeader(std::ostream &out) {
    out << "graph,algorithm,ms,edges_per_second,seed\n";
}

void writeBenchmarkRows(std::ostream &out, const std::string &graphName, const BenchmarkRun &run,
                        std::uint64_t seed) {
    for (const auto &entry : run.entries)
        out << graphName << ',' << entry.algorithm << ',' << entry.milliseconds << ','
            << entry.edgesPerSecond << ',' << seed << '\n';
}

} // namespace recon
