#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <recon/Graph.hpp>

namespace recon {

struct BenchmarkEntry {
    std::string algorithm;
    double milliseconds = 0;
    double edgesPerSecond = 0;
};

struct BenchmarkRun {
    std::vector<BenchmarkEntry> entries;
    /// Set when the suite was skipped.
    std::string diagnostic;
};

/**
 * Times connected components, PageRank, sampled betweenness, PLM, core
 * decomposition, triangle counting and spanning forest on g, one algorithm at a
 * time, each after an untimed warm-up. Reported time is the mean over `reps`.
 * Graphs without edges are skipped.
 */
BenchmarkRun timedSuite(const Graph &g, std::uint64_t seed, count reps = 1);

/// CSV rows "graph,algorithm,ms,edges_per_second,seed".
void writeBenchmarkHeader(std::ostream &out);
void writeBenchmarkRows(std::ostream &out, const std::string &graphName, const BenchmarkRun &run,
                        std::uint64_t seed);

} // namespace recon
