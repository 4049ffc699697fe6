// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include <recon/Algorithms.hpp>
#include <recon/Community.hpp>
#include <recon/EdgeSwitching.hpp>
#include <recon/GraphIO.hpp>
#include <recon/GraphTools.hpp>
#include <recon/Models.hpp>
#include <recon/PowerLawFit.hpp>
#include <recon/ReCoN.hpp>
#include <recon/Statistics.hpp>

#include "Oracles.hpp"
#include "TestGraphs.hpp"

namespace fs = std::filesystem;
using namespace recon;
using namespace recon::testing;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double secondsSince(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double x, int digits = 3) {
    std::ostringstream s;
    s.precision(digits);
    s << std::fixed << x;
    return s.str();
}

struct Dolphins {
    Graph graph;
    std::string label;
};

// The real network when available, otherwise the same-size stand-in.
Dolphins loadDolphins() {
    std::vector<std::string> candidates;
    if (const char *env = std::getenv("RECON_DOLPHINS"))
        candidates.emplace_back(env);
    candidates.emplace_back(RECON_DOLPHINS_PATH);
    for (const auto &path : candidates) {
        if (!path.empty() && fs::exists(path))
            return {readEdgeListFile(path).graph, "dolphins (" + path + ")"};
    }
    return {surrogate62(), "dolphins stand-in (62 nodes, 159 edges)"};
}

const Dolphins &dolphins() {
    static const Dolphins d = loadDolphins();
    return d;
}

unsigned workerThreads() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome degreeExactness() {
    const auto &g = dolphins().graph;
    const auto start = Clock::now();
    int exact = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto r = replicate(g, 1, seed).replica.graph;
        bool same = r.numberOfNodes() == 62 && r.numberOfEdges() == 159;
        for (node u = 0; same && u < g.numberOfNodes(); ++u)
            same = r.degree(u) == g.degree(u);
        exact += same ? 1 : 0;
    }
    const double secs = secondsSince(start);
    return {exact == 20 && secs < 5, std::to_string(exact) + "/20 exact, " + fixed(secs) + " s (limit 5 s)"};
}

Outcome linearScaling() {
    const auto &g = dolphins().graph;
    const auto start = Clock::now();
    bool ok = true;
    std::string sizes;
    for (count x : {1, 2, 4, 8, 16, 32}) {
        auto r = replicate(g, x, 42).replica.graph;
        ok = ok && r.numberOfNodes() == 62 * x && r.numberOfEdges() == 159 * x;
        sizes += " " + std::to_string(r.numberOfNodes()) + "/" + std::to_string(r.numberOfEdges());
    }
    const double secs = secondsSince(start);
    return {ok && secs < 30, "n/m" + sizes + ", " + fixed(secs) + " s (limit 30 s)"};
}

double largestComponentDiameter(const Graph &g) {
    const auto comps = connectedComponents(g);
    const auto giant = comps.largest();
    std::vector<node> mapping(g.numberOfNodes(), none);
    count size = 0;
    for (node u = 0; u < g.numberOfNodes(); ++u)
        if (comps.id[u] == giant)
            mapping[u] = size++;
    std::vector<Edge> edges;
    g.forEdges([&](node u, node v) {
        if (mapping[u] != none && mapping[v] != none)
            edges.emplace_back(mapping[u], mapping[v]);
    });
    DiameterOptions exact;
    exact.exactThreshold = std::numeric_limits<count>::max();
    return diameter(Graph::fromEdges(size, edges), exact).value;
}

Outcome diameterStability() {
    const auto g = ringOfCliques(10, 20);
    const double original = largestComponentDiameter(g);
    int within = 0;
    std::string values;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const double d = largestComponentDiameter(replicate(g, 8, seed).replica.graph);
        within += std::abs(d - original) <= 3 ? 1 : 0;
        values += " " + fixed(d, 0);
    }
    return {within >= 8, "original " + fixed(original, 0) + ", replicas" + values + "; " + std::to_string(within) +
                             "/10 within 3 (need 8)"};
}

Outcome clusteringRetention() {
    const auto g = ringOfCliques(10, 20);
    const auto esmc = fit(g, ModelKind::ESMC, 1);
    double recon = 0, nulls = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        recon += averageLocalClustering(replicate(g, 1, seed).replica.graph);
        nulls += averageLocalClustering(generateModel(esmc, seed));
    }
    recon /= 10;
    nulls /= 10;
    const bool ok = recon >= 4 * nulls;
    return {ok, "ReCoN " + fixed(recon) + " vs ESMC " + fixed(nulls) + " (need ratio >= 4, got " +
                    (nulls > 0 ? fixed(recon / nulls, 1) : std::string("inf")) + ")"};
}

Outcome switchUniformity() {
    const auto start = Clock::now();
    const auto g = cycle(4);
    std::map<std::vector<Edge>, int> seen;
    const int runs = 30000;
    for (int s = 0; s < runs; ++s) {
        auto r = edgeSwitch(g, defaultSwaps(g.numberOfEdges()), static_cast<std::uint64_t>(s));
        ++seen[r.edges()];
    }
    const double secs = secondsSince(start);
    bool ok = seen.size() == 3 && secs < 60;
    std::string freq;
    for (const auto &[edges, hits] : seen) {
        const double f = hits / static_cast<double>(runs);
        ok = ok && std::abs(f - 1.0 / 3.0) <= 0.05;
        freq += " " + fixed(f, 4);
    }
    return {ok, std::to_string(seen.size()) + " realizations, frequencies" + freq + ", " + fixed(secs) + " s"};
}

// Plain bisection on the mean of d^g over [lo, hi], in long double.
double bisectionOracle(count lo, count hi, double mean) {
    auto f = [&](long double g) {
        long double num = 0, den = 0;
        for (count d = lo; d <= hi; ++d) {
            const long double w = std::pow(static_cast<long double>(d), g);
            num += d * w;
            den += w;
        }
        return num / den - mean;
    };
    long double a = -6, b = -1;
    for (int i = 0; i < 200; ++i) {
        const long double mid = (a + b) / 2;
        (f(mid) < 0 ? a : b) = mid;
    }
    return static_cast<double>((a + b) / 2);
}

Outcome plfitPrecision() {
    const auto fitted = plfit(std::vector<count>{1, 1, 1, 3});
    const double oracle = bisectionOracle(1, 3, 1.5);
    const auto clamped = plfit(std::vector<count>{1, 2, 3});
    const bool ok = !fitted.clamped && std::abs(fitted.gamma - oracle) <= 1e-3 && clamped.clamped &&
                    clamped.gamma == -1.0;
    return {ok, "gamma " + fixed(fitted.gamma, 6) + " vs oracle " + fixed(oracle, 6) + ", clamped case " +
                    fixed(clamped.gamma, 6)};
}

Outcome fittingGoldens() {
    const auto &g = dolphins().graph;
    const auto er = std::get<ErParams>(fit(g, ModelKind::ER, 1));
    const auto ba = std::get<BaParams>(fit(g, ModelKind::BA, 1));
    const auto rmat = std::get<RmatParams>(fit(g, ModelKind::RMAT, 1));
    const auto cl = std::get<ClParams>(fit(g, ModelKind::CL, 2));
    const auto esmc = std::get<EsmcParams>(fit(g, ModelKind::ESMC, 2));
    const auto once = degreeSequence(g);
    auto twice = once;
    twice.insert(twice.end(), once.begin(), once.end());
    const double p = 2.0 * 159 / (62.0 * 61.0);
    const bool ok = std::abs(er.p - p) <= 1e-12 && ba.k == 2 && rmat.scale == 6 && rmat.edgeFactor == 2 &&
                    cl.degrees == twice && esmc.degrees == twice;
    return {ok, "p " + fixed(er.p, 12) + ", k " + std::to_string(ba.k) + ", s " + std::to_string(rmat.scale) +
                    ", e " + std::to_string(rmat.edgeFactor) + ", concatenation " +
                    (cl.degrees == twice && esmc.degrees == twice ? "exact" : "wrong")};
}

Outcome oracleEquivalence() {
    const auto start = Clock::now();
    int matched = 0;
    const auto corpus = smallCorpus();
    for (const auto &g : corpus) {
        bool ok = countTriangles(g).total == bruteTriangles(g);
        ok = ok && coreDecomposition(g).core == bruteCores(g);
        const auto comps = connectedComponents(g).number;
        ok = ok && comps == bruteComponents(g);
        ok = ok && spanningForest(g).size() == g.numberOfNodes() - comps;
        if (g.numberOfNodes() <= 10) {
            const auto fast = betweenness(g, g.numberOfNodes(), 1);
            const auto slow = bruteBetweenness(g);
            for (node u = 0; u < g.numberOfNodes(); ++u)
                ok = ok && std::abs(fast[u] - slow[u]) <= 1e-9 * std::max(1.0, slow[u]);
        }
        matched += ok ? 1 : 0;
    }
    const double secs = secondsSince(start);
    return {matched == static_cast<int>(corpus.size()) && secs < 30,
            std::to_string(matched) + "/" + std::to_string(corpus.size()) + " graphs match, " + fixed(secs) + " s"};
}

Outcome plmSanity() {
    int recovered = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = plantedBisection(100, 0.3, 0.01, seed);
        PlmOptions options;
        options.seed = seed;
        const auto p = plm(g, options);
        bool exact = p.numberOfCommunities() == 2;
        for (node u = 0; exact && u < 100; ++u)
            exact = (p[u] == p[0]) == (u < 50);
        recovered += exact ? 1 : 0;
    }
    return {recovered >= 9, std::to_string(recovered) + "/10 exact recoveries (need 9)"};
}

Outcome throughput() {
    const auto &g = dolphins().graph;
    GenerateOptions options;
    options.threads = workerThreads();
    const auto start = Clock::now();
    const auto result = replicate(g, 10000, 42, std::nullopt, options);
    const double secs = secondsSince(start);
    const auto m = result.replica.graph.numberOfEdges();
    const double residual = static_cast<double>(result.replica.residualForbidden) / static_cast<double>(m);
    return {secs < 120 && residual < 1e-3 && m == 159 * 10000,
            std::to_string(m) + " edges in " + fixed(secs) + " s with " + std::to_string(options.threads) +
                " threads, residual forbidden " + std::to_string(result.replica.residualForbidden) + " (" +
                fixed(100 * residual, 4) + "% of m)"};
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Drops the timing columns (ms, edges_per_second) of a benchmark CSV.
std::string withoutTimings(const std::string &csv) {
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.size() == 5)
            out += cells[0] + "," + cells[1] + "," + cells[4] + "\n";
    }
    return out;
}

Outcome determinism() {
    const fs::path dir = fs::temp_directory_path() / ("recon-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const fs::path input = dir / "input.el";
    writeEdgeListFile(input, dolphins().graph);
    const std::string cli = RECON_CLI_PATH;
    const std::string in = input.string();

    struct Command {
        std::string args;
        std::vector<std::string> outputs; // relative to the run directory
        bool threaded = true;
        bool timed = false;
    };
    std::vector<Command> commands;
    for (const char *model : {"recon", "er", "ba", "cl", "esmc", "rmat"})
        commands.push_back({std::string("replicate ") + in + " --model " + model + " --scale 2 --seed 7 --out g.el",
                            {"g.el", "g.el.json"}});
    commands.push_back({"replicate " + in + " --model rmat --initiator random --out g.el", {"g.el", "g.el.json"}});
    commands.push_back({"fit " + in + " --model rmat --initiator random --scale 3 --out fit.json", {"fit.json"}});
    commands.push_back({"fit " + in + " --model recon --out fit.json", {"fit.json"}});
    commands.push_back({"fit " + in + " --model lfr --out fit.json", {"fit.json"}});
    commands.push_back({"profile " + in + " --out profile.json", {"profile.json"}, false});
    commands.push_back({"compare " + in + " " + in + " --out cmp", {"cmp.json", "cmp.csv"}});
    commands.push_back({"scaling-study " + in + " --scales 1,2,4 --seeds 2 --out study.csv", {"study.csv"}});
    commands.push_back({"scaling-study " + in + " --model cl --scales 1,3 --out study.csv", {"study.csv"}});
    commands.push_back({"bench " + in + " --out bench.csv", {"bench.csv"}, false, true});

    int identical = 0;
    std::string failures;
    for (std::size_t i = 0; i < commands.size(); ++i) {
        std::vector<std::string> runs[2];
        bool ok = true;
        for (int r = 0; r < 2; ++r) {
            const fs::path runDir = dir / ("c" + std::to_string(i) + "r" + std::to_string(r));
            fs::create_directories(runDir);
            std::string run = "cd \"" + runDir.string() + "\" && \"" + cli + "\" " + commands[i].args;
            if (commands[i].threaded)
                run += " --threads 1";
            run += " 2>/dev/null";
            ok = ok && std::system(run.c_str()) == 0;
            for (const auto &out : commands[i].outputs) {
                auto text = slurp(runDir / out);
                ok = ok && !text.empty();
                runs[r].push_back(commands[i].timed ? withoutTimings(text) : text);
            }
        }
        ok = ok && runs[0] == runs[1];
        identical += ok ? 1 : 0;
        if (!ok)
            failures += " [" + commands[i].args.substr(0, commands[i].args.find(' ')) + "]";
    }
    fs::remove_all(dir);
    return {identical == static_cast<int>(commands.size()),
            std::to_string(identical) + "/" + std::to_string(commands.size()) + " commands byte-identical" +
                (failures.empty() ? "" : ", differing:" + failures)};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria{
        {1, "degree exactness", degreeExactness},
        {2, "linear scaling", linearScaling},
        {3, "diameter stability", diameterStability},
        {4, "clustering retention", clusteringRetention},
        {5, "edge-switch uniformity", switchUniformity},
        {6, "plfit precision", plfitPrecision},
        {7, "fitting goldens", fittingGoldens},
        {8, "oracle equivalence", oracleEquivalence},
        {9, "PLM sanity", plmSanity},
        {10, "throughput", throughput},
        {11, "determinism", determinism},
    };
    std::cout << "input: " << dolphins().label << "\n";
    int failed = 0;
    for (const auto &c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " passed\n";
    return failed == 0 ? 0 : 1;
}
