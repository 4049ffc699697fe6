#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include <recon/EdgeSwitching.hpp>
#include <recon/ReCoN.hpp>
#include <recon/Random.hpp>

namespace recon {

namespace {

constexpr std::uint64_t communityStream = 1;
constexpr std::uint64_t globalStream = 2;
constexpr std::uint64_t rewiringStream = 3;

double millisecondsSince(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

template <typename F>
void parallelFor(count tasks, unsigned threads, F &&body) {
    if (threads <= 1 || tasks <= 1) {
        for (count t = 0; t < tasks; ++t)
            body(t);
        return;
    }
    std::atomic<count> next{0};
    std::vector<std::jthread> workers;
    const unsigned used = static_cast<unsigned>(std::min<count>(threads, tasks));
    for (unsigned w = 0; w < used; ++w) {
        workers.emplace_back([&] {
            for (count t = next++; t < tasks; t = next++)
                body(t);
        });
    }
}

} // namespace

std::vector<count> ReconModel::intraEdgesPerCommunity() const {
    std::vector<count> perCommunity(numberOfCommunities(), 0);
    for (auto [u, v] : intraEdges)
        ++perCommunity[community[u]];
    return perCommunity;
}

ReconModel fitRecon(const Graph &g, const std::optional<Partition> &partition, std::uint64_t seed) {
    if (partition && partition->numberOfNodes() != g.numberOfNodes())
        throw std::invalid_argument("partition covers " + std::to_string(partition->numberOfNodes())
                                    + " nodes, graph has " + std::to_string(g.numberOfNodes()));
    const Partition p = partition ? *partition : plm(g, PlmOptions{seed});

    ReconModel model;
    model.n = g.numberOfNodes();
    model.community = p.assignment();
    model.communitySizes = p.sizes();
    model.internalDegree.assign(model.n, 0);
    model.externalDegree.assign(model.n, 0);
    g.forEdges([&](node u, node v) {
        if (p[u] == p[v]) {
            ++model.internalDegree[u];
            ++model.internalDegree[v];
            model.intraEdges.emplace_back(u, v);
        } else {
            ++model.externalDegree[u];
            ++model.externalDegree[v];
            model.interEdges.emplace_back(u, v);
        }
    });
    return model;
}

Replica generate(const ReconModel &model, count x, std::uint64_t seed, const GenerateOptions &options) {
    if (x == 0)
        throw std::invalid_argument("generate: scale must be positive");
    const count n = model.n;
    const count k = model.numberOfCommunities();

    // local ids of every community's members and its intra edges in local ids
    std::vector<std::vector<node>> members(k);
    std::vector<index> localId(n);
    for (node u = 0; u < n; ++u) {
        localId[u] = members[model.community[u]].size();
        members[model.community[u]].push_back(u);
    }
    std::vector<std::vector<Edge>> localIntra(k);
    for (auto [u, v] : model.intraEdges)
        localIntra[model.community[u]].emplace_back(localId[u], localId[v]);

    // Step 3: one chain per community copy, copies seeded independently
    const count tasks = x * k;
    std::vector<std::vector<Edge>> intraResult(tasks);
    const std::uint64_t communitySeed = deriveSeed(seed, communityStream);
    parallelFor(tasks, options.threads, [&](count t) {
        const count copy = t / k;
        const index c = t % k;
        std::vector<Edge> edges = localIntra[c];
        if (members[c].size() > 1 && !edges.empty()) {
            SwitchableAdjacency adjacency(members[c].size(), edges);
            EdgeSwitcher switcher(adjacency, edges);
            auto rng = makeRng(deriveSeed(communitySeed, t));
            switcher.run(defaultSwaps(edges.size()), rng);
        }
        const node offset = copy * n;
        for (auto &[u, v] : edges) {
            u = members[c][u] + offset;
            v = members[c][v] + offset;
        }
        intraResult[t] = std::move(edges);
    });

    Replica replica;
    replica.scale = x;
    replica.community.resize(x * n);
    for (count copy = 0; copy < x; ++copy)
        for (node u = 0; u < n; ++u)
            replica.community[copy * n + u] = copy * k + model.community[u];

    std::vector<Edge> global;
    global.reserve(x * model.interEdges.size());
    for (count copy = 0; copy < x; ++copy)
        for (auto [u, v] : model.interEdges)
            global.emplace_back(u + copy * n, v + copy * n);

    std::vector<Edge> all;
    all.reserve(x * model.numberOfEdges());
    for (const auto &edges : intraResult)
        all.insert(all.end(), edges.begin(), edges.end());
    intraResult = {};
    const count intraCount = all.size();
    all.insert(all.end(), global.begin(), global.end());

    // Step 4: global chain; membership checks see the intra edges too, so the
    // result stays simple
    SwitchableAdjacency adjacency(x * n, all);
    EdgeSwitcher switcher(adjacency, global);
    auto rng = makeRng(deriveSeed(seed, globalStream));
    switcher.run(defaultSwaps(global.size()), rng);

    auto isForbidden = [&](const Edge &e) {
        return replica.community[e.first] == replica.community[e.second];
    };
    std::vector<index> forbidden;
    for (index i = 0; i < global.size(); ++i)
        if (isForbidden(global[i]))
            forbidden.push_back(i);
    replica.forbiddenAfterGlobal = forbidden.size();

    // rewiring: switch each forbidden edge with a random partner, keeping only
    // switches that are simple and reduce the forbidden count of the pair
    auto rewireRng = makeRng(deriveSeed(seed, rewiringStream));
    const count m = global.size();
    while (!forbidden.empty() && replica.rewiringPasses < options.maxRewiringPasses && m >= 2) {
        ++replica.rewiringPasses;
        for (index f : forbidden) {
            if (!isForbidden(global[f]))
                continue;
            index partner = uniformBelow(rewireRng, m - 1);
            if (partner >= f)
                ++partner;
            const bool flip = (rewireRng() >> 63) != 0;
            auto proposed = switcher.proposal(f, partner, flip);
            const int before = 1 + (isForbidden(global[partner]) ? 1 : 0);
            const int after = (isForbidden(proposed.first) ? 1 : 0) + (isForbidden(proposed.second) ? 1 : 0);
            if (after < before)
                switcher.trySwitch(f, partner, flip);
        }
        forbidden.clear();
        for (index i = 0; i < m; ++i)
            if (isForbidden(global[i]))
                forbidden.push_back(i);
    }
    replica.residualForbidden = forbidden.size();

    std::copy(global.begin(), global.end(), all.begin() + static_cast<std::ptrdiff_t>(intraCount));
    replica.graph = Graph::fromEdges(x * n, all);
    return replica;
}

ReplicationResult replicate(const Graph &g, count x, std::uint64_t seed,
                            const std::optional<Partition> &partition, const GenerateOptions &options) {
    ReplicationResult result;
    auto start = std::chrono::steady_clock::now();
    ReconModel model = fitRecon(g, partition, seed);
    result.msFit = millisecondsSince(start);
    result.communities = model.numberOfCommunities();

    start = std::chrono::steady_clock::now();
    result.replica = generate(model, x, seed, options);
    result.msGenerate = millisecondsSince(start);
    return result;
}

} // namespace recon
