#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <recon/Community.hpp>
#include <recon/Errors.hpp>
#include <recon/Random.hpp>

namespace recon {

Partition::Partition(const Graph &g, std::vector<index> assignment)
    : assignment_(std::move(assignment)) {
    const count n = g.numberOfNodes();
    if (assignment_.size() != n)
        throw std::invalid_argument("partition covers " + std::to_string(assignment_.size())
                                    + " nodes, graph has " + std::to_string(n));
    index k = 0;
    for (index c : assignment_)
        k = std::max(k, c + 1);
    if (n == 0)
        k = 0;
    sizes_.assign(k, 0);
    for (index c : assignment_)
        ++sizes_[c];
    if (std::find(sizes_.begin(), sizes_.end(), 0) != sizes_.end())
        throw std::invalid_argument("partition ids are not dense");
    intra_.assign(k, 0);
    g.forEdges([&](node u, node v) {
        if (assignment_[u] == assignment_[v])
            ++intra_[assignment_[u]];
        else
            ++inter_;
    });
}

Partition Partition::compacted(const Graph &g, std::vector<index> assignment) {
    std::vector<index> relabel;
    std::vector<index> dense(assignment.size());
    index next = 0;
    for (std::size_t u = 0; u < assignment.size(); ++u) {
        const index c = assignment[u];
        if (c >= relabel.size())
            relabel.resize(c + 1, none);
        if (relabel[c] == none)
            relabel[c] = next++;
        dense[u] = relabel[c];
    }
    return Partition(g, std::move(dense));
}

Partition Partition::singletons(const Graph &g) {
    std::vector<index> a(g.numberOfNodes());
    std::iota(a.begin(), a.end(), index{0});
    return Partition(g, std::move(a));
}

Partition Partition::oneCommunity(const Graph &g) {
    return Partition(g, std::vector<index>(g.numberOfNodes(), 0));
}

count Partition::totalIntraEdges() const noexcept {
    return std::accumulate(intra_.begin(), intra_.end(), count{0});
}

double modularity(const Graph &g, const Partition &p) {
    const count m = g.numberOfEdges();
    if (m == 0)
        throw UndefinedInput("modularity: graph has no edges");
    if (p.numberOfNodes() != g.numberOfNodes())
        throw std::invalid_argument("modularity: partition does not match graph");
    std::vector<double> volume(p.numberOfCommunities(), 0.0);
    for (node u = 0; u < g.numberOfNodes(); ++u)
        volume[p[u]] += static_cast<double>(g.degree(u));
    const double md = static_cast<double>(m);
    double q = 0;
    for (index c = 0; c < p.numberOfCommunities(); ++c) {
        const double share = volume[c] / (2.0 * md);
        q += static_cast<double>(p.intraEdges()[c]) / md - share * share;
    }
    return q;
}

double mixingParameter(const Graph &g, const Partition &p) {
    const count m = g.numberOfEdges();
    if (m == 0)
        throw UndefinedInput("mixing parameter: graph has no edges");
    return static_cast<double>(p.interEdges()) / static_cast<double>(m);
}

namespace {

// Contracted graph of one Louvain level. Weights count original edges.
struct LevelGraph {
    struct Arc {
        index target;
        std::int64_t weight;
    };
    std::vector<std::vector<Arc>> arcs; // no self-arcs
    std::vector<std::int64_t> volume;   // weighted degree incl. twice the internal weight

    count size() const { return arcs.size(); }
};

LevelGraph fromGraph(const Graph &g) {
    LevelGraph lg;
    lg.arcs.resize(g.numberOfNodes());
    lg.volume.resize(g.numberOfNodes());
    for (node u = 0; u < g.numberOfNodes(); ++u) {
        lg.arcs[u].reserve(g.degree(u));
        for (node v : g.neighbors(u))
            lg.arcs[u].push_back({v, 1});
        lg.volume[u] = static_cast<std::int64_t>(g.degree(u));
    }
    return lg;
}

LevelGraph contract(const LevelGraph &lg, const std::vector<index> &community, count k) {
    LevelGraph coarse;
    coarse.arcs.resize(k);
    coarse.volume.assign(k, 0);
    for (index u = 0; u < lg.size(); ++u)
        coarse.volume[community[u]] += lg.volume[u];

    std::vector<std::int64_t> weightTo(k, 0);
    std::vector<index> touched;
    std::vector<std::vector<index>> members(k);
    for (index u = 0; u < lg.size(); ++u)
        members[community[u]].push_back(u);
    for (index c = 0; c < k; ++c) {
        touched.clear();
        for (index u : members[c]) {
            for (const auto &arc : lg.arcs[u]) {
                const index d = community[arc.target];
                if (d == c)
                    continue;
                if (weightTo[d] == 0)
                    touched.push_back(d);
                weightTo[d] += arc.weight;
            }
        }
        std::sort(touched.begin(), touched.end());
        for (index d : touched) {
            coarse.arcs[c].push_back({d, weightTo[d]});
            weightTo[d] = 0;
        }
    }
    return coarse;
}

// One move phase. Returns true if any node changed community; `community` is
// left with dense ids and `k` set to their number.
bool movePhase(const LevelGraph &lg, std::int64_t m, std::vector<index> &community, count &k,
               Rng &rng, count maxIterations) {
    const count n = lg.size();
    community.resize(n);
    std::iota(community.begin(), community.end(), index{0});
    std::vector<std::int64_t> communityVolume = lg.volume;

    std::vector<index> order(n);
    std::iota(order.begin(), order.end(), index{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::int64_t> affinity(n, -1);
    std::vector<index> seen;
    bool anyMove = false;
    const std::int64_t twoM = 2 * m;

    for (count iteration = 0; iteration < maxIterations; ++iteration) {
        count moves = 0;
        for (index u : order) {
            const index current = community[u];
            seen.clear();
            affinity[current] = 0;
            seen.push_back(current);
            for (const auto &arc : lg.arcs[u]) {
                const index c = community[arc.target];
                if (affinity[c] < 0) {
                    affinity[c] = 0;
                    seen.push_back(c);
                }
                affinity[c] += arc.weight;
            }

            const std::int64_t volU = lg.volume[u];
            // insertion score, scaled by 2m^2 so it stays integral
            auto score = [&](index c) {
                const std::int64_t volC = communityVolume[c] - (c == current ? volU : 0);
                return twoM * affinity[c] - volU * volC;
            };
            index best = current;
            std::int64_t bestScore = score(current);
            for (index c : seen) {
                if (c == current)
                    continue;
                const std::int64_t s = score(c);
                if (s > bestScore) {
                    bestScore = s;
                    best = c;
                }
            }
            for (index c : seen)
                affinity[c] = -1;

            if (best != current) {
                communityVolume[current] -= volU;
                communityVolume[best] += volU;
                community[u] = best;
                ++moves;
            }
        }
        if (moves == 0)
            break;
        anyMove = true;
    }

    std::vector<index> relabel(n, none);
    k = 0;
    for (index u = 0; u < n; ++u) {
        if (relabel[community[u]] == none)
            relabel[community[u]] = k++;
        community[u] = relabel[community[u]];
    }
    return anyMove;
}

} // namespace

Partition plm(const Graph &g, const PlmOptions &options) {
    const count n = g.numberOfNodes();
    const auto m = static_cast<std::int64_t>(g.numberOfEdges());
    if (m == 0)
        return Partition::singletons(g);

    auto rng = makeRng(options.seed);
    std::vector<index> assignment(n);
    std::iota(assignment.begin(), assignment.end(), index{0});

    LevelGraph level = fromGraph(g);
    std::vector<index> community;
    count k = 0;
    while (movePhase(level, m, community, k, rng, options.maxIterations)) {
        for (auto &a : assignment)
            a = community[a];
        level = contract(level, community, k);
    }
    return Partition::compacted(g, std::move(assignment));
}

} // namespace recon
