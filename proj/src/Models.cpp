#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <set>

#include <recon/Community.hpp>
#include <recon/EdgeSwitching.hpp>
#include <recon/Models.hpp>

namespace recon {

std::optional<ModelKind> parseModelKind(std::string_view name) {
    if (name == "er")
        return ModelKind::ER;
    if (name == "ba")
        return ModelKind::BA;
    if (name == "cl")
        return ModelKind::CL;
    if (name == "esmc")
        return ModelKind::ESMC;
    if (name == "rmat")
        return ModelKind::RMAT;
    return std::nullopt;
}

std::string_view modelName(ModelKind kind) {
    switch (kind) {
    case ModelKind::ER:
        return "er";
    case ModelKind::BA:
        return "ba";
    case ModelKind::CL:
        return "cl";
    case ModelKind::ESMC:
        return "esmc";
    case ModelKind::RMAT:
        return "rmat";
    }
    return "?";
}

Initiator Initiator::facebookPreset() {
    return {0.378802757, 0.249474498, 0.255098510, 0.116624233};
}

Initiator Initiator::random(Rng &rng) {
    std::exponential_distribution<double> exp1(1.0);
    std::array<double, 4> w{};
    for (auto &x : w)
        x = exp1(rng);
    const double total = w[0] + w[1] + w[2] + w[3];
    return {w[0] / total, w[1] / total, w[2] / total, 1.0 - (w[0] + w[1] + w[2]) / total};
}

Initiator Initiator::parse(std::string_view text) {
    std::array<double, 4> values{};
    std::size_t filled = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ')
            token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ')
            token.remove_suffix(1);
        if (filled == 4)
            throw std::invalid_argument("initiator needs exactly four values");
        double value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw std::invalid_argument("initiator entry '" + std::string(token) + "' is not a number");
        values[filled++] = value;
        pos = end + 1;
    }
    if (filled != 4)
        throw std::invalid_argument("initiator needs exactly four values");
    Initiator init{values[0], values[1], values[2], values[3]};
    init.validate();
    return init;
}

void Initiator::validate() const {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("initiator entries must be non-negative");
    if (std::abs(a + b + c + d - 1.0) > 1e-6)
        throw std::invalid_argument("initiator entries must sum to 1");
}

ModelParams fit(const Graph &g, ModelKind kind, count x, const FitOptions &options) {
    const count n = g.numberOfNodes();
    const count m = g.numberOfEdges();
    if (n < 2 || m < 1)
        throw std::invalid_argument("fit: need at least 2 nodes and 1 edge");
    if (x == 0)
        throw std::invalid_argument("fit: scale must be positive");

    const auto nd = static_cast<double>(n);
    const auto md = static_cast<double>(m);
    const auto xd = static_cast<double>(x);

    switch (kind) {
    case ModelKind::ER:
        return ErParams{x * n, 2.0 * md / (xd * nd * (nd - 1.0))};
    case ModelKind::BA:
        return BaParams{x * n, std::max<count>(1, m / n)};
    case ModelKind::CL:
    case ModelKind::ESMC: {
        const auto d = degreeSequence(g);
        DegreeSequence scaled;
        scaled.reserve(x * n);
        for (count i = 0; i < x; ++i)
            scaled.insert(scaled.end(), d.begin(), d.end());
        if (kind == ModelKind::CL)
            return ClParams{std::move(scaled)};
        return EsmcParams{std::move(scaled)};
    }
    case ModelKind::RMAT: {
        RmatParams params;
        params.targetNodes = x * n;
        params.scale = 0;
        while ((count{1} << params.scale) < params.targetNodes)
            ++params.scale;
        params.edgeFactor = std::max<count>(1, m / n);
        params.source = options.initiatorSource;
        switch (options.initiatorSource) {
        case InitiatorSource::Preset:
            params.initiator = Initiator::facebookPreset();
            break;
        case InitiatorSource::Random: {
            auto rng = makeRng(options.seed);
            params.initiator = Initiator::random(rng);
            break;
        }
        case InitiatorSource::Explicit:
            if (!options.initiator)
                throw std::invalid_argument("fit: explicit initiator missing");
            options.initiator->validate();
            params.initiator = *options.initiator;
            break;
        }
        return params;
    }
    }
    throw std::invalid_argument("fit: unsupported model kind");
}

namespace {

std::vector<count> positiveDegrees(const Graph &g) {
    std::vector<count> d;
    for (node u = 0; u < g.numberOfNodes(); ++u)
        if (g.degree(u) > 0)
            d.push_back(g.degree(u));
    if (d.empty())
        throw std::invalid_argument("power-law fit: graph has no edges");
    return d;
}

} // namespace

HudgReference fitHudgReference(const Graph &g, count x) {
    HudgReference ref;
    ref.n = x * g.numberOfNodes();
    ref.averageDegree = 2.0 * static_cast<double>(g.numberOfEdges()) / static_cast<double>(g.numberOfNodes());
    const auto d = positiveDegrees(g);
    ref.exponent = std::max(2.1, -plfit(d).gamma);
    return ref;
}

LfrReference fitLfrReference(const Graph &g, count x, std::uint64_t seed) {
    LfrReference ref;
    ref.n = x * g.numberOfNodes();
    const auto d = positiveDegrees(g);
    ref.degrees = plfit(d);
    const Partition p = plm(g, PlmOptions{seed});
    ref.communities = plfitStar(p.sizes());
    ref.mixing = mixingParameter(g, p);
    return ref;
}

bool isGraphical(std::span<const count> degrees) {
    std::vector<count> d(degrees.begin(), degrees.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    const count n = d.size();
    count total = std::accumulate(d.begin(), d.end(), count{0});
    if (total % 2 != 0)
        return false;
    if (n > 0 && d.front() >= n)
        return false;

    // suffix sums for sum_{i > k} min(d_i, k)
    std::vector<count> suffix(n + 1, 0);
    for (count i = n; i-- > 0;)
        suffix[i] = suffix[i + 1] + d[i];
    count prefix = 0;
    for (count k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        // first index >= k whose degree is below k (d is non-increasing)
        auto boundary = std::partition_point(d.begin() + static_cast<std::ptrdiff_t>(k), d.end(),
                                             [k](count v) { return v >= k; });
        const auto firstSmall = static_cast<count>(boundary - d.begin());
        const count rhs = k * (k - 1) + k * (firstSmall - k) + suffix[firstSmall];
        if (prefix > rhs)
            return false;
    }
    return true;
}

Graph havelHakimi(std::span<const count> degrees) {
    if (!isGraphical(degrees))
        throw GraphicalityError("degree sequence is not graphical");
    const count n = degrees.size();
    // (residual degree, node), largest first; ties by smaller id
    auto order = [](const std::pair<count, node> &l, const std::pair<count, node> &r) {
        return l.first != r.first ? l.first > r.first : l.second < r.second;
    };
    std::set<std::pair<count, node>, decltype(order)> open(order);
    for (node u = 0; u < n; ++u)
        if (degrees[u] > 0)
            open.emplace(degrees[u], u);

    std::vector<Edge> edges;
    std::vector<std::pair<count, node>> taken;
    while (!open.empty()) {
        auto [d, u] = *open.begin();
        open.erase(open.begin());
        taken.clear();
        for (auto it = open.begin(); taken.size() < d; it = open.erase(it)) {
            if (it == open.end())
                throw GraphicalityError("degree sequence is not graphical");
            taken.push_back(*it);
        }
        for (auto [dv, v] : taken) {
            edges.emplace_back(u, v);
            if (dv > 1)
                open.emplace(dv - 1, v);
        }
    }
    return Graph::fromEdges(n, edges);
}

bool chungLuValid(std::span<const count> degrees) {
    if (degrees.empty())
        return true;
    const count maxDeg = *std::max_element(degrees.begin(), degrees.end());
    const count total = std::accumulate(degrees.begin(), degrees.end(), count{0});
    return maxDeg * maxDeg <= total;
}

Graph generateErdosRenyi(const ErParams &params, std::uint64_t seed) {
    if (params.p < 0 || params.p > 1)
        throw std::invalid_argument("ER: p must lie in [0, 1]");
    const count n = params.n;
    std::vector<Edge> edges;
    if (params.p == 0 || n < 2)
        return Graph(n);
    if (params.p == 1) {
        for (node u = 0; u < n; ++u)
            for (node v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph::fromEdges(n, edges);
    }
    // geometric skipping over the lower triangle (Batagelj & Brandes)
    auto rng = makeRng(seed);
    const double logq = std::log1p(-params.p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const auto nn = static_cast<std::int64_t>(n);
    while (v < nn) {
        const double r = 1.0 - uniformReal(rng); // (0, 1]
        w += 1 + static_cast<std::int64_t>(std::floor(std::log(r) / logq));
        while (w >= v && v < nn) {
            w -= v;
            ++v;
        }
        if (v < nn)
            edges.emplace_back(static_cast<node>(w), static_cast<node>(v));
    }
    return Graph::fromEdges(n, edges);
}

Graph generateBarabasiAlbert(const BaParams &params, std::uint64_t seed) {
    const count n = params.n;
    const count k = params.k;
    if (k < 1)
        throw std::invalid_argument("BA: k must be at least 1");
    std::vector<Edge> edges;
    std::vector<node> endpoints; // each node once per incident edge
    const count seedSize = std::min(n, k + 1);
    for (node u = 0; u < seedSize; ++u) {
        for (node v = u + 1; v < seedSize; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    auto rng = makeRng(seed);
    std::vector<node> targets;
    for (node u = seedSize; u < n; ++u) {
        targets.clear();
        while (targets.size() < k) {
            const node t = endpoints[uniformBelow(rng, endpoints.size())];
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (node t : targets) {
            edges.emplace_back(u, t);
            endpoints.push_back(u);
            endpoints.push_back(t);
        }
    }
    return Graph::fromEdges(n, edges);
}

Graph generateChungLu(const ClParams &params, std::uint64_t seed) {
    const auto &d = params.degrees;
    const count n = d.size();
    const auto total = static_cast<double>(std::accumulate(d.begin(), d.end(), count{0}));
    if (total == 0)
        return Graph(n);

    std::vector<node> order(n);
    std::iota(order.begin(), order.end(), node{0});
    std::stable_sort(order.begin(), order.end(), [&](node a, node b) { return d[a] > d[b]; });
    std::vector<double> w(n);
    for (count i = 0; i < n; ++i)
        w[i] = static_cast<double>(d[order[i]]);

    // Miller & Hagberg: skip over pairs with non-increasing probability
    auto rng = makeRng(seed);
    std::vector<Edge> edges;
    for (count i = 0; i + 1 < n && w[i] > 0; ++i) {
        count j = i + 1;
        double p = std::min(w[i] * w[j] / total, 1.0);
        while (j < n && p > 0) {
            if (p < 1) {
                const double r = 1.0 - uniformReal(rng);
                j += static_cast<count>(std::floor(std::log(r) / std::log1p(-p)));
            }
            if (j < n) {
                const double q = std::min(w[i] * w[j] / total, 1.0);
                if (uniformReal(rng) < q / p)
                    edges.emplace_back(order[i], order[j]);
                p = q;
                ++j;
            }
        }
    }
    return Graph::fromEdges(n, edges);
}

Graph generateEdgeSwitchingMarkovChain(const EsmcParams &params, std::uint64_t seed) {
    Graph start = havelHakimi(params.degrees);
    return edgeSwitch(start, defaultSwaps(start.numberOfEdges()), seed);
}

Graph generateRmat(const RmatParams &params, std::uint64_t seed) {
    params.initiator.validate();
    if (params.scale >= 63)
        throw std::invalid_argument("RMAT: scale too large");
    const count full = count{1} << params.scale;
    if (params.targetNodes > full)
        throw std::invalid_argument("RMAT: target node count exceeds 2^s");

    const auto &I = params.initiator;
    const double ab = I.a + I.b;
    const double abc = ab + I.c;
    auto rng = makeRng(seed);
    std::vector<Edge> edges;
    const count draws = params.edgeFactor * full;
    edges.reserve(draws);
    for (count t = 0; t < draws; ++t) {
        node u = 0;
        node v = 0;
        for (count level = 0; level < params.scale; ++level) {
            const double r = uniformReal(rng);
            const node row = r >= ab ? 1 : 0;
            const node col = (r >= I.a && r < ab) || r >= abc ? 1 : 0;
            u = 2 * u + row;
            v = 2 * v + col;
        }
        edges.emplace_back(u, v);
    }

    // delete 2^s - n_r uniformly chosen nodes, keep relative order of the rest
    std::vector<node> kept;
    kept.reserve(params.targetNodes);
    std::vector<node> all(full);
    std::iota(all.begin(), all.end(), node{0});
    std::sample(all.begin(), all.end(), std::back_inserter(kept),
                static_cast<std::ptrdiff_t>(params.targetNodes), rng);
    std::vector<node> relabel(full, none);
    for (count i = 0; i < kept.size(); ++i)
        relabel[kept[i]] = i;

    std::vector<Edge> survivors;
    survivors.reserve(edges.size());
    for (auto [u, v] : edges)
        if (relabel[u] != none && relabel[v] != none)
            survivors.emplace_back(relabel[u], relabel[v]);
    return Graph::fromEdges(params.targetNodes, survivors);
}

Graph generateModel(const ModelParams &params, std::uint64_t seed) {
    return std::visit(
        [&](const auto &p) -> Graph {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ErParams>)
                return generateErdosRenyi(p, seed);
            else if constexpr (std::is_same_v<T, BaParams>)
                return generateBarabasiAlbert(p, seed);
            else if constexpr (std::is_same_v<T, ClParams>)
                return generateChungLu(p, seed);
            else if constexpr (std::is_same_v<T, EsmcParams>)
                return generateEdgeSwitchingMarkovChain(p, seed);
            else if constexpr (std::is_same_v<T, RmatParams>)
                return generateRmat(p, seed);
            else
                throw std::invalid_argument("generateModel: parameters describe a fit, not a generator");
        },
        params);
}

} // namespace recon
