#include <doctest.h>

#include <algorithm>

#include <recon/GraphTools.hpp>
#include <recon/ReCoN.hpp>
#include <recon/Statistics.hpp>

#include "TestGraphs.hpp"

using namespace recon;
using namespace recon::testing;

namespace {

DegreeSequence sortedDegrees(const Graph &g) {
    auto d = degreeSequence(g);
    std::sort(d.begin(), d.end());
    return d;
}

DegreeSequence repeatedSorted(const Graph &g, count x) {
    DegreeSequence d;
    for (count i = 0; i < x; ++i) {
        auto part = degreeSequence(g);
        d.insert(d.end(), part.begin(), part.end());
    }
    std::sort(d.begin(), d.end());
    return d;
}

count internalEdges(const Graph &g, const std::vector<index> &community) {
    count intra = 0;
    g.forEdges([&](node u, node v) { intra += community[u] == community[v] ? 1 : 0; });
    return intra;
}

} // namespace

TEST_CASE("fit against a given partition") {
    auto g = twoTrianglesBridge();
    auto model = fitRecon(g, Partition(g, {0, 0, 0, 1, 1, 1}), 1);
    CHECK(model.internalDegree == std::vector<count>{2, 2, 2, 2, 2, 2});
    CHECK(model.externalDegree == std::vector<count>{0, 0, 1, 1, 0, 0});
    CHECK(model.communitySizes == std::vector<count>{3, 3});
    CHECK(model.intraEdgesPerCommunity() == std::vector<count>{3, 3});

    auto one = fitRecon(g, Partition::oneCommunity(g), 1);
    CHECK(std::all_of(one.externalDegree.begin(), one.externalDegree.end(), [](count d) { return d == 0; }));

    auto empty = fitRecon(Graph(4), std::nullopt, 1);
    CHECK(empty.n == 4);
    CHECK(std::all_of(empty.internalDegree.begin(), empty.internalDegree.end(), [](count d) { return d == 0; }));
}

TEST_CASE("fitted model invariants") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = randomGraph(30, 0.15, seed);
        auto model = fitRecon(g, std::nullopt, seed);
        std::vector<count> internalSum(model.numberOfCommunities(), 0);
        count externalSum = 0;
        for (node u = 0; u < g.numberOfNodes(); ++u) {
            CHECK(model.internalDegree[u] + model.externalDegree[u] == g.degree(u));
            internalSum[model.community[u]] += model.internalDegree[u];
            externalSum += model.externalDegree[u];
        }
        for (count s : internalSum)
            CHECK(s % 2 == 0);
        CHECK(externalSum % 2 == 0);
    }
}

TEST_CASE("a mismatched partition is rejected") {
    auto g = twoTrianglesBridge();
    auto other = triangle();
    CHECK_THROWS_AS(fitRecon(g, Partition::oneCommunity(other), 1), std::invalid_argument);
}

TEST_CASE("scale-1 generation reproduces degrees and community edge counts") {
    auto g = surrogate62();
    auto model = fitRecon(g, std::nullopt, 3);
    auto replica = generate(model, 1, 11);
    CHECK(replica.graph.numberOfNodes() == 62);
    CHECK(replica.graph.numberOfEdges() == 159);
    CHECK(degreeSequence(replica.graph) == degreeSequence(g));
    CHECK(isSimpleUndirected(replica.graph));
    CHECK(internalEdges(replica.graph, replica.community) - replica.residualForbidden
          == Partition(g, model.community).totalIntraEdges());
}

TEST_CASE("edgeless model") {
    auto model = fitRecon(Graph(3), std::nullopt, 1);
    auto r = generate(model, 5, 1);
    CHECK(r.graph.numberOfNodes() == 15);
    CHECK(r.graph.numberOfEdges() == 0);
}

TEST_CASE("K3 at scale 2") {
    auto r = replicate(triangle(), 2, 5);
    CHECK(r.replica.graph.numberOfNodes() == 6);
    CHECK(r.replica.graph.numberOfEdges() == 6);
    for (node u = 0; u < 6; ++u)
        CHECK(r.replica.graph.degree(u) == 2);
}

TEST_CASE("replica invariants over graphs, scales and seeds") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = randomGraph(24, 0.18, 40 + seed);
        auto model = fitRecon(g, std::nullopt, seed);
        const count originalIntra = Partition(g, model.community).totalIntraEdges();
        for (count x : {1, 2, 3, 5}) {
            auto r = generate(model, x, seed * 7 + x);
            CHECK(r.graph.numberOfNodes() == x * g.numberOfNodes());
            CHECK(r.graph.numberOfEdges() == x * g.numberOfEdges());
            CHECK(sortedDegrees(r.graph) == repeatedSorted(g, x));
            CHECK(isSimpleUndirected(r.graph));
            // copy (i, v) keeps v's degree
            for (count i = 0; i < x; ++i)
                for (node v = 0; v < g.numberOfNodes(); ++v)
                    CHECK(r.graph.degree(i * g.numberOfNodes() + v) == g.degree(v));
            CHECK(internalEdges(r.graph, r.community) - r.residualForbidden == x * originalIntra);
        }
    }
}

TEST_CASE("copies get interconnected at larger scales") {
    // every triangle of the two-triangle graph has a single outside stub, so
    // its replicas always pair triangles into exactly x components (likewise
    // any graph whose community-level structure is a path)
    {
        auto g = twoTrianglesBridge();
        Partition p(g, {0, 0, 0, 1, 1, 1});
        for (std::uint64_t seed = 0; seed < 20; ++seed)
            CHECK(connectedComponents(replicate(g, 4, seed, p).replica.graph).number == 4);
    }
    // in a ring of triangles every triangle has two stubs, so copies can join
    // into longer rings
    auto chain = ringOfCliques(3, 3);
    Partition p(chain, {0, 0, 0, 1, 1, 1, 2, 2, 2});
    bool merged = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto r = replicate(chain, 4, seed, p);
        merged = merged || connectedComponents(r.replica.graph).number < 4;
    }
    CHECK(merged);
}

TEST_CASE("generation is deterministic and independent of the thread count") {
    auto g = surrogate62();
    auto model = fitRecon(g, std::nullopt, 1);
    auto a = generate(model, 4, 99);
    auto b = generate(model, 4, 99);
    auto c = generate(model, 4, 99, GenerateOptions{4});
    CHECK(a.graph == b.graph);
    CHECK(a.graph == c.graph);
    CHECK(a.residualForbidden == c.residualForbidden);
    CHECK_FALSE(generate(model, 4, 100).graph == a.graph);
}

TEST_CASE("zero scale is rejected") {
    auto model = fitRecon(triangle(), std::nullopt, 1);
    CHECK_THROWS_AS(generate(model, 0, 1), std::invalid_argument);
}
