#pragma once

#include <vector>

#include <recon/Graph.hpp>

namespace recon {

using DegreeSequence = std::vector<count>;

DegreeSequence degreeSequence(const Graph &g);

/// x disjoint copies of g; copy i of node v gets id i*n + v.
Graph disjointUnion(const Graph &g, count copies);

/// Full scan: sorted, symmetric, loop- and duplicate-free adjacency.
bool isSimpleUndirected(const Graph &g);

} // namespace recon
