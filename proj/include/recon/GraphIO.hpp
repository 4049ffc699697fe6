#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include <recon/Graph.hpp>

namespace recon {

struct EdgeListResult {
    Graph graph;
    count selfLoopsDropped = 0;
    count duplicatesDropped = 0;
};

/**
 * Parses the whitespace-separated edge-list format: one "u v" pair per line,
 * 0-based ids, blank lines and lines starting with '#' or '%' ignored.
 * The node count is max id + 1, or the N of a "# nodes N" header when larger.
 * Throws ParseError on malformed tokens.
 */
EdgeListResult readEdgeList(std::string_view text);
EdgeListResult readEdgeListFile(const std::filesystem::path &path);

void writeEdgeList(std::ostream &out, const Graph &g);
void writeEdgeListFile(const std::filesystem::path &path, const Graph &g);

/// Partition files hold one community id per line; line v is node v.
std::vector<index> readPartition(std::string_view text);
std::vector<index> readPartitionFile(const std::filesystem::path &path);
void writePartition(std::ostream &out, const std::vector<index> &assignment);

std::string readTextFile(const std::filesystem::path &path);

} // namespace recon
