#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <recon/Errors.hpp>
#include <recon/GraphIO.hpp>

namespace recon {

namespace {

bool isSpace(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

// Splits `line` into whitespace-separated unsigned integers.
std::vector<std::uint64_t> parseIds(std::string_view line, std::size_t lineNo) {
    std::vector<std::uint64_t> ids;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && isSpace(line[pos]))
            ++pos;
        if (pos == line.size())
            break;
        std::size_t end = pos;
        while (end < line.size() && !isSpace(line[end]))
            ++end;
        std::string_view token = line.substr(pos, end - pos);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParseError(lineNo, "expected a non-negative integer, got '" + std::string(token) + "'");
        ids.push_back(value);
        pos = end;
    }
    return ids;
}

template <typename F, typename C>
void forEachLine(std::string_view text, F &&onData, C &&onComment) {
    std::size_t lineNo = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++lineNo;
        std::string_view line = text.substr(start, end - start);
        std::size_t first = 0;
        while (first < line.size() && isSpace(line[first]))
            ++first;
        if (first < line.size()) {
            if (line[first] == '#' || line[first] == '%')
                onComment(line.substr(first + 1));
            else
                onData(line, lineNo);
        }
        start = end + 1;
    }
}

template <typename F>
void forEachDataLine(std::string_view text, F &&onData) {
    forEachLine(text, std::forward<F>(onData), [](std::string_view) {});
}

// "# nodes N ..." header written by writeEdgeListFile
std::optional<count> nodeCountHint(std::string_view comment) {
    std::istringstream in{std::string(comment)};
    std::string key;
    count n = 0;
    if (in >> key >> n && key == "nodes")
        return n;
    return std::nullopt;
}

} // namespace

EdgeListResult readEdgeList(std::string_view text) {
    std::vector<Edge> edges;
    count n = 0;
    forEachLine(
        text,
        [&](std::string_view line, std::size_t lineNo) {
            auto ids = parseIds(line, lineNo);
            if (ids.size() != 2)
                throw ParseError(lineNo, "expected two node ids, got " + std::to_string(ids.size()));
            n = std::max<count>(n, std::max(ids[0], ids[1]) + 1);
            edges.emplace_back(ids[0], ids[1]);
        },
        [&](std::string_view comment) {
            if (auto hint = nodeCountHint(comment))
                n = std::max(n, *hint);
        });

    Graph::BuildStats stats;
    EdgeListResult result;
    result.graph = Graph::fromEdges(n, edges, &stats);
    result.selfLoopsDropped = stats.selfLoops;
    result.duplicatesDropped = stats.duplicates;
    return result;
}

std::string readTextFile(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

EdgeListResult readEdgeListFile(const std::filesystem::path &path) {
    return readEdgeList(readTextFile(path));
}

void writeEdgeList(std::ostream &out, const Graph &g) {
    g.forEdges([&](node u, node v) { out << u << ' ' << v << '\n'; });
}

void writeEdgeListFile(const std::filesystem::path &path, const Graph &g) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    // an isolated highest id would otherwise be lost on reload
    out << "# nodes " << g.numberOfNodes() << " edges " << g.numberOfEdges() << '\n';
    writeEdgeList(out, g);
}

std::vector<index> readPartition(std::string_view text) {
    std::vector<index> assignment;
    forEachDataLine(text, [&](std::string_view line, std::size_t lineNo) {
        auto ids = parseIds(line, lineNo);
        if (ids.size() != 1)
            throw ParseError(lineNo, "expected one community id");
        assignment.push_back(ids[0]);
    });
    return assignment;
}

std::vector<index> readPartitionFile(const std::filesystem::path &path) {
    return readPartition(readTextFile(path));
}

void writePartition(std::ostream &out, const std::vector<index> &assignment) {
    for (index c : assignment)
        out << c << '\n';
}

} // namespace recon
