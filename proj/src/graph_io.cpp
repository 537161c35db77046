#include "ebcast/graph_io.hpp"

#include "ebcast/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace ebcast {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, long long& a, long long& b) {
    auto read = [&line](long long& out) {
        line = trim(line);
        if (line.empty()) return false;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
        if (ec != std::errc{}) return false;
        const auto used = static_cast<std::size_t>(ptr - line.data());
        if (used < line.size() && line[used] != ' ' && line[used] != '\t') return false;
        line.remove_prefix(used);
        return true;
    };
    return read(a) && read(b) && trim(line).empty();
}

}  // namespace

Graph parse_graph(std::string_view text) {
    using Kind = ParseError::Kind;
    const auto lines = split_lines(text);

    std::size_t header_line = 0;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t edge_lines = 0;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = trim(lines[i]);
        const std::size_t number = i + 1;
        if (line.empty() || line.front() == '#') continue;

        long long a = 0;
        long long b = 0;
        if (!parse_pair(line, a, b)) {
            throw ParseError(Kind::malformed, number,
                             "expected two non-negative integers, got '" + std::string(line) + "'");
        }
        if (header_line == 0) {
            header_line = number;
            n = a;
            m = b;
            if (n < 2) throw ParseError(Kind::too_small, number, "graph needs at least 2 vertices");
            if (m < 0) throw ParseError(Kind::malformed, number, "negative edge count");
            continue;
        }
        ++edge_lines;
        if (static_cast<long long>(edge_lines) > m) {
            throw ParseError(Kind::edge_count, number,
                             "more edge lines than the declared " + std::to_string(m));
        }
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw ParseError(Kind::out_of_range, number,
                             "vertex id out of range 0.." + std::to_string(n - 1));
        }
        if (a == b) {
            throw ParseError(Kind::self_loop, number, "self-loop at vertex " + std::to_string(a));
        }
        Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
        if (!seen.insert(e).second) {
            throw ParseError(Kind::duplicate_edge, number,
                             "duplicate edge " + std::to_string(e.first) + " " +
                                 std::to_string(e.second));
        }
        edges.push_back(e);
    }
    if (header_line == 0) throw ParseError(Kind::malformed, 0, "missing 'n m' header line");
    if (static_cast<long long>(edge_lines) != m) {
        throw ParseError(Kind::edge_count, header_line,
                         "declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edge_lines));
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const ConnectivityError& e) {
        throw ParseError(Kind::disconnected, header_line, e.what());
    }
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_labels(const Graph& g) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    if (g.has_labels()) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) doc[std::to_string(v)] = g.label(v);
    }
    return doc.dump(2) + "\n";
}

Graph attach_labels(const Graph& g, std::string_view labels_json) {
    const auto doc = nlohmann::json::parse(labels_json);
    if (!doc.is_object()) throw InvalidInput("label sidecar must be a JSON object");
    std::vector<std::string> labels(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) labels[v] = std::to_string(v);
    for (const auto& [key, value] : doc.items()) {
        int id = -1;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
        if (ec != std::errc{} || ptr != key.data() + key.size() || id < 0 ||
            id >= g.vertex_count()) {
            throw InvalidInput("label key '" + key + "' is not a vertex id");
        }
        labels[id] = value.get<std::string>();
    }
    const auto edges = g.edges();
    return Graph(g.vertex_count(), edges, std::move(labels),
                 g.connected() ? Connectivity::require : Connectivity::allow_disconnected);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidParameter("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParameter("cannot open '" + path + "' for writing");
    out << contents;
}

}  // namespace ebcast
