#include "nsg/edgelist.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "nsg/errors.hpp"

namespace nsg {

namespace {

struct RawEdge {
    std::int64_t u;
    std::int64_t v;
    int line;
};

std::int64_t parse_label(std::string_view token, int line) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0)
        throw ParseError("expected a non-negative integer vertex id, got \"" +
                             std::string(token) + "\"",
                         line);
    return value;
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
    std::vector<RawEdge> raw;
    std::vector<std::int64_t> appearance;
    std::map<std::int64_t, int> ids;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        pos = eol + 1;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (tokens.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError("expected two vertex ids, got " + std::to_string(tokens.size()),
                             line_no);
        const std::int64_t u = parse_label(tokens[0], line_no);
        const std::int64_t v = parse_label(tokens[1], line_no);
        if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u), line_no);
        for (std::int64_t label : {u, v}) {
            if (ids.emplace(label, static_cast<int>(appearance.size()) + 1).second)
                appearance.push_back(label);
        }
        raw.push_back({u, v, line_no});
        if (pos > text.size()) break;
    }

    if (raw.empty()) throw EmptyInputError("edge list holds no edges");

    ParsedGraph parsed{SimpleGraph(static_cast<int>(appearance.size())), {}, {}};
    for (std::size_t k = 0; k < appearance.size(); ++k)
        parsed.vertex_map.emplace_back(appearance[k], static_cast<int>(k) + 1);
    for (const RawEdge& e : raw) {
        if (!parsed.graph.add_edge(ids.at(e.u), ids.at(e.v)))
            parsed.warnings.push_back("line " + std::to_string(e.line) + ": duplicate edge " +
                                      std::to_string(e.u) + " " + std::to_string(e.v) +
                                      " ignored");
    }
    return parsed;
}

ParsedGraph read_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_edge_list(buffer.str());
}

std::string write_edge_list(const SimpleGraph& g) {
    std::string out;
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u);
        out.push_back(' ');
        out += std::to_string(e.v);
        out.push_back('\n');
    }
    return out;
}

std::uint64_t graph_digest(const SimpleGraph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::sort(edges.begin(), edges.end());
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    auto mix = [&hash](std::int64_t value) {
        for (int byte = 0; byte < 8; ++byte) {
            hash ^= static_cast<std::uint64_t>(value >> (8 * byte)) & 0xffULL;
            hash *= 0x100000001b3ULL;
        }
    };
    mix(g.vertex_count());
    for (const Edge& e : edges) {
        mix(e.u);
        mix(e.v);
    }
    return hash;
}

}  // namespace nsg
