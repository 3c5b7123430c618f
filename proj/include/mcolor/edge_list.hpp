#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mcolor/graph.hpp"

namespace mcolor {

// Edge-list text format:
//   # N=<int>        optional header; without it N = max ID
//   <id> <id>        one edge per line, whitespace separated
//   <id>             a node without edges
//   # ...            comment
// Blank lines are ignored.

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline bool parse_u64(std::string_view token, std::uint64_t& out) {
    if (token.empty()) return false;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

}  // namespace detail

inline Graph load_edge_list(std::string_view text) {
    std::uint64_t header_n = 0;
    bool has_header = false;
    std::vector<NodeId> ids;
    std::set<NodeId> seen_ids;
    std::vector<Edge> edges;
    std::set<Edge> seen_edges;
    std::vector<std::size_t> edge_lines;
    std::vector<std::size_t> id_lines;

    auto note_id = [&](NodeId x, std::size_t line) {
        if (x == 0) throw ParseError(line, "IDs are 1-based, got 0");
        if (seen_ids.insert(x).second) {
            ids.push_back(x);
            id_lines.push_back(line);
        }
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = text.find('\n', pos);
        const auto raw = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;
        const auto line = detail::trim(raw);
        if (line.empty()) continue;
        if (line.front() == '#') {
            auto body = detail::trim(line.substr(1));
            if (body.rfind("N=", 0) == 0) {
                if (has_header) throw ParseError(line_no, "duplicate N header");
                if (!detail::parse_u64(detail::trim(body.substr(2)), header_n) || header_n == 0) {
                    throw ParseError(line_no, "malformed N header");
                }
                has_header = true;
            }
            continue;
        }
        const auto tokens = detail::split_ws(line);
        std::uint64_t a = 0, b = 0;
        if (tokens.size() == 1) {
            if (!detail::parse_u64(tokens[0], a)) throw ParseError(line_no, "malformed node line");
            note_id(a, line_no);
            continue;
        }
        if (tokens.size() != 2 || !detail::parse_u64(tokens[0], a) || !detail::parse_u64(tokens[1], b)) {
            throw ParseError(line_no, "malformed edge line");
        }
        if (a == b) throw ParseError(line_no, "self-loop on " + std::to_string(a));
        note_id(a, line_no);
        note_id(b, line_no);
        const Edge canon{std::min(a, b), std::max(a, b)};
        if (!seen_edges.insert(canon).second) {
            throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        }
        edges.push_back(canon);
        edge_lines.push_back(line_no);
    }

    const std::uint64_t max_id = seen_ids.empty() ? 0 : *seen_ids.rbegin();
    const std::uint64_t id_space = has_header ? header_n : std::max<std::uint64_t>(max_id, 1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] > id_space) {
            throw ParseError(id_lines[i], "ID " + std::to_string(ids[i]) + " outside [1, " +
                                              std::to_string(id_space) + "]");
        }
    }
    return Graph(id_space, std::move(ids), edges);
}

/// Canonical text: header, sorted edges, then sorted isolated nodes.
inline std::string save_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "# N=" << g.id_space() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
    for (const auto x : g.sorted_ids()) {
        if (g.degree(g.index_of(x)) == 0) out << x << '\n';
    }
    return out.str();
}

}  // namespace mcolor
