#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcolor/error.hpp"

namespace mcolor {

/// Node identifiers live in [N] = {1, ..., N}.
using NodeId = std::uint64_t;
using Edge = std::pair<NodeId, NodeId>;

/// The input of a one-shot node: its own ID and the IDs of its neighbors.
/// `neighbors` is kept sorted and duplicate-free.
struct OneHopView {
    NodeId id = 0;
    std::vector<NodeId> neighbors;

    OneHopView() = default;
    OneHopView(NodeId x, std::vector<NodeId> gamma) : id(x), neighbors(std::move(gamma)) {
        std::sort(neighbors.begin(), neighbors.end());
        require(std::adjacent_find(neighbors.begin(), neighbors.end()) == neighbors.end(),
                ErrorKind::InvalidParams, "duplicate neighbor ID in view");
        require(!std::binary_search(neighbors.begin(), neighbors.end(), id), ErrorKind::InvalidParams,
                "view contains its own ID");
    }

    std::size_t degree() const { return neighbors.size(); }

    friend bool operator==(const OneHopView&, const OneHopView&) = default;
};

/// Immutable simple undirected graph whose nodes carry unique IDs in [N].
/// Internally nodes are indexed 0..n-1 in construction order.
class Graph {
public:
    Graph() = default;

    Graph(std::uint64_t id_space, std::vector<NodeId> ids, const std::vector<Edge>& edges)
        : id_space_(id_space), ids_(std::move(ids)), adjacency_(ids_.size()) {
        require(id_space_ >= ids_.size(), ErrorKind::InvalidParams, "id space smaller than node count");
        index_.reserve(ids_.size());
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            const NodeId x = ids_[i];
            require(x >= 1 && x <= id_space_, ErrorKind::InvalidParams,
                    "node ID " + std::to_string(x) + " outside [1, " + std::to_string(id_space_) + "]");
            require(index_.emplace(x, static_cast<std::uint32_t>(i)).second, ErrorKind::InvalidParams,
                    "duplicate node ID " + std::to_string(x));
        }
        for (const auto& [a, b] : edges) {
            require(a != b, ErrorKind::InvalidParams, "self-loop on " + std::to_string(a));
            const auto ia = index_.find(a);
            const auto ib = index_.find(b);
            require(ia != index_.end() && ib != index_.end(), ErrorKind::InvalidParams,
                    "edge references unknown node");
            adjacency_[ia->second].push_back(ib->second);
            adjacency_[ib->second].push_back(ia->second);
        }
        for (auto& list : adjacency_) {
            std::sort(list.begin(), list.end());
            require(std::adjacent_find(list.begin(), list.end()) == list.end(), ErrorKind::InvalidParams,
                    "duplicate edge");
            max_degree_ = std::max(max_degree_, list.size());
            edge_count_ += list.size();
        }
        edge_count_ /= 2;
    }

    std::size_t size() const { return ids_.size(); }
    std::uint64_t id_space() const { return id_space_; }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t max_degree() const { return max_degree_; }

    std::span<const NodeId> ids() const { return ids_; }
    NodeId id(std::size_t index) const { return ids_[index]; }
    std::span<const std::uint32_t> neighbors(std::size_t index) const { return adjacency_[index]; }
    std::size_t degree(std::size_t index) const { return adjacency_[index].size(); }

    bool contains(NodeId x) const { return index_.count(x) != 0; }

    std::size_t index_of(NodeId x) const {
        const auto it = index_.find(x);
        if (it == index_.end()) fail(ErrorKind::NotFound, "no node with ID " + std::to_string(x));
        return it->second;
    }

    /// Canonical edge list: each edge as (smaller ID, larger ID), sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (std::size_t i = 0; i < ids_.size(); ++i) {
            for (const auto j : adjacency_[i]) {
                if (ids_[i] < ids_[j]) out.emplace_back(ids_[i], ids_[j]);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<NodeId> sorted_ids() const {
        std::vector<NodeId> out(ids_.begin(), ids_.end());
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Equality as labeled graphs: same ID space, node IDs and edges,
    /// independent of internal node order.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.id_space_ == b.id_space_ && a.sorted_ids() == b.sorted_ids() && a.edges() == b.edges();
    }

private:
    std::uint64_t id_space_ = 0;
    std::vector<NodeId> ids_;
    std::vector<std::vector<std::uint32_t>> adjacency_;
    std::unordered_map<NodeId, std::uint32_t> index_;
    std::size_t max_degree_ = 0;
    std::size_t edge_count_ = 0;
};

inline OneHopView view_at(const Graph& g, std::size_t index) {
    std::vector<NodeId> gamma;
    gamma.reserve(g.degree(index));
    for (const auto j : g.neighbors(index)) gamma.push_back(g.id(j));
    return OneHopView(g.id(index), std::move(gamma));
}

inline OneHopView view_of(const Graph& g, NodeId v) { return view_at(g, g.index_of(v)); }

/// Drops edges, in canonical edge order, whose insertion would push an
/// endpoint above `max_degree`.
inline Graph cap_degree(const Graph& g, std::size_t max_degree) {
    std::unordered_map<NodeId, std::size_t> deg;
    std::vector<Edge> kept;
    for (const auto& [a, b] : g.edges()) {
        if (deg[a] < max_degree && deg[b] < max_degree) {
            ++deg[a];
            ++deg[b];
            kept.emplace_back(a, b);
        }
    }
    return Graph(g.id_space(), std::vector<NodeId>(g.ids().begin(), g.ids().end()), kept);
}

/// Number of connected components (used by tests and stats output).
inline std::size_t component_count(const Graph& g) {
    std::vector<char> seen(g.size(), 0);
    std::vector<std::uint32_t> stack;
    std::size_t components = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (seen[s]) continue;
        ++components;
        seen[s] = 1;
        stack.push_back(static_cast<std::uint32_t>(s));
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (const auto w : g.neighbors(u)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

}  // namespace mcolor
