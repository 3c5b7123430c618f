#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "mcolor/graph.hpp"
#include "mcolor/rng.hpp"

namespace mcolor {

// All generators are pure functions of their arguments. Node i (construction
// order) receives the i-th entry of a seeded Fisher-Yates injection into [N].

/// Erdos-Renyi G(n, p).
inline Graph gen_gnp(std::size_t n, double p, std::uint64_t id_space, std::uint64_t seed) {
    require(p >= 0.0 && p <= 1.0, ErrorKind::InvalidParams, "p must lie in [0, 1]");
    require(id_space >= n, ErrorKind::InvalidParams, "N must be at least n");
    Stream id_rng(seed, StreamTag::GraphIds);
    auto ids = random_injection(n, id_space, id_rng);
    Stream edge_rng(seed, StreamTag::GraphEdges);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (edge_rng.unit() < p) edges.emplace_back(ids[i], ids[j]);
        }
    }
    return Graph(id_space, std::move(ids), edges);
}

/// Disjoint union of `count` stars K_{1,delta}.
inline Graph gen_stars(std::size_t count, std::size_t delta, std::uint64_t id_space, std::uint64_t seed) {
    const std::uint64_t n = static_cast<std::uint64_t>(count) * (delta + 1);
    require(n <= id_space, ErrorKind::InvalidParams, "count*(Delta+1) exceeds the ID space");
    Stream id_rng(seed, StreamTag::GraphIds);
    auto ids = random_injection(n, id_space, id_rng);
    std::vector<Edge> edges;
    edges.reserve(count * delta);
    for (std::size_t s = 0; s < count; ++s) {
        const std::size_t center = s * (delta + 1);
        for (std::size_t leaf = 1; leaf <= delta; ++leaf) edges.emplace_back(ids[center], ids[center + leaf]);
    }
    return Graph(id_space, std::move(ids), edges);
}

/// Unit disk graph: n uniform points in the unit square, edge iff distance <= radius.
inline Graph gen_udg(std::size_t n, double radius, std::uint64_t id_space, std::uint64_t seed) {
    require(radius >= 0.0, ErrorKind::InvalidParams, "radius must be non-negative");
    require(id_space >= n, ErrorKind::InvalidParams, "N must be at least n");
    Stream id_rng(seed, StreamTag::GraphIds);
    auto ids = random_injection(n, id_space, id_rng);
    Stream point_rng(seed, StreamTag::GraphPoints);
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = point_rng.unit();
        ys[i] = point_rng.unit();
    }
    const double r2 = radius * radius;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dx = xs[i] - xs[j];
            const double dy = ys[i] - ys[j];
            if (dx * dx + dy * dy <= r2) edges.emplace_back(ids[i], ids[j]);
        }
    }
    return Graph(id_space, std::move(ids), edges);
}

}  // namespace mcolor
