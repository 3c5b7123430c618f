#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcolor/graph.hpp"

namespace mcolor {

/// Colors are 1-based indices into the palette [k].
using Color = std::uint64_t;
/// Sorted, duplicate-free.
using ColorSet = std::vector<Color>;

inline constexpr const char* kVersion = "1.0.0";

/// Everything needed to reproduce a run.
struct RunParams {
    std::string algorithm;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::size_t max_degree = 0;
    std::uint64_t id_space = 0;
    std::size_t node_count = 0;
    /// Algorithm-specific knobs (ell, slack, tie-break, family seed, ...).
    nlohmann::json extra = nlohmann::json::object();

    friend bool operator==(const RunParams&, const RunParams&) = default;
};

struct Multicoloring {
    std::uint64_t palette_size = 0;
    std::map<NodeId, ColorSet> assignment;
    RunParams params;

    const ColorSet& colors_of(NodeId v) const {
        const auto it = assignment.find(v);
        if (it == assignment.end()) fail(ErrorKind::NotFound, "no color set for node " + std::to_string(v));
        return it->second;
    }

    friend bool operator==(const Multicoloring&, const Multicoloring&) = default;
};

/// Full palette [k].
inline ColorSet all_colors(std::uint64_t k) {
    ColorSet out(k);
    for (std::uint64_t i = 0; i < k; ++i) out[i] = i + 1;
    return out;
}

/// Size of the intersection of two sorted color sets.
inline std::size_t intersection_size(const ColorSet& a, const ColorSet& b) {
    std::size_t count = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) {
            ++i;
        } else if (*j < *i) {
            ++j;
        } else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace mcolor
