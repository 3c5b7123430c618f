#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcolor/multicoloring.hpp"
#include "mcolor/verifier.hpp"

namespace mcolor {

/// A TDMA frame of `frame_length` slots; node v transmits in slots[v].
/// Color i is slot i.
struct TdmaSchedule {
    std::uint64_t frame_length = 0;
    std::map<NodeId, std::vector<std::uint64_t>> slots;
    std::string algorithm;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    nlohmann::json params = nlohmann::json::object();

    friend bool operator==(const TdmaSchedule&, const TdmaSchedule&) = default;
};

/// Refuses colorings whose verification report is not valid.
inline TdmaSchedule to_schedule(const Multicoloring& m, const VerificationReport& report) {
    require(report.valid, ErrorKind::RefusedInvalid, "coloring failed verification; refusing to build a schedule");
    require(report.palette_size == m.palette_size, ErrorKind::RefusedInvalid,
            "verification report belongs to a different coloring");
    TdmaSchedule s;
    s.frame_length = m.palette_size;
    for (const auto& [id, colors] : m.assignment) s.slots.emplace(id, std::vector<std::uint64_t>(colors.begin(), colors.end()));
    s.algorithm = m.params.algorithm;
    s.epsilon = m.params.epsilon;
    s.seed = m.params.seed;
    s.params = m.params.extra;
    return s;
}

inline TdmaSchedule to_schedule(const Graph& g, const Multicoloring& m) {
    return to_schedule(m, verify(g, m, m.params.epsilon));
}

/// The coloring a schedule encodes, for re-verification.
inline Multicoloring schedule_coloring(const TdmaSchedule& s) {
    Multicoloring m;
    m.palette_size = s.frame_length;
    for (const auto& [id, slots] : s.slots) m.assignment.emplace(id, ColorSet(slots.begin(), slots.end()));
    m.params.algorithm = s.algorithm;
    m.params.epsilon = s.epsilon;
    m.params.seed = s.seed;
    m.params.extra = s.params;
    return m;
}

struct NodeUtilization {
    NodeId id = 0;
    std::size_t degree = 0;
    double duty_cycle = 0.0;     // |slots| / k
    std::uint64_t speedup = 0;   // |slots| relative to one slot per frame
};

struct UtilizationMetrics {
    std::vector<NodeUtilization> nodes;
    double mean_duty_cycle = 0.0;
    double min_duty_cycle = 0.0;
    /// Duty cycle of classic single-slot TDMA with the same frame.
    double baseline_duty_cycle = 0.0;
    double mean_speedup = 0.0;
};

inline UtilizationMetrics utilization(const TdmaSchedule& s, const Graph& g) {
    UtilizationMetrics u;
    const double k = static_cast<double>(s.frame_length);
    u.baseline_duty_cycle = s.frame_length == 0 ? 0.0 : 1.0 / k;
    u.min_duty_cycle = 1.0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto it = s.slots.find(g.id(v));
        const std::size_t count = it == s.slots.end() ? 0 : it->second.size();
        NodeUtilization n{g.id(v), g.degree(v), s.frame_length == 0 ? 0.0 : static_cast<double>(count) / k, count};
        u.mean_duty_cycle += n.duty_cycle;
        u.mean_speedup += static_cast<double>(count);
        u.min_duty_cycle = std::min(u.min_duty_cycle, n.duty_cycle);
        u.nodes.push_back(n);
    }
    if (!u.nodes.empty()) {
        u.mean_duty_cycle /= static_cast<double>(u.nodes.size());
        u.mean_speedup /= static_cast<double>(u.nodes.size());
    } else {
        u.min_duty_cycle = 0.0;
    }
    return u;
}

// {"frame_length": k, "nodes": [{"id": .., "slots": [..]}],
//  "meta": {"algorithm": .., "epsilon": .., "seed": .., "params": {..}}}

inline nlohmann::json schedule_to_json(const TdmaSchedule& s) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& [id, slots] : s.slots) nodes.push_back({{"id", id}, {"slots", slots}});
    return {{"frame_length", s.frame_length},
            {"nodes", nodes},
            {"meta", {{"algorithm", s.algorithm}, {"epsilon", s.epsilon}, {"seed", s.seed}, {"params", s.params}}}};
}

inline TdmaSchedule schedule_from_json(const nlohmann::json& j) {
    TdmaSchedule s;
    try {
        s.frame_length = j.at("frame_length").get<std::uint64_t>();
        for (const auto& node : j.at("nodes")) {
            auto slots = node.at("slots").get<std::vector<std::uint64_t>>();
            for (std::size_t i = 0; i < slots.size(); ++i) {
                require(slots[i] >= 1 && slots[i] <= s.frame_length && (i == 0 || slots[i] > slots[i - 1]),
                        ErrorKind::ParseError, "slot list must be strictly increasing within [1, frame_length]");
            }
            require(s.slots.emplace(node.at("id").get<NodeId>(), std::move(slots)).second, ErrorKind::ParseError,
                    "duplicate node in schedule");
        }
        const auto& meta = j.at("meta");
        s.algorithm = meta.at("algorithm").get<std::string>();
        s.epsilon = meta.at("epsilon").get<double>();
        s.seed = meta.at("seed").get<std::uint64_t>();
        s.params = meta.at("params");
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("schedule JSON: ") + e.what());
    }
    return s;
}

/// One row per (node, slot).
inline std::string schedule_to_csv(const TdmaSchedule& s) {
    std::ostringstream out;
    out << "node,slot\n";
    for (const auto& [id, slots] : s.slots) {
        for (const auto slot : slots) out << id << ',' << slot << '\n';
    }
    return out.str();
}

}  // namespace mcolor
