#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "mcolor/multicoloring.hpp"
#include "mcolor/neighborhood.hpp"
#include "mcolor/shared_order.hpp"
#include "mcolor/simulator.hpp"
#include "mcolor/verifier.hpp"

namespace mcolor {

// JSON renderings of coloring runs, verification reports and round traces.

inline nlohmann::json params_to_json(const RunParams& p) {
    return {{"algorithm", p.algorithm}, {"epsilon", p.epsilon}, {"seed", p.seed},   {"Delta", p.max_degree},
            {"N", p.id_space},          {"n", p.node_count},    {"params", p.extra}, {"version", kVersion}};
}

inline RunParams run_params_from_json(const nlohmann::json& j) {
    RunParams p;
    p.algorithm = j.at("algorithm").get<std::string>();
    p.epsilon = j.at("epsilon").get<double>();
    p.seed = j.at("seed").get<std::uint64_t>();
    p.max_degree = j.at("Delta").get<std::size_t>();
    p.id_space = j.at("N").get<std::uint64_t>();
    p.node_count = j.at("n").get<std::size_t>();
    p.extra = j.value("params", nlohmann::json::object());
    return p;
}

inline nlohmann::json coloring_to_json(const Multicoloring& m) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& [id, colors] : m.assignment) nodes.push_back({{"id", id}, {"colors", colors}});
    return {{"palette_size", m.palette_size}, {"nodes", nodes}, {"meta", params_to_json(m.params)}};
}

inline Multicoloring coloring_from_json(const nlohmann::json& j) {
    Multicoloring m;
    try {
        m.palette_size = j.at("palette_size").get<std::uint64_t>();
        for (const auto& node : j.at("nodes")) {
            require(m.assignment.emplace(node.at("id").get<NodeId>(), node.at("colors").get<ColorSet>()).second,
                    ErrorKind::ParseError, "duplicate node in coloring");
        }
        m.params = run_params_from_json(j.at("meta"));
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, std::string("coloring JSON: ") + e.what());
    }
    return m;
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : r.degree_classes) {
        classes.push_back({{"degree", c.degree},
                           {"nodes", c.nodes},
                           {"min_colors", c.min_colors},
                           {"required_colors", c.required_colors},
                           {"rho", c.rho},
                           {"below_target", c.below_target}});
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations) violations.push_back({{"u", v.u}, {"v", v.v}, {"shared", v.shared}});
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : r.nodes) {
        nodes.push_back({{"id", n.id}, {"degree", n.degree}, {"colors", n.colors}, {"fraction", n.fraction}});
    }
    return {{"valid", r.valid},
            {"palette_size", r.palette_size},
            {"epsilon", r.epsilon},
            {"worst_ratio", r.worst_ratio},
            {"worst_node", r.worst_node},
            {"fractions_met", r.fractions_met},
            {"fraction_shortfalls", r.fraction_shortfalls},
            {"degree_classes", classes},
            {"violation_count", r.violation_count},
            {"violations", violations},
            {"nodes", nodes}};
}

inline nlohmann::json trace_to_json(const RoundTrace& t) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : t.nodes) {
        nodes.push_back({{"id", n.id},
                         {"sent_messages", 1},
                         {"sent_bytes", n.sent.bits.size()},
                         {"received_messages", n.received_from.size()},
                         {"received_bytes", n.received_bytes},
                         {"colors", n.output.size()}});
    }
    return {{"message_count", t.message_count},
            {"broadcast_count", t.broadcast_count},
            {"max_payload_bytes", t.max_payload_bytes},
            {"total_payload_bytes", t.total_payload_bytes},
            {"nodes", nodes}};
}

inline nlohmann::json certification_to_json(const CertificationReport& r) {
    nlohmann::json j = {{"pass", r.pass},
                        {"views_checked", r.views_checked},
                        {"failing_views", r.failing_views},
                        {"worst_count", r.worst_count},
                        {"worst_fraction", r.worst_fraction},
                        {"worst_ratio", r.worst_ratio}};
    if (r.worst_view) j["worst_view"] = {{"id", r.worst_view->id}, {"neighbors", r.worst_view->neighbors}};
    return j;
}

inline nlohmann::json nbr_check_to_json(const NbrCheckReport& r) {
    nlohmann::json min_colors = nlohmann::json::object();
    for (const auto& [deg, c] : r.min_colors) min_colors[std::to_string(deg)] = c;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"u", {{"id", v.u.id}, {"neighbors", v.u.neighbors}}},
                              {"v", {{"id", v.v.id}, {"neighbors", v.v.neighbors}}},
                              {"shared", v.shared}});
    }
    return {{"vertices", r.vertices},
            {"edges_checked", r.edges_checked},
            {"palette_size", r.palette_size},
            {"violation_count", r.violation_count},
            {"violations", violations},
            {"min_colors_by_degree", min_colors},
            {"fraction_failures", r.fraction_failures},
            {"pass", r.pass()}};
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::NotFound, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::NotFound, "cannot write " + path);
    out << text;
}

}  // namespace mcolor
