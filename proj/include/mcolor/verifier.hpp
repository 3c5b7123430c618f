#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "mcolor/graph.hpp"
#include "mcolor/multicoloring.hpp"
#include "mcolor/rational.hpp"

namespace mcolor {

inline constexpr std::size_t kMaxReportedViolations = 100;

struct Violation {
    NodeId u = 0;
    NodeId v = 0;           // 0 for a color outside the palette at u
    std::size_t shared = 0;  // shared colors, or out-of-palette colors when v == 0

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct NodeFraction {
    NodeId id = 0;
    std::size_t degree = 0;
    std::uint64_t colors = 0;
    double fraction = 0.0;  // colors / k
    bool meets_target = false;
};

/// Measured guarantee for all nodes of one degree.
struct DegreeClass {
    std::size_t degree = 0;
    std::size_t nodes = 0;
    std::uint64_t min_colors = 0;
    std::uint64_t required_colors = 0;  // ceil((1-eps) k / (degree+1))
    double rho = 0.0;                   // min (colors/k) * (degree+1)
    std::size_t below_target = 0;
};

struct VerificationReport {
    /// Disjointness (and palette range) only; fractions are reported separately.
    bool valid = true;
    std::uint64_t palette_size = 0;
    double epsilon = 0.0;
    std::vector<NodeFraction> nodes;
    /// min over nodes of (|S_v|/k)(deg+1), with the node attaining it.
    double worst_ratio = std::numeric_limits<double>::infinity();
    NodeId worst_node = 0;
    std::vector<DegreeClass> degree_classes;
    bool fractions_met = true;
    std::size_t fraction_shortfalls = 0;
    std::vector<Violation> violations;  // at most kMaxReportedViolations
    std::size_t violation_count = 0;
};

/// Checks per-edge disjointness and the (1-eps)/(deg+1) fraction target.
/// Fraction comparisons are exact.
inline VerificationReport verify(const Graph& g, const Multicoloring& m, double eps) {
    const Rational e = Rational::from_double(eps);
    VerificationReport r;
    r.palette_size = m.palette_size;
    r.epsilon = eps;
    const std::uint64_t k = m.palette_size;

    std::vector<const ColorSet*> sets(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto it = m.assignment.find(g.id(v));
        if (it == m.assignment.end()) fail(ErrorKind::Incomplete, "node " + std::to_string(g.id(v)) + " has no color set");
        sets[v] = &it->second;
    }

    auto record = [&](Violation viol) {
        r.valid = false;
        ++r.violation_count;
        if (r.violations.size() < kMaxReportedViolations) r.violations.push_back(viol);
    };

    for (std::size_t v = 0; v < g.size(); ++v) {
        const auto& s = *sets[v];
        const auto bad = static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](Color c) { return c < 1 || c > k; }));
        const bool sorted = std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
        if (bad > 0 || !sorted) record(Violation{g.id(v), 0, bad});
    }
    for (const auto& [a, b] : g.edges()) {
        const auto shared = intersection_size(*sets[g.index_of(a)], *sets[g.index_of(b)]);
        if (shared > 0) record(Violation{a, b, shared});
    }

    std::map<std::size_t, DegreeClass> classes;
    for (std::size_t v = 0; v < g.size(); ++v) {
        const std::size_t deg = g.degree(v);
        const std::uint64_t count = sets[v]->size();
        NodeFraction nf;
        nf.id = g.id(v);
        nf.degree = deg;
        nf.colors = count;
        nf.fraction = k == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(k);
        nf.meets_target = meets_fraction(count, deg, k, e);
        const double ratio = nf.fraction * static_cast<double>(deg + 1);
        if (ratio < r.worst_ratio) {
            r.worst_ratio = ratio;
            r.worst_node = nf.id;
        }
        auto [it, fresh] = classes.try_emplace(deg);
        auto& dc = it->second;
        if (fresh) {
            dc.degree = deg;
            dc.min_colors = count;
            dc.rho = ratio;
            dc.required_colors = required_count(deg, k, e);
        }
        ++dc.nodes;
        dc.min_colors = std::min(dc.min_colors, count);
        dc.rho = std::min(dc.rho, ratio);
        if (!nf.meets_target) {
            ++dc.below_target;
            r.fractions_met = false;
            ++r.fraction_shortfalls;
        }
        r.nodes.push_back(nf);
    }
    std::sort(r.nodes.begin(), r.nodes.end(), [](const NodeFraction& a, const NodeFraction& b) { return a.id < b.id; });
    for (auto& [deg, dc] : classes) r.degree_classes.push_back(dc);
    return r;
}

}  // namespace mcolor
