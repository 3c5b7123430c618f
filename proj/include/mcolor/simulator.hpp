#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mcolor/graph.hpp"
#include "mcolor/multicoloring.hpp"

namespace mcolor {

/// Opaque random payload R_v.
using Bits = std::vector<std::uint8_t>;

/// The single message a node broadcasts: its ID and its random bits.
struct Envelope {
    NodeId id = 0;
    Bits bits;

    friend bool operator==(const Envelope&, const Envelope&) = default;
};

/// A one-shot node computation. The harness calls generate_bits once per node
/// (step 1), delivers envelopes along edges (step 2), then calls compute with
/// the node's own envelope and exactly the envelopes of its neighbors
/// (step 3). compute never sees the graph.
class NodeAlgorithm {
public:
    virtual ~NodeAlgorithm() = default;

    virtual std::string name() const = 0;
    virtual bool deterministic() const = 0;
    virtual std::uint64_t palette_size() const = 0;

    /// Global knowledge shared by all nodes (N, Delta, n, eps, ...) and the
    /// algorithm's own parameters, for output metadata.
    virtual RunParams params() const = 0;

    /// Step 1. Must depend only on (id, seed). Deterministic algorithms return
    /// no bits.
    virtual Bits generate_bits(NodeId /*id*/, std::uint64_t /*seed*/) const { return {}; }

    /// Step 3. `received` is sorted by sender ID.
    virtual ColorSet compute(const Envelope& own, std::span<const Envelope> received) const = 0;
};

struct NodeTrace {
    NodeId id = 0;
    Envelope sent;
    std::vector<NodeId> received_from;
    std::size_t received_bytes = 0;
    ColorSet output;
};

struct RoundTrace {
    std::vector<NodeTrace> nodes;
    /// Directed deliveries; equals 2|E|.
    std::size_t message_count = 0;
    std::size_t broadcast_count = 0;
    std::size_t max_payload_bytes = 0;
    std::size_t total_payload_bytes = 0;

    friend bool operator==(const RoundTrace& a, const RoundTrace& b) {
        if (a.message_count != b.message_count || a.broadcast_count != b.broadcast_count ||
            a.max_payload_bytes != b.max_payload_bytes || a.total_payload_bytes != b.total_payload_bytes ||
            a.nodes.size() != b.nodes.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.nodes.size(); ++i) {
            const auto& x = a.nodes[i];
            const auto& y = b.nodes[i];
            if (x.id != y.id || !(x.sent == y.sent) || x.received_from != y.received_from ||
                x.received_bytes != y.received_bytes || x.output != y.output) {
                return false;
            }
        }
        return true;
    }
};

struct OneShotResult {
    Multicoloring coloring;
    RoundTrace trace;
};

namespace detail {

inline void check_output(const NodeAlgorithm& algo, NodeId id, const ColorSet& colors) {
    const auto k = algo.palette_size();
    for (std::size_t i = 0; i < colors.size(); ++i) {
        if (colors[i] < 1 || colors[i] > k || (i > 0 && colors[i] <= colors[i - 1])) {
            fail(ErrorKind::ContractViolation, algo.name() + " produced a malformed color set at node " +
                                                   std::to_string(id));
        }
    }
}

inline void check_bits(const NodeAlgorithm& algo, const Envelope& e) {
    if (algo.deterministic() && !e.bits.empty()) {
        fail(ErrorKind::ContractViolation,
             "deterministic algorithm " + algo.name() + " carries random bits at node " + std::to_string(e.id));
    }
}

}  // namespace detail

/// Runs one synchronous communication round of `algo` on `g`.
/// Step-3 computations are distributed over `threads` workers; the result
/// does not depend on the thread count.
inline OneShotResult run_one_shot(const Graph& g, const NodeAlgorithm& algo, std::uint64_t seed,
                                  unsigned threads = 1) {
    const std::size_t n = g.size();

    // Step 1: local bit generation.
    std::vector<Envelope> sent(n);
    for (std::size_t v = 0; v < n; ++v) {
        sent[v] = Envelope{g.id(v), algo.generate_bits(g.id(v), seed)};
        detail::check_bits(algo, sent[v]);
    }

    // Step 2: every node broadcasts its envelope; deliveries are sorted by
    // sender ID so that inboxes are canonical.
    std::vector<std::vector<Envelope>> inbox(n);
    RoundTrace trace;
    trace.nodes.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        ++trace.broadcast_count;
        trace.max_payload_bytes = std::max(trace.max_payload_bytes, sent[v].bits.size());
        for (const auto u : g.neighbors(v)) {
            inbox[u].push_back(sent[v]);
            ++trace.message_count;
            trace.total_payload_bytes += sent[v].bits.size();
        }
    }
    for (auto& box : inbox) {
        std::sort(box.begin(), box.end(), [](const Envelope& a, const Envelope& b) { return a.id < b.id; });
    }

    // Step 3: pure per-node computation. All envelopes are final here.
    std::vector<ColorSet> outputs(n);
    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t v = begin; v < end; ++v) outputs[v] = algo.compute(sent[v], inbox[v]);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (threads == 1) {
        work(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min(n, t * chunk);
            const std::size_t end = std::min(n, begin + chunk);
            pool.emplace_back(work, begin, end);
        }
    }

    OneShotResult result;
    result.coloring.palette_size = algo.palette_size();
    result.coloring.params = algo.params();
    result.coloring.params.seed = seed;
    result.coloring.params.node_count = n;
    for (std::size_t v = 0; v < n; ++v) {
        detail::check_output(algo, g.id(v), outputs[v]);
        auto& t = trace.nodes[v];
        t.id = g.id(v);
        t.sent = sent[v];
        for (const auto& e : inbox[v]) {
            t.received_from.push_back(e.id);
            t.received_bytes += e.bits.size();
        }
        t.output = outputs[v];
        result.coloring.assignment.emplace(g.id(v), std::move(outputs[v]));
    }
    std::sort(trace.nodes.begin(), trace.nodes.end(), [](const NodeTrace& a, const NodeTrace& b) { return a.id < b.id; });
    result.trace = std::move(trace);
    return result;
}

/// Step 3 for a single node given its envelope and its neighbors' envelopes.
/// Produces the same set the node computes inside run_one_shot.
inline ColorSet replay_view(const OneHopView& view, const Envelope& own, std::vector<Envelope> received,
                            const NodeAlgorithm& algo) {
    require(own.id == view.id, ErrorKind::InvalidParams, "own envelope ID does not match the view");
    std::sort(received.begin(), received.end(), [](const Envelope& a, const Envelope& b) { return a.id < b.id; });
    require(received.size() == view.neighbors.size(), ErrorKind::InvalidParams,
            "envelope count does not match the view");
    for (std::size_t i = 0; i < received.size(); ++i) {
        require(received[i].id == view.neighbors[i], ErrorKind::InvalidParams,
                "envelope IDs do not match the view");
    }
    detail::check_bits(algo, own);
    for (const auto& e : received) detail::check_bits(algo, e);
    auto colors = algo.compute(own, received);
    detail::check_output(algo, view.id, colors);
    return colors;
}

/// Convenience: regenerates every envelope in the view from (id, seed) the
/// same way run_one_shot does.
inline ColorSet replay_view(const OneHopView& view, const NodeAlgorithm& algo, std::uint64_t seed = 0) {
    Envelope own{view.id, algo.generate_bits(view.id, seed)};
    std::vector<Envelope> received;
    received.reserve(view.neighbors.size());
    for (const auto y : view.neighbors) received.push_back(Envelope{y, algo.generate_bits(y, seed)});
    return replay_view(view, own, std::move(received), algo);
}

}  // namespace mcolor
