#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcolor/rng.hpp"
#include "mcolor/simulator.hpp"

namespace mcolor {

/// Palette size of the randomized algorithm: ceil(6 (Delta+1) ln(n) / eps^2).
/// n may be a real upper bound on the node count.
inline std::uint64_t rand_k(double n, double max_degree, double eps) {
    require(n > 1.0, ErrorKind::InvalidParams, "rand_k needs n > 1");
    require(max_degree >= 0.0, ErrorKind::InvalidParams, "rand_k needs Delta >= 0");
    require(eps > 0.0 && eps <= 1.0, ErrorKind::InvalidParams, "rand_k needs 0 < eps <= 1");
    const double k = 6.0 * (max_degree + 1.0) * std::log(n) / (eps * eps);
    return static_cast<std::uint64_t>(std::ceil(k - 1e-9));
}

/// The k random numbers x_{v,1..k} a node draws, each uniform in [1, k n^4].
struct RandDraws {
    NodeId id = 0;
    std::vector<u128> draws;

    friend bool operator==(const RandDraws&, const RandDraws&) = default;
};

/// k * n^4, the draw range. Throws if it does not fit in 128 bits.
inline u128 draw_range(std::uint64_t k, std::uint64_t n) {
    require(k >= 1 && n >= 1, ErrorKind::InvalidParams, "draw range needs k, n >= 1");
    require(n < (std::uint64_t{1} << 31), ErrorKind::InvalidParams, "n too large for 128-bit draws");
    const u128 n2 = static_cast<u128>(n) * n;
    const u128 n4 = n2 * n2;
    require(n4 <= (~u128{0}) / k, ErrorKind::InvalidParams, "k*n^4 overflows 128 bits");
    return n4 * k;
}

/// Draws come from a stream keyed by (seed, id), so every node owns its
/// randomness and any replay regenerates it.
inline RandDraws rand_draws(NodeId id, std::uint64_t k, std::uint64_t n, std::uint64_t seed) {
    require(k >= 1, ErrorKind::InvalidParams, "rand_draws needs k >= 1");
    const u128 range = draw_range(k, n);
    Stream rng(seed, StreamTag::NodeDraws, id);
    RandDraws out{id, {}};
    out.draws.resize(k);
    for (auto& d : out.draws) d = rng.below128(range) + 1;
    return out;
}

/// Colors i (1-based) where the own draw is strictly below every neighbor's
/// draw. With tie_break, an equal draw is won by the smaller ID.
inline ColorSet rand_select(const RandDraws& own, std::span<const RandDraws> neighbors, bool tie_break = false) {
    const std::size_t k = own.draws.size();
    for (const auto& u : neighbors) {
        require(u.draws.size() == k, ErrorKind::InvalidParams, "neighbor draws have a different k");
    }
    ColorSet out;
    for (std::size_t i = 0; i < k; ++i) {
        const u128 mine = own.draws[i];
        bool wins = true;
        for (const auto& u : neighbors) {
            const u128 theirs = u.draws[i];
            if (mine < theirs) continue;
            if (tie_break && mine == theirs && own.id < u.id) continue;
            wins = false;
            break;
        }
        if (wins) out.push_back(i + 1);
    }
    return out;
}

namespace detail {

inline Bits encode_draws(const RandDraws& d) {
    Bits bits(d.draws.size() * 16);
    for (std::size_t i = 0; i < d.draws.size(); ++i) {
        u128 v = d.draws[i];
        for (std::size_t b = 0; b < 16; ++b) {
            bits[i * 16 + b] = static_cast<std::uint8_t>(v & 0xff);
            v >>= 8;
        }
    }
    return bits;
}

inline RandDraws decode_draws(const Envelope& e) {
    require(e.bits.size() % 16 == 0, ErrorKind::InvalidParams, "malformed draw payload");
    RandDraws d{e.id, std::vector<u128>(e.bits.size() / 16)};
    for (std::size_t i = 0; i < d.draws.size(); ++i) {
        u128 v = 0;
        for (std::size_t b = 16; b-- > 0;) v = (v << 8) | e.bits[i * 16 + b];
        d.draws[i] = v;
    }
    return d;
}

}  // namespace detail

/// Node computation of the randomized algorithm. Nodes know (an upper bound
/// on) n and Delta.
class RandomizedAlgorithm final : public NodeAlgorithm {
public:
    RandomizedAlgorithm(std::uint64_t n, std::size_t max_degree, double eps, bool tie_break = false)
        : n_(n), max_degree_(max_degree), eps_(eps), tie_break_(tie_break),
          k_(rand_k(static_cast<double>(std::max<std::uint64_t>(n, 2)), static_cast<double>(max_degree), eps)) {
        draw_range(k_, n_);
    }

    std::string name() const override { return "randomized"; }
    bool deterministic() const override { return false; }
    std::uint64_t palette_size() const override { return k_; }

    RunParams params() const override {
        RunParams p;
        p.algorithm = name();
        p.epsilon = eps_;
        p.max_degree = max_degree_;
        p.node_count = n_;
        p.extra = {{"k", k_}, {"n_bound", n_}, {"tie_break", tie_break_}};
        return p;
    }

    Bits generate_bits(NodeId id, std::uint64_t seed) const override {
        return detail::encode_draws(rand_draws(id, k_, n_, seed));
    }

    ColorSet compute(const Envelope& own, std::span<const Envelope> received) const override {
        const auto mine = detail::decode_draws(own);
        require(mine.draws.size() == k_, ErrorKind::InvalidParams, "own draws have the wrong length");
        std::vector<RandDraws> others;
        others.reserve(received.size());
        for (const auto& e : received) others.push_back(detail::decode_draws(e));
        return rand_select(mine, others, tie_break_);
    }

private:
    std::uint64_t n_;
    std::size_t max_degree_;
    double eps_;
    bool tie_break_;
    std::uint64_t k_;
};

struct RandomizedOptions {
    /// Degree bound the nodes assume; defaults to the graph's max degree.
    std::optional<std::size_t> max_degree;
    bool tie_break = false;
    unsigned threads = 1;
};

inline OneShotResult run_randomized(const Graph& g, double eps, std::uint64_t seed, const RandomizedOptions& opts = {}) {
    const std::size_t delta = opts.max_degree.value_or(g.max_degree());
    require(delta >= g.max_degree(), ErrorKind::InvalidParams, "degree bound below the graph's max degree");
    const RandomizedAlgorithm algo(std::max<std::uint64_t>(g.size(), 2), delta, eps, opts.tie_break);
    auto result = run_one_shot(g, algo, seed, opts.threads);
    result.coloring.params.id_space = g.id_space();
    return result;
}

}  // namespace mcolor
