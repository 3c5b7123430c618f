#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "mcolor/finite_field.hpp"
#include "mcolor/simulator.hpp"

namespace mcolor {

// Explicit deterministic multicolorings built from towers of low-degree
// polynomials over prime fields.
//
// Level 0 maps ID x to the polynomial whose base-q0 digits spell x-1. Level
// i >= 1 maps the previous level's value beta in GF(q_{i-1}) to the polynomial
// whose base-q_i digits spell beta. A color is (alpha_0, ..., alpha_l, beta)
// and a node keeps every alpha-tuple whose final beta differs from the final
// beta of each neighbor.

struct AlgebraicLevel {
    std::uint64_t q = 0;   // prime field order
    std::size_t d = 0;     // degree bound
    double slack = 2.0;    // f_i > 1

    friend bool operator==(const AlgebraicLevel&, const AlgebraicLevel&) = default;
};

struct AlgebraicParams {
    std::uint64_t id_space = 0;
    std::size_t max_degree = 0;
    std::vector<AlgebraicLevel> levels;  // levels[0..ell]

    std::size_t ell() const { return levels.size() - 1; }

    /// Number of alpha-tuples, prod q_i.
    std::uint64_t tuple_count() const {
        std::uint64_t t = 1;
        for (const auto& l : levels) t *= l.q;
        return t;
    }

    /// q_l * prod q_i.
    std::uint64_t palette_size() const { return tuple_count() * levels.back().q; }

    /// Lower bound on the colors of any view with the given degree:
    /// prod (q_i - degree * d_i), clamped at zero.
    std::uint64_t guaranteed_count(std::size_t degree) const {
        std::uint64_t g = 1;
        for (const auto& l : levels) {
            const auto lost = static_cast<std::uint64_t>(degree) * l.d;
            if (lost >= l.q) return 0;
            g *= l.q - lost;
        }
        return g;
    }
    std::uint64_t guaranteed_count() const { return guaranteed_count(max_degree); }

    /// lambda = prod (1 - 1/f_i).
    double retention() const {
        double lam = 1.0;
        for (const auto& l : levels) lam *= 1.0 - 1.0 / l.slack;
        return lam;
    }

    /// Throws InvalidParams unless the injectivity and slack conditions hold.
    void validate() const {
        require(!levels.empty(), ErrorKind::InvalidParams, "algebraic params need at least one level");
        require(id_space >= 1, ErrorKind::InvalidParams, "N must be positive");
        std::uint64_t domain = id_space;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            const auto& l = levels[i];
            require(is_prime(l.q), ErrorKind::InvalidParams, "q_" + std::to_string(i) + " is not prime");
            require(l.d >= 1, ErrorKind::InvalidParams, "d_" + std::to_string(i) + " must be >= 1");
            require(l.slack > 1.0, ErrorKind::InvalidParams, "f_" + std::to_string(i) + " must exceed 1");
            require(poly_count(l.q, l.d) >= domain, ErrorKind::InvalidParams,
                    "q_" + std::to_string(i) + "^(d+1) does not cover its domain");
            require(static_cast<long double>(l.q) >=
                        static_cast<long double>(l.slack) * static_cast<long double>(max_degree) * l.d,
                    ErrorKind::InvalidParams, "q_" + std::to_string(i) + " < f * Delta * d");
            domain = l.q;
        }
    }

    friend bool operator==(const AlgebraicParams&, const AlgebraicParams&) = default;
};

/// Largest ell' <= ell such that ln^(ell') N > max(e, Delta); 0 if none.
inline std::size_t clamp_depth(std::uint64_t id_space, std::size_t max_degree, std::size_t ell) {
    const double floor_value = std::max(std::exp(1.0), static_cast<double>(max_degree));
    double x = static_cast<double>(id_space);
    std::size_t depth = 0;
    while (depth < ell) {
        const double next = std::log(x);
        if (!(next > floor_value)) break;
        x = next;
        ++depth;
    }
    return depth;
}

namespace detail {

/// Smallest r with r^(e) >= value.
inline std::uint64_t ceil_root(std::uint64_t value, std::size_t e) {
    if (value <= 1) return 1;
    auto reaches = [&](std::uint64_t r) { return poly_count(r, e - 1) >= value; };
    std::uint64_t lo = 1, hi = 2;
    while (!reaches(hi)) hi *= 2;
    while (lo + 1 < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        (reaches(mid) ? hi : lo) = mid;
    }
    return hi;
}

inline std::size_t ceil_log2(std::uint64_t x) {
    std::size_t c = 0;
    while (c < 64 && (std::uint64_t{1} << c) < x) ++c;
    return c;
}

/// Per-level search: minimize prime q over d in [1, ceil(log2 domain)]
/// subject to q >= f*Delta*d and q^(d+1) >= domain. Ties keep the smaller d.
inline AlgebraicLevel choose_level(std::uint64_t domain, std::size_t max_degree, double slack) {
    const std::size_t d_max = std::max<std::size_t>(1, ceil_log2(domain));
    AlgebraicLevel best{0, 0, slack};
    for (std::size_t d = 1; d <= d_max; ++d) {
        const long double need = static_cast<long double>(slack) * static_cast<long double>(max_degree) * d;
        const auto slack_floor = static_cast<std::uint64_t>(std::ceil(need));
        const std::uint64_t lower = std::max({std::uint64_t{2}, slack_floor, ceil_root(domain, d + 1)});
        const std::uint64_t q = next_prime(lower);
        if (best.q == 0 || q < best.q) best = AlgebraicLevel{q, d, slack};
    }
    if (best.q == 0) fail(ErrorKind::Infeasible, "no feasible (d, q) for domain " + std::to_string(domain));
    return best;
}

}  // namespace detail

/// Builds a parameter tower for IDs in [N] and degree bound Delta. The depth
/// is clamped to the feasible regime; `slack` holds f_i per level (the last
/// entry repeats if shorter).
inline AlgebraicParams choose_params(std::uint64_t id_space, std::size_t max_degree, std::size_t ell,
                                     const std::vector<double>& slack = {2.0}) {
    require(id_space >= 2, ErrorKind::InvalidParams, "choose_params needs N >= 2");
    require(max_degree >= 1, ErrorKind::InvalidParams, "choose_params needs Delta >= 1");
    require(!slack.empty(), ErrorKind::InvalidParams, "slack profile is empty");
    for (const auto f : slack) require(f > 1.0, ErrorKind::InvalidParams, "slack f_i must exceed 1");

    AlgebraicParams params;
    params.id_space = id_space;
    params.max_degree = max_degree;
    const std::size_t depth = clamp_depth(id_space, max_degree, ell);
    std::uint64_t domain = id_space;
    for (std::size_t i = 0; i <= depth; ++i) {
        const double f = slack[std::min(i, slack.size() - 1)];
        params.levels.push_back(detail::choose_level(domain, max_degree, f));
        domain = params.levels.back().q;
    }
    params.validate();
    return params;
}

struct TupleColor {
    std::vector<std::uint64_t> alpha;  // alpha_0 .. alpha_l
    std::uint64_t beta = 0;

    /// Mixed-radix position among the q_l * prod q_i colors (0-based).
    std::uint64_t index(const AlgebraicParams& p) const {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) idx = idx * p.levels[i].q + alpha[i];
        return idx * p.levels.back().q + beta;
    }

    static TupleColor from_index(std::uint64_t idx, const AlgebraicParams& p) {
        TupleColor c;
        c.beta = idx % p.levels.back().q;
        idx /= p.levels.back().q;
        c.alpha.resize(p.levels.size());
        for (std::size_t i = p.levels.size(); i-- > 0;) {
            c.alpha[i] = idx % p.levels[i].q;
            idx /= p.levels[i].q;
        }
        return c;
    }

    friend bool operator==(const TupleColor&, const TupleColor&) = default;
};

namespace detail {

inline void check_view(const OneHopView& view, const AlgebraicParams& p) {
    require(view.degree() <= p.max_degree, ErrorKind::InvalidParams,
            "view degree " + std::to_string(view.degree()) + " exceeds Delta=" + std::to_string(p.max_degree));
    require(view.id >= 1 && view.id <= p.id_space, ErrorKind::InvalidParams, "view ID outside [N]");
    for (const auto y : view.neighbors) {
        require(y >= 1 && y <= p.id_space, ErrorKind::InvalidParams, "neighbor ID outside [N]");
    }
}

/// Visits every alpha-tuple that survives the selection test, in
/// lexicographic order, passing (alpha, beta_l of x). A tuple is dropped as
/// soon as some level's value coincides with a neighbor's, since equality at
/// one level propagates to every later level.
template <typename Fn>
void for_each_basic_color(const OneHopView& view, const AlgebraicParams& p, Fn&& emit) {
    const std::size_t levels = p.levels.size();
    const std::size_t m = view.neighbors.size();
    // values[i][0] = beta_{i-1} of x, values[i][1 + j] = beta_{i-1} of neighbor j.
    std::vector<std::vector<std::uint64_t>> values(levels + 1, std::vector<std::uint64_t>(m + 1));
    values[0][0] = view.id - 1;
    for (std::size_t j = 0; j < m; ++j) values[0][j + 1] = view.neighbors[j] - 1;
    std::vector<std::uint64_t> alpha(levels);

    auto recurse = [&](auto&& self, std::size_t level) -> void {
        const auto& lv = p.levels[level];
        const auto& in = values[level];
        auto& out = values[level + 1];
        for (std::uint64_t a = 0; a < lv.q; ++a) {
            const std::uint64_t bx = eval_encoded(in[0], lv.q, lv.d, a);
            bool distinct = true;
            for (std::size_t j = 1; j <= m; ++j) {
                const std::uint64_t by = eval_encoded(in[j], lv.q, lv.d, a);
                if (by == bx) {
                    distinct = false;
                    break;
                }
                out[j] = by;
            }
            if (!distinct) continue;
            out[0] = bx;
            alpha[level] = a;
            if (level + 1 == levels) {
                emit(static_cast<const std::vector<std::uint64_t>&>(alpha), bx);
            } else {
                self(self, level + 1);
            }
        }
    };
    recurse(recurse, 0);
}

}  // namespace detail

/// The basic construction on one view. With no neighbors every alpha-tuple
/// is kept (one color per tuple).
inline std::vector<TupleColor> basic_colors(const OneHopView& view, const AlgebraicParams& params) {
    detail::check_view(view, params);
    std::vector<TupleColor> out;
    detail::for_each_basic_color(view, params, [&](const std::vector<std::uint64_t>& alpha, std::uint64_t beta) {
        out.push_back(TupleColor{alpha, beta});
    });
    return out;
}

/// basic_colors as sorted 1-based palette indices.
inline ColorSet basic_color_set(const OneHopView& view, const AlgebraicParams& params) {
    detail::check_view(view, params);
    ColorSet out;
    const std::uint64_t q_last = params.levels.back().q;
    detail::for_each_basic_color(view, params, [&](const std::vector<std::uint64_t>& alpha, std::uint64_t beta) {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) idx = idx * params.levels[i].q + alpha[i];
        out.push_back(idx * q_last + beta + 1);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Degree-adaptive weighted union of instances for Delta' = 2, 4, ..., 2^L.

struct WeightedColor {
    TupleColor color;
    std::size_t instance = 0;  // i in [1, L]
    std::uint64_t copy = 0;    // j in [1, omega_i]

    friend bool operator==(const WeightedColor&, const WeightedColor&) = default;
};

class WeightedScheme {
public:
    /// instances[i-1] must be built for Delta' = 2^i, i = 1..L with
    /// L = max(1, ceil(log2 Delta)).
    WeightedScheme(std::vector<AlgebraicParams> instances, std::size_t max_degree, double eps)
        : instances_(std::move(instances)), max_degree_(max_degree), eps_(eps) {
        require(max_degree_ >= 1, ErrorKind::InvalidParams, "weighted scheme needs Delta >= 1");
        require(eps_ >= 0.0 && eps_ <= 1.0, ErrorKind::InvalidParams, "weighted scheme needs eps in [0, 1]");
        const std::size_t top = instance_count(max_degree_);
        require(instances_.size() >= top, ErrorKind::InvalidParams,
                "missing instance: need " + std::to_string(top) + ", got " + std::to_string(instances_.size()));
        instances_.resize(top);
        for (std::size_t i = 1; i <= top; ++i) {
            const auto& inst = instances_[i - 1];
            require(inst.max_degree == (std::size_t{1} << i), ErrorKind::InvalidParams,
                    "instance " + std::to_string(i) + " is not built for Delta'=" + std::to_string(1u << i));
            require(inst.id_space == instances_.front().id_space, ErrorKind::InvalidParams,
                    "instances disagree on N");
            inst.validate();
        }
        const auto top_palette = static_cast<long double>(instances_.back().palette_size());
        std::uint64_t offset = 0;
        for (std::size_t i = 1; i <= top; ++i) {
            const std::uint64_t size = instances_[i - 1].palette_size();
            std::uint64_t w = 0;
            if (eps_ == 0.0) {
                w = (instances_.back().palette_size() + size - 1) / size;
            } else {
                const long double scale =
                    std::pow(static_cast<long double>(max_degree_) / static_cast<long double>(std::uint64_t{1} << (i - 1)),
                             static_cast<long double>(eps_));
                w = static_cast<std::uint64_t>(std::ceil(scale * top_palette / static_cast<long double>(size)));
            }
            weights_.push_back(std::max<std::uint64_t>(w, 1));
            offsets_.push_back(offset);
            offset += weights_.back() * size;
        }
        palette_ = offset;
    }

    static std::size_t instance_count(std::size_t max_degree) {
        return std::max<std::size_t>(1, detail::ceil_log2(max_degree));
    }

    /// First instance a node of this degree uses: max(1, ceil(log2 degree)).
    static std::size_t first_instance(std::size_t degree) {
        return std::max<std::size_t>(1, detail::ceil_log2(degree));
    }

    std::size_t max_degree() const { return max_degree_; }
    double epsilon() const { return eps_; }
    std::size_t size() const { return instances_.size(); }
    const AlgebraicParams& instance(std::size_t i) const { return instances_.at(i - 1); }
    const std::vector<AlgebraicParams>& instances() const { return instances_; }
    std::uint64_t weight(std::size_t i) const { return weights_.at(i - 1); }
    std::uint64_t palette_size() const { return palette_; }

    /// 1-based palette index of (c, i, j).
    Color color_index(std::size_t i, std::uint64_t j, std::uint64_t tuple_index) const {
        return offsets_.at(i - 1) + (j - 1) * instances_[i - 1].palette_size() + tuple_index + 1;
    }

    /// Lower bound on the colors of a view of this degree.
    std::uint64_t guaranteed_count(std::size_t degree) const {
        std::uint64_t g = 0;
        for (std::size_t i = first_instance(degree); i <= size(); ++i) {
            g += weights_[i - 1] * instances_[i - 1].guaranteed_count(degree);
        }
        return g;
    }

private:
    std::vector<AlgebraicParams> instances_;
    std::size_t max_degree_;
    double eps_;
    std::vector<std::uint64_t> weights_;
    std::vector<std::uint64_t> offsets_;
    std::uint64_t palette_ = 0;
};

/// Builds instances for Delta' = 2^i with choose_params and weights them.
inline WeightedScheme make_weighted_scheme(std::uint64_t id_space, std::size_t max_degree, std::size_t ell, double eps,
                                           const std::vector<double>& slack = {2.0}) {
    std::vector<AlgebraicParams> instances;
    for (std::size_t i = 1; i <= WeightedScheme::instance_count(max_degree); ++i) {
        instances.push_back(choose_params(id_space, std::size_t{1} << i, ell, slack));
    }
    return WeightedScheme(std::move(instances), max_degree, eps);
}

namespace detail {

inline void check_weighted_view(const OneHopView& view, const WeightedScheme& scheme) {
    require(view.degree() <= scheme.max_degree(), ErrorKind::InvalidParams, "view degree exceeds Delta");
}

}  // namespace detail

inline std::vector<WeightedColor> weighted_colors(const OneHopView& view, const WeightedScheme& scheme) {
    detail::check_weighted_view(view, scheme);
    std::vector<WeightedColor> out;
    for (std::size_t i = WeightedScheme::first_instance(view.degree()); i <= scheme.size(); ++i) {
        const auto base = basic_colors(view, scheme.instance(i));
        for (std::uint64_t j = 1; j <= scheme.weight(i); ++j) {
            for (const auto& c : base) out.push_back(WeightedColor{c, i, j});
        }
    }
    return out;
}

inline ColorSet weighted_color_set(const OneHopView& view, const WeightedScheme& scheme) {
    detail::check_weighted_view(view, scheme);
    ColorSet out;
    for (std::size_t i = WeightedScheme::first_instance(view.degree()); i <= scheme.size(); ++i) {
        const auto& inst = scheme.instance(i);
        const auto base = basic_color_set(view, inst);
        for (std::uint64_t j = 1; j <= scheme.weight(i); ++j) {
            for (const auto c : base) out.push_back(scheme.color_index(i, j, c - 1));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Node computations. Isolated nodes take the whole palette.

inline nlohmann::json params_to_json(const AlgebraicParams& p) {
    nlohmann::json q = nlohmann::json::array(), d = nlohmann::json::array(), f = nlohmann::json::array();
    for (const auto& l : p.levels) {
        q.push_back(l.q);
        d.push_back(l.d);
        f.push_back(l.slack);
    }
    return {{"ell", p.ell()}, {"q", q}, {"d", d}, {"f", f}, {"N", p.id_space}, {"Delta", p.max_degree},
            {"palette_size", p.palette_size()}};
}

inline AlgebraicParams params_from_json(const nlohmann::json& j) {
    AlgebraicParams p;
    p.id_space = j.at("N").get<std::uint64_t>();
    p.max_degree = j.at("Delta").get<std::size_t>();
    const auto& q = j.at("q");
    const auto& d = j.at("d");
    const auto& f = j.at("f");
    require(q.size() == d.size() && q.size() == f.size() && j.at("ell").get<std::size_t>() + 1 == q.size(),
            ErrorKind::InvalidParams, "inconsistent algebraic params block");
    for (std::size_t i = 0; i < q.size(); ++i) {
        p.levels.push_back(AlgebraicLevel{q[i].get<std::uint64_t>(), d[i].get<std::size_t>(), f[i].get<double>()});
    }
    p.validate();
    return p;
}

namespace detail {

inline OneHopView view_from_envelopes(const Envelope& own, std::span<const Envelope> received) {
    std::vector<NodeId> gamma;
    gamma.reserve(received.size());
    for (const auto& e : received) gamma.push_back(e.id);
    return OneHopView(own.id, std::move(gamma));
}

}  // namespace detail

class AlgebraicBasicAlgorithm final : public NodeAlgorithm {
public:
    explicit AlgebraicBasicAlgorithm(AlgebraicParams params) : params_(std::move(params)) { params_.validate(); }

    std::string name() const override { return "algebraic-basic"; }
    bool deterministic() const override { return true; }
    std::uint64_t palette_size() const override { return params_.palette_size(); }
    const AlgebraicParams& algebraic_params() const { return params_; }

    RunParams params() const override {
        RunParams p;
        p.algorithm = name();
        p.max_degree = params_.max_degree;
        p.id_space = params_.id_space;
        p.extra = {{"algebraic", params_to_json(params_)}};
        return p;
    }

    ColorSet compute(const Envelope& own, std::span<const Envelope> received) const override {
        if (received.empty()) return all_colors(palette_size());
        return basic_color_set(detail::view_from_envelopes(own, received), params_);
    }

private:
    AlgebraicParams params_;
};

class AlgebraicWeightedAlgorithm final : public NodeAlgorithm {
public:
    explicit AlgebraicWeightedAlgorithm(WeightedScheme scheme) : scheme_(std::move(scheme)) {}

    std::string name() const override { return "algebraic-weighted"; }
    bool deterministic() const override { return true; }
    std::uint64_t palette_size() const override { return scheme_.palette_size(); }
    const WeightedScheme& scheme() const { return scheme_; }

    RunParams params() const override {
        RunParams p;
        p.algorithm = name();
        p.epsilon = scheme_.epsilon();
        p.max_degree = scheme_.max_degree();
        p.id_space = scheme_.instance(1).id_space;
        nlohmann::json inst = nlohmann::json::array();
        nlohmann::json weights = nlohmann::json::array();
        for (std::size_t i = 1; i <= scheme_.size(); ++i) {
            inst.push_back(params_to_json(scheme_.instance(i)));
            weights.push_back(scheme_.weight(i));
        }
        p.extra = {{"instances", inst}, {"weights", weights}, {"palette_size", scheme_.palette_size()}};
        return p;
    }

    ColorSet compute(const Envelope& own, std::span<const Envelope> received) const override {
        if (received.empty()) return all_colors(palette_size());
        return weighted_color_set(detail::view_from_envelopes(own, received), scheme_);
    }

private:
    WeightedScheme scheme_;
};

}  // namespace mcolor
