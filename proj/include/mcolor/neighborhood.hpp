#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <iterator>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcolor/combinatorics.hpp"
#include "mcolor/simulator.hpp"
#include "mcolor/verifier.hpp"

namespace mcolor {

// The neighborhood graph N1(N, Delta): one vertex per one-hop view (x, Gamma)
// over [N] with 1 <= |Gamma| <= Delta; (x_u, G_u) ~ (x_v, G_v) iff
// x_u != x_v, x_u in G_v \ G_u and x_v in G_u \ G_v.
//
// Because x_u is never in G_u, adjacency reduces to x_u in G_v and x_v in G_u.
// So for each pair of IDs {x, y}, every view of x containing y is adjacent to
// every view of y containing x, and there are no other edges. The code below
// uses that complete-bipartite block structure throughout.

inline constexpr std::uint64_t kNbrVertexBudget = 1'000'000;
inline constexpr std::uint64_t kNbrEdgeBudget = 20'000'000;
inline constexpr std::uint64_t kChromaticVertexBudget = 10'000;
inline constexpr NodeId kMaxNbrIdSpace = 64;

/// Condition (x_u != x_v, x_u in G_v \ G_u, x_v in G_u \ G_v), literally.
inline bool views_adjacent(const OneHopView& u, const OneHopView& v) {
    auto in = [](const std::vector<NodeId>& s, NodeId x) { return std::binary_search(s.begin(), s.end(), x); };
    return u.id != v.id && in(v.neighbors, u.id) && !in(u.neighbors, u.id) && in(u.neighbors, v.id) &&
           !in(v.neighbors, v.id);
}

/// Closed-form edge count: C(N,2) * (sum_{t<Delta} C(N-2, t))^2.
inline std::uint64_t nbr_edge_count(std::uint64_t id_space, std::size_t max_degree) {
    if (id_space < 2 || max_degree == 0) return 0;
    unsigned __int128 block = 0;
    for (std::size_t t = 0; t < max_degree; ++t) block += binomial(id_space - 2, t);
    const unsigned __int128 total = static_cast<unsigned __int128>(binomial(id_space, 2)) * block * block;
    return total > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                               : static_cast<std::uint64_t>(total);
}

/// Vertex set of N1(N, Delta) with the block index described above.
class ViewIndex {
public:
    ViewIndex(std::uint64_t id_space, std::size_t max_degree) : id_space_(id_space), max_degree_(max_degree) {
        require(id_space >= 1, ErrorKind::InvalidParams, "N must be positive");
        require(id_space <= kMaxNbrIdSpace, ErrorKind::TooLarge, "neighborhood graphs are limited to N <= 64");
        require(view_count(id_space, max_degree) <= kNbrVertexBudget, ErrorKind::TooLarge,
                "neighborhood graph has too many vertices");
        containing_.resize(id_space * id_space);
        std::vector<NodeId> others;
        for (NodeId x = 1; x <= id_space; ++x) {
            others.clear();
            for (NodeId y = 1; y <= id_space; ++y) {
                if (y != x) others.push_back(y);
            }
            for (std::size_t d = 1; d <= max_degree && d <= others.size(); ++d) {
                for_each_combination(others, d, [&](const std::vector<NodeId>& gamma) {
                    const auto idx = static_cast<std::uint32_t>(views_.size());
                    views_.emplace_back(x, gamma);
                    for (const auto y : gamma) containing_[slot(x, y)].push_back(idx);
                });
            }
        }
    }

    std::uint64_t id_space() const { return id_space_; }
    std::size_t max_degree() const { return max_degree_; }
    std::size_t size() const { return views_.size(); }
    const OneHopView& view(std::size_t i) const { return views_[i]; }
    const std::vector<OneHopView>& views() const { return views_; }

    /// Indices of views of x whose neighbor set contains y.
    const std::vector<std::uint32_t>& containing(NodeId x, NodeId y) const { return containing_[slot(x, y)]; }

    /// Calls fn(A, B) for every ID pair x < y where A = views of x containing
    /// y and B = views of y containing x; the edges are exactly A x B.
    template <typename Fn>
    void for_each_block(Fn&& fn) const {
        for (NodeId x = 1; x <= id_space_; ++x) {
            for (NodeId y = x + 1; y <= id_space_; ++y) fn(containing(x, y), containing(y, x));
        }
    }

private:
    std::size_t slot(NodeId x, NodeId y) const { return (x - 1) * id_space_ + (y - 1); }

    std::uint64_t id_space_;
    std::size_t max_degree_;
    std::vector<OneHopView> views_;
    std::vector<std::vector<std::uint32_t>> containing_;
};

struct NeighborhoodGraph {
    std::uint64_t id_space = 0;
    std::size_t max_degree = 0;
    std::vector<OneHopView> vertices;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (smaller index, larger index), sorted

    std::vector<std::vector<std::uint32_t>> adjacency() const {
        std::vector<std::vector<std::uint32_t>> adj(vertices.size());
        for (const auto& [a, b] : edges) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        for (auto& l : adj) std::sort(l.begin(), l.end());
        return adj;
    }
};

inline NeighborhoodGraph build_nbr_graph(std::uint64_t id_space, std::size_t max_degree) {
    require(nbr_edge_count(id_space, max_degree) <= kNbrEdgeBudget, ErrorKind::TooLarge,
            "neighborhood graph has too many edges to materialize");
    const ViewIndex index(id_space, max_degree);
    NeighborhoodGraph ng;
    ng.id_space = id_space;
    ng.max_degree = max_degree;
    ng.vertices = index.views();
    index.for_each_block([&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        for (const auto u : a) {
            for (const auto v : b) ng.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    });
    std::sort(ng.edges.begin(), ng.edges.end());
    return ng;
}

// ---------------------------------------------------------------------------
// Exact chromatic number: DSATUR branch and bound with a greedy clique lower
// bound and a DSATUR upper bound.

namespace detail {

class DsaturSolver {
public:
    DsaturSolver(const std::vector<std::vector<std::uint32_t>>& adj, std::uint64_t node_budget)
        : adj_(adj), n_(adj.size()), budget_(node_budget) {}

    std::size_t solve() {
        if (n_ == 0) return 0;
        lower_ = greedy_clique();
        best_ = greedy_upper();
        if (best_ > lower_) {
            color_.assign(n_, -1);
            conflicts_.assign(n_, std::vector<std::uint32_t>(best_, 0));
            saturation_.assign(n_, 0);
            branch(0, 0);
        }
        return best_;
    }

    std::size_t clique_bound() const { return lower_; }

private:
    std::size_t greedy_clique() const {
        std::size_t best = 1;
        std::vector<std::uint32_t> order(n_);
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return adj_[a].size() > adj_[b].size(); });
        const std::size_t starts = std::min<std::size_t>(n_, 200);
        for (std::size_t s = 0; s < starts; ++s) {
            std::vector<std::uint32_t> clique{order[s]};
            std::vector<std::uint32_t> cand = adj_[order[s]];
            while (!cand.empty()) {
                // Pick the candidate with the most neighbors inside cand.
                std::uint32_t pick = cand.front();
                std::size_t pick_score = 0;
                for (const auto c : cand) {
                    std::size_t score = 0;
                    for (const auto w : adj_[c]) score += std::binary_search(cand.begin(), cand.end(), w);
                    if (score > pick_score || (score == pick_score && c < pick)) {
                        pick = c;
                        pick_score = score;
                    }
                }
                clique.push_back(pick);
                std::vector<std::uint32_t> next;
                std::set_intersection(cand.begin(), cand.end(), adj_[pick].begin(), adj_[pick].end(),
                                      std::back_inserter(next));
                cand = std::move(next);
            }
            best = std::max(best, clique.size());
        }
        return best;
    }

    std::size_t greedy_upper() const {
        std::vector<int> color(n_, -1);
        std::vector<std::vector<char>> seen(n_);
        std::vector<std::size_t> sat(n_, 0);
        std::size_t used = 0;
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t pick = n_;
            for (std::size_t v = 0; v < n_; ++v) {
                if (color[v] >= 0) continue;
                if (pick == n_ || sat[v] > sat[pick] || (sat[v] == sat[pick] && adj_[v].size() > adj_[pick].size())) {
                    pick = v;
                }
            }
            std::vector<char> taken(used + 1, 0);
            for (const auto w : adj_[pick]) {
                if (color[w] >= 0) taken[static_cast<std::size_t>(color[w])] = 1;
            }
            std::size_t c = 0;
            while (taken[c]) ++c;
            color[pick] = static_cast<int>(c);
            used = std::max(used, c + 1);
            for (const auto w : adj_[pick]) {
                if (seen[w].size() <= c) seen[w].resize(c + 1, 0);
                if (!seen[w][c]) {
                    seen[w][c] = 1;
                    ++sat[w];
                }
            }
        }
        return used;
    }

    void assign(std::uint32_t v, std::uint32_t c) {
        color_[v] = static_cast<int>(c);
        for (const auto w : adj_[v]) {
            if (conflicts_[w][c]++ == 0) ++saturation_[w];
        }
    }

    void unassign(std::uint32_t v, std::uint32_t c) {
        color_[v] = -1;
        for (const auto w : adj_[v]) {
            if (--conflicts_[w][c] == 0) --saturation_[w];
        }
    }

    void branch(std::size_t colored, std::size_t used) {
        if (used >= best_ || best_ == lower_) return;
        if (++nodes_ > budget_) fail(ErrorKind::TooLarge, "chromatic number search exceeded its node budget");
        if (colored == n_) {
            best_ = used;
            return;
        }
        std::uint32_t pick = 0;
        bool found = false;
        for (std::uint32_t v = 0; v < n_; ++v) {
            if (color_[v] >= 0) continue;
            if (!found || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && adj_[v].size() > adj_[pick].size())) {
                pick = v;
                found = true;
            }
        }
        // Existing colors first, then one fresh color if it can still beat best_.
        for (std::uint32_t c = 0; c < used; ++c) {
            if (conflicts_[pick][c] != 0) continue;
            assign(pick, c);
            branch(colored + 1, used);
            unassign(pick, c);
            if (best_ == lower_ || used >= best_) return;
        }
        if (used + 1 < best_) {
            assign(pick, static_cast<std::uint32_t>(used));
            branch(colored + 1, used + 1);
            unassign(pick, static_cast<std::uint32_t>(used));
        }
    }

    const std::vector<std::vector<std::uint32_t>>& adj_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t lower_ = 0;
    std::size_t best_ = 0;
    std::vector<int> color_;
    std::vector<std::vector<std::uint32_t>> conflicts_;
    std::vector<std::size_t> saturation_;
};

}  // namespace detail

/// Exact chromatic number of an explicit graph given as sorted adjacency lists.
inline std::size_t chromatic_number(const std::vector<std::vector<std::uint32_t>>& adj,
                                    std::uint64_t node_budget = 50'000'000) {
    require(adj.size() <= kChromaticVertexBudget, ErrorKind::TooLarge, "graph too large for the exact solver");
    detail::DsaturSolver solver(adj, node_budget);
    return solver.solve();
}

inline std::size_t chromatic_number(const NeighborhoodGraph& ng, std::uint64_t node_budget = 50'000'000) {
    require(ng.vertices.size() <= kChromaticVertexBudget, ErrorKind::TooLarge, "graph too large for the exact solver");
    return chromatic_number(ng.adjacency(), node_budget);
}

// ---------------------------------------------------------------------------
// Exhaustive certificate of a deterministic node algorithm on N1(N, Delta).

struct ViewPairViolation {
    OneHopView u;
    OneHopView v;
    std::size_t shared = 0;
};

struct NbrCheckReport {
    std::uint64_t vertices = 0;
    std::uint64_t edges_checked = 0;
    std::uint64_t palette_size = 0;
    std::size_t violation_count = 0;
    std::vector<ViewPairViolation> violations;  // at most kMaxReportedViolations
    /// Per degree: smallest color count over all views of that degree.
    std::map<std::size_t, std::uint64_t> min_colors;
    std::map<std::size_t, std::uint64_t> required_colors;
    std::uint64_t fraction_failures = 0;
    bool disjoint() const { return violation_count == 0; }
    bool pass() const { return violation_count == 0 && fraction_failures == 0; }
};

/// Required color count for a view of the given degree; nullptr means no
/// fraction requirement.
using CountTarget = std::function<std::uint64_t(std::size_t degree)>;

inline constexpr std::uint64_t kNbrBitsetWordBudget = 100'000'000;

/// Runs `algo` on every vertex of N1(N, Delta) through the one-shot replay
/// path and checks disjointness across every edge plus the per-degree count
/// target. Edges are checked block by block: the union of the colors on one
/// side of a block must miss the union on the other side, which holds iff
/// every edge of the block is disjoint. Offending blocks are expanded edge by
/// edge to report the exact violating pairs.
inline NbrCheckReport check_algo_on_nbr_graph(const NodeAlgorithm& algo, std::uint64_t id_space,
                                              std::size_t max_degree, const CountTarget& target = nullptr) {
    require(algo.deterministic(), ErrorKind::InvalidParams, "only deterministic algorithms map views to colors");
    const ViewIndex index(id_space, max_degree);
    const std::uint64_t k = algo.palette_size();
    const std::size_t words = static_cast<std::size_t>((k + 63) / 64);
    require(static_cast<std::uint64_t>(words) * index.size() <= kNbrBitsetWordBudget, ErrorKind::TooLarge,
            "color tables for this neighborhood graph exceed the memory budget");

    NbrCheckReport report;
    report.vertices = index.size();
    report.palette_size = k;

    std::vector<std::uint64_t> bits(words * index.size(), 0);
    for (std::size_t i = 0; i < index.size(); ++i) {
        const auto& view = index.view(i);
        const auto colors = replay_view(view, algo);
        auto* row = bits.data() + i * words;
        for (const auto c : colors) row[(c - 1) / 64] |= std::uint64_t{1} << ((c - 1) % 64);
        const std::size_t deg = view.degree();
        auto [it, fresh] = report.min_colors.try_emplace(deg, colors.size());
        if (!fresh) it->second = std::min<std::uint64_t>(it->second, colors.size());
        if (target) {
            const auto need = target(deg);
            report.required_colors[deg] = need;
            if (colors.size() < need) ++report.fraction_failures;
        }
    }

    std::vector<std::uint64_t> left(words), right(words);
    auto fold = [&](const std::vector<std::uint32_t>& side, std::vector<std::uint64_t>& acc) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto v : side) {
            const auto* row = bits.data() + static_cast<std::size_t>(v) * words;
            for (std::size_t w = 0; w < words; ++w) acc[w] |= row[w];
        }
    };
    index.for_each_block([&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        report.edges_checked += static_cast<std::uint64_t>(a.size()) * b.size();
        fold(a, left);
        fold(b, right);
        bool clash = false;
        for (std::size_t w = 0; w < words && !clash; ++w) clash = (left[w] & right[w]) != 0;
        if (!clash) return;
        for (const auto u : a) {
            const auto* ru = bits.data() + static_cast<std::size_t>(u) * words;
            for (const auto v : b) {
                const auto* rv = bits.data() + static_cast<std::size_t>(v) * words;
                std::size_t shared = 0;
                for (std::size_t w = 0; w < words; ++w) shared += static_cast<std::size_t>(std::popcount(ru[w] & rv[w]));
                if (shared == 0) continue;
                ++report.violation_count;
                if (report.violations.size() < kMaxReportedViolations) {
                    report.violations.push_back(ViewPairViolation{index.view(u), index.view(v), shared});
                }
            }
        }
    });
    return report;
}

}  // namespace mcolor
