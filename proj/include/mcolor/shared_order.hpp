#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mcolor/combinatorics.hpp"
#include "mcolor/rational.hpp"
#include "mcolor/rng.hpp"
#include "mcolor/simulator.hpp"

namespace mcolor {

/// Number of global orders: ceil(2 (Delta+1)^2 ln(N) / eps^2), times an
/// integer inflation factor.
inline std::uint64_t shared_k(double id_space, double max_degree, double eps, std::uint64_t scale = 1) {
    require(id_space > 1.0, ErrorKind::InvalidParams, "shared_k needs N > 1");
    require(max_degree >= 0.0, ErrorKind::InvalidParams, "shared_k needs Delta >= 0");
    require(eps > 0.0 && eps <= 1.0, ErrorKind::InvalidParams, "shared_k needs 0 < eps <= 1");
    require(scale >= 1, ErrorKind::InvalidParams, "scale factor must be >= 1");
    const double k = 2.0 * (max_degree + 1.0) * (max_degree + 1.0) * std::log(id_space) / (eps * eps);
    return scale * static_cast<std::uint64_t>(std::ceil(k - 1e-9));
}

/// k total orders on [N], stored as rank functions. Order i is a seeded
/// Fisher-Yates shuffle keyed by (seed, i), so the family is a pure function
/// of (k, N, seed).
class PermutationFamily {
public:
    static constexpr std::uint64_t kMaxEntries = std::uint64_t{1} << 30;

    PermutationFamily(std::uint64_t k, std::uint64_t id_space, std::uint64_t seed)
        : k_(k), id_space_(id_space), seed_(seed) {
        require(k >= 1 && id_space >= 1, ErrorKind::InvalidParams, "family needs k, N >= 1");
        require(id_space <= std::numeric_limits<std::uint32_t>::max(), ErrorKind::TooLarge, "N too large for a family");
        require(k <= kMaxEntries / id_space, ErrorKind::TooLarge,
                "family of " + std::to_string(k) + " orders on [" + std::to_string(id_space) + "] is too large");
        ranks_.resize(k * id_space);
        for (std::uint64_t i = 0; i < k; ++i) {
            Stream rng(seed, StreamTag::GlobalOrder, i);
            const auto perm = random_permutation(static_cast<std::uint32_t>(id_space), rng);
            // perm[r] is the element at rank r; store the inverse.
            for (std::uint32_t r = 0; r < perm.size(); ++r) ranks_[i * id_space + perm[r]] = r;
        }
    }

    /// Family from explicit rank tables; rank[i][x-1] is the rank of ID x in order i.
    static PermutationFamily from_ranks(const std::vector<std::vector<std::uint32_t>>& ranks) {
        require(!ranks.empty(), ErrorKind::InvalidParams, "family needs at least one order");
        PermutationFamily f;
        f.k_ = ranks.size();
        f.id_space_ = ranks.front().size();
        for (const auto& r : ranks) {
            require(r.size() == f.id_space_, ErrorKind::InvalidParams, "orders over different ID spaces");
            std::vector<char> seen(r.size(), 0);
            for (const auto v : r) {
                require(v < r.size() && !seen[v], ErrorKind::InvalidParams, "rank table is not a bijection");
                seen[v] = 1;
            }
            f.ranks_.insert(f.ranks_.end(), r.begin(), r.end());
        }
        return f;
    }

    std::uint64_t size() const { return k_; }
    std::uint64_t id_space() const { return id_space_; }
    std::uint64_t seed() const { return seed_; }

    /// 0-based rank of ID x (1-based) in order i (0-based).
    std::uint32_t rank(std::uint64_t i, NodeId x) const { return ranks_[i * id_space_ + (x - 1)]; }

private:
    PermutationFamily() = default;

    std::uint64_t k_ = 0;
    std::uint64_t id_space_ = 0;
    std::uint64_t seed_ = 0;
    std::vector<std::uint32_t> ranks_;
};

/// Colors i (1-based) for which x precedes every neighbor in order i.
inline ColorSet shared_select(const OneHopView& view, const PermutationFamily& fam) {
    const auto in_range = [&](NodeId y) { return y >= 1 && y <= fam.id_space(); };
    require(in_range(view.id), ErrorKind::InvalidParams, "view ID outside [N]");
    for (const auto y : view.neighbors) require(in_range(y), ErrorKind::InvalidParams, "neighbor ID outside [N]");
    ColorSet out;
    for (std::uint64_t i = 0; i < fam.size(); ++i) {
        const auto mine = fam.rank(i, view.id);
        bool first = true;
        for (const auto y : view.neighbors) {
            if (fam.rank(i, y) < mine) {
                first = false;
                break;
            }
        }
        if (first) out.push_back(i + 1);
    }
    return out;
}

struct CertificationReport {
    bool pass = true;
    std::uint64_t views_checked = 0;
    std::uint64_t failing_views = 0;
    /// View with the smallest count*(degree+1)/k.
    std::optional<OneHopView> worst_view;
    std::uint64_t worst_count = 0;
    double worst_fraction = 1.0;
    double worst_ratio = std::numeric_limits<double>::infinity();
};

inline constexpr std::uint64_t kCertifyBudget = 10'000'000;

/// Checks every one-hop view (x, Gamma) with 1 <= |Gamma| <= Delta over [N]:
/// each must hold at least a (1-eps)/(|Gamma|+1) fraction of the k colors.
/// Views with empty Gamma hold every color and pass trivially.
inline CertificationReport certify_family(const PermutationFamily& fam, std::size_t max_degree, double eps) {
    const std::uint64_t n_ids = fam.id_space();
    require(view_count(n_ids, max_degree, 0) <= kCertifyBudget, ErrorKind::TooLarge,
            "view enumeration exceeds budget");
    const Rational e = Rational::from_double(eps);
    const std::uint64_t k = fam.size();
    const std::size_t words = (k + 63) / 64;

    CertificationReport report;
    std::vector<std::vector<std::uint64_t>> beats(n_ids + 1, std::vector<std::uint64_t>(words));
    std::vector<std::vector<std::uint64_t>> prefix(max_degree + 1, std::vector<std::uint64_t>(words));
    std::vector<NodeId> gamma;

    for (NodeId x = 1; x <= n_ids && max_degree > 0; ++x) {
        // beats[y] bit i: x precedes y in order i.
        for (NodeId y = 1; y <= n_ids; ++y) {
            auto& b = beats[y];
            std::fill(b.begin(), b.end(), 0);
            if (y == x) continue;
            for (std::uint64_t i = 0; i < k; ++i) {
                if (fam.rank(i, x) < fam.rank(i, y)) b[i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
        std::fill(prefix[0].begin(), prefix[0].end(), ~std::uint64_t{0});
        if (k % 64 != 0) prefix[0][words - 1] = (std::uint64_t{1} << (k % 64)) - 1;

        // Depth-first over increasing neighbor sets; prefix[d] is the AND of
        // the first d neighbors' masks.
        auto visit = [&](auto&& self, NodeId next) -> void {
            const std::size_t depth = gamma.size();
            if (depth > 0) {
                std::uint64_t count = 0;
                for (const auto w : prefix[depth]) count += static_cast<std::uint64_t>(std::popcount(w));
                ++report.views_checked;
                const double ratio = static_cast<double>(count) * static_cast<double>(depth + 1) / static_cast<double>(k);
                if (!meets_fraction(count, depth, k, e)) {
                    report.pass = false;
                    ++report.failing_views;
                }
                if (ratio < report.worst_ratio) {
                    report.worst_ratio = ratio;
                    report.worst_count = count;
                    report.worst_fraction = static_cast<double>(count) / static_cast<double>(k);
                    report.worst_view = OneHopView(x, gamma);
                }
            }
            if (depth == max_degree) return;
            for (NodeId y = next; y <= n_ids; ++y) {
                if (y == x) continue;
                gamma.push_back(y);
                for (std::size_t w = 0; w < words; ++w) prefix[depth + 1][w] = prefix[depth][w] & beats[y][w];
                self(self, y + 1);
                gamma.pop_back();
            }
        };
        visit(visit, 1);
    }
    return report;
}

struct CertifiedFamily {
    PermutationFamily family;
    CertificationReport report;
    /// Number of families drawn (1 if the first one passed).
    std::size_t attempts = 0;
};

/// Draws families until one passes certification or `max_attempts` is
/// reached. Attempt 0 uses `seed`; later attempts use seeds derived from it.
inline CertifiedFamily certify_with_resampling(std::uint64_t k, std::uint64_t id_space, std::size_t max_degree,
                                               double eps, std::uint64_t seed, std::size_t max_attempts) {
    require(max_attempts >= 1, ErrorKind::InvalidParams, "need at least one attempt");
    std::optional<CertifiedFamily> last;
    for (std::size_t a = 0; a < max_attempts; ++a) {
        const std::uint64_t s = a == 0 ? seed : derive_seed(seed, StreamTag::Resample, a);
        PermutationFamily fam(k, id_space, s);
        auto report = certify_family(fam, max_degree, eps);
        const bool ok = report.pass;
        last.emplace(CertifiedFamily{std::move(fam), std::move(report), a + 1});
        if (ok) break;
    }
    return std::move(*last);
}

/// Node computation of the shared-order algorithm: deterministic, every node
/// holds the same family.
class SharedOrderAlgorithm final : public NodeAlgorithm {
public:
    SharedOrderAlgorithm(PermutationFamily family, std::size_t max_degree, double eps)
        : family_(std::move(family)), max_degree_(max_degree), eps_(eps) {}

    std::string name() const override { return "shared-order"; }
    bool deterministic() const override { return true; }
    std::uint64_t palette_size() const override { return family_.size(); }
    const PermutationFamily& family() const { return family_; }

    RunParams params() const override {
        RunParams p;
        p.algorithm = name();
        p.epsilon = eps_;
        p.max_degree = max_degree_;
        p.id_space = family_.id_space();
        p.extra = {{"k", family_.size()}, {"family_seed", family_.seed()}};
        return p;
    }

    ColorSet compute(const Envelope& own, std::span<const Envelope> received) const override {
        std::vector<NodeId> gamma;
        gamma.reserve(received.size());
        for (const auto& e : received) gamma.push_back(e.id);
        return shared_select(OneHopView(own.id, std::move(gamma)), family_);
    }

private:
    PermutationFamily family_;
    std::size_t max_degree_;
    double eps_;
};

}  // namespace mcolor
