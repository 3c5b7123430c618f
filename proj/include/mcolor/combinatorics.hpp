#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace mcolor {

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

/// Number of one-hop views (x, Gamma) over [N] with min_degree <= |Gamma| <= max_degree.
inline std::uint64_t view_count(std::uint64_t id_space, std::size_t max_degree, std::size_t min_degree = 1) {
    if (id_space == 0) return 0;
    unsigned __int128 total = 0;
    for (std::size_t d = min_degree; d <= max_degree; ++d) {
        total += static_cast<unsigned __int128>(id_space) * binomial(id_space - 1, d);
        if (total > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(total);
}

/// Calls fn(const std::vector<T>&) for every size-k subset of `items`, in
/// lexicographic order of positions.
template <typename T, typename Fn>
void for_each_combination(const std::vector<T>& items, std::size_t k, Fn&& fn) {
    const std::size_t n = items.size();
    if (k > n) return;
    std::vector<std::size_t> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[i] = i;
    std::vector<T> pick(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) pick[i] = items[pos[i]];
        fn(static_cast<const std::vector<T>&>(pick));
        std::size_t i = k;
        while (i > 0 && pos[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++pos[i - 1];
        for (std::size_t j = i; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
}

}  // namespace mcolor
