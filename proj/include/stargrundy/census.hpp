#pragma once

// P-position census of m-Star Nim against m-pile Nim by retrograde analysis.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stargrundy/error.hpp"
#include "stargrundy/oracle.hpp"

namespace stargrundy {

struct CensusReport {
    unsigned strips = 0;
    std::uint64_t bound = 0;
    std::uint64_t nim_p_count = 0;   // 1 <= a_1 <= ... <= a_m <= bound with XOR zero
    std::uint64_t star_p_count = 0;  // those that are also Star Nim P-positions
};

namespace detail {

// Dense index of a sorted tuple in the (bound+1)^m cube.
inline std::uint64_t cube_index(const std::vector<std::uint64_t>& tuple, std::uint64_t radix) {
    std::uint64_t index = 0;
    for (auto v : tuple) index = index * radix + v;
    return index;
}

// Visits all nondecreasing tuples over [0, bound] with at most one zero.
template <typename Visitor>
void for_each_star_nim_tuple(unsigned m, std::uint64_t bound, Visitor&& visit) {
    std::vector<std::uint64_t> tuple(m, 0);
    // Odometer over nondecreasing sequences.
    while (true) {
        if (!(m >= 2 && tuple[0] == 0 && tuple[1] == 0)) visit(tuple);
        std::size_t i = m;
        while (i > 0 && tuple[i - 1] == bound) --i;
        if (i == 0) return;
        const auto next = tuple[i - 1] + 1;
        for (std::size_t j = i - 1; j < m; ++j) tuple[j] = next;
    }
}

}  // namespace detail

/// Counts Nim P-positions and, among them, m-Star Nim P-positions over all
/// 1 <= a_1 <= ... <= a_m <= bound. Star Nim values are computed bottom-up in
/// order of increasing token sum over every reachable tuple (zeros included).
inline CensusReport census_star_nim(unsigned m, std::uint64_t bound, std::uint64_t node_budget = kDefaultNodeBudget) {
    if (m < 2) throw PreconditionError("census needs at least two strips");
    const std::uint64_t radix = bound + 1;
    std::uint64_t cells = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (cells > node_budget / radix) {
            throw ResourceLimit("census state space exceeds node budget of " + std::to_string(node_budget));
        }
        cells *= radix;
    }

    // Bucket the canonical tuples by token sum; every move lowers the sum.
    std::vector<std::vector<std::uint64_t>> by_sum(m * bound + 1);
    detail::for_each_star_nim_tuple(m, bound, [&](const std::vector<std::uint64_t>& t) {
        std::uint64_t sum = 0;
        for (auto v : t) sum += v;
        by_sum[sum].push_back(detail::cube_index(t, radix));
    });

    std::vector<Grundy> values(cells, 0);
    std::vector<std::uint64_t> tuple(m), moved(m);
    std::vector<Grundy> options;
    CensusReport report{m, bound, 0, 0};

    for (const auto& bucket : by_sum) {
        for (const auto index : bucket) {
            auto rest = index;
            for (unsigned i = m; i-- > 0;) {
                tuple[i] = rest % radix;
                rest /= radix;
            }
            const bool zero_taken = tuple[0] == 0;
            options.clear();
            for (unsigned i = 0; i < m; ++i) {
                if (i > 0 && tuple[i] == tuple[i - 1]) continue;  // same option set
                for (std::uint64_t to = zero_taken ? 1 : 0; to < tuple[i]; ++to) {
                    moved = tuple;
                    moved[i] = to;
                    // Re-sort by sliding the lowered entry left.
                    for (unsigned j = i; j > 0 && moved[j - 1] > moved[j]; --j) std::swap(moved[j - 1], moved[j]);
                    options.push_back(values[detail::cube_index(moved, radix)]);
                }
            }
            const Grundy g = mex(options);
            values[index] = g;

            if (tuple[0] >= 1) {
                std::uint64_t x = 0;
                for (auto v : tuple) x ^= v;
                if (x == 0) {
                    ++report.nim_p_count;
                    if (g == 0) ++report.star_p_count;
                }
            }
        }
    }
    return report;
}

}  // namespace stargrundy
