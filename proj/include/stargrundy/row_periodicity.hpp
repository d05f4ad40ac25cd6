#pragma once

// Additive periodicity of the rows of the 2-Star Nim table.
//
// With H(a, b) = G(a, b) - b + a, every value lies in [0, 2a - 1], so the row
// is additively periodic exactly when H(a, .) is periodic. H(a, b + 1) is
// produced by a finite machine whose state is, for every level l = 0..a,
//   SL[l]: bit i set iff b - l + i is NOT among G(l, b - j), 1 <= j <= 2l - 1
//   SD[l]: bit i set iff b - l + i is NOT among G(l - i', b), 1 <= i' <= l
// (2l bits each, bit i standing for the value b - l + i). H(l, b) is the lowest
// bit set in both. A repeated state certifies the period for every b beyond it.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stargrundy/error.hpp"
#include "stargrundy/gsequence.hpp"
#include "stargrundy/two_star_nim.hpp"

namespace stargrundy {

inline constexpr unsigned kMaxMachineRow = 32;  // 2a bits must fit in 64

/// G(a, b) - b + a for a >= 1 (any b >= 0; (a, b) and (b, a) are the same position).
inline std::int64_t h_value(std::uint64_t a, std::uint64_t b, TwoStarNimTable& table) {
    if (a == 0) return 1;  // boundary convention for the empty row
    return static_cast<std::int64_t>(table.value(a, b)) - static_cast<std::int64_t>(b) + static_cast<std::int64_t>(a);
}

struct RowMachineState {
    unsigned a = 0;
    std::uint64_t b = 0;
    std::vector<std::uint64_t> sl;  // index = level l = 0..a
    std::vector<std::uint64_t> sd;

    /// Equality of the machine part only; b is a counter, not state.
    bool same_machine(const RowMachineState& o) const { return a == o.a && sl == o.sl && sd == o.sd; }

    std::string key() const {
        std::string out;
        out.reserve((sl.size() + sd.size()) * 8);
        for (const auto* v : {&sl, &sd}) {
            for (auto w : *v) out.append(reinterpret_cast<const char*>(&w), sizeof w);
        }
        return out;
    }
};

namespace detail {

inline std::uint64_t width_mask(unsigned level) {
    const unsigned bits = 2 * level;
    return bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

inline std::int64_t lowest_common(std::uint64_t sl, std::uint64_t sd, unsigned level, std::uint64_t b) {
    const std::uint64_t both = sl & sd;
    if (both == 0) {
        throw MachineInconsistency("row machine: no admissible value at level " + std::to_string(level) + ", b = " +
                                   std::to_string(b));
    }
    return std::countr_zero(both);
}

// Clears the bit for value v in the window of `level` at column b, if inside.
inline void clear_value(std::uint64_t& bits, unsigned level, std::uint64_t b, std::int64_t v) {
    const std::int64_t i = v - (static_cast<std::int64_t>(b) - static_cast<std::int64_t>(level));
    if (i >= 0 && i < static_cast<std::int64_t>(2 * level)) bits &= ~(std::uint64_t{1} << i);
}

}  // namespace detail

/// H(l, b) for level l >= 1 read off the state.
inline std::int64_t machine_h(const RowMachineState& s, unsigned level) {
    return detail::lowest_common(s.sl[level], s.sd[level], level, s.b);
}

/// Machine at column b seeded from table values (b >= 2a - 1 keeps every
/// remembered column b - j nonnegative).
inline RowMachineState row_machine_seed(unsigned a, std::uint64_t b, TwoStarNimTable& table) {
    if (a < 1 || a > kMaxMachineRow) throw PreconditionError("row machine supports 1 <= a <= 32");
    if (b + 1 < 2 * static_cast<std::uint64_t>(a)) throw PreconditionError("row machine needs b >= 2a - 1");
    RowMachineState s{a, b, std::vector<std::uint64_t>(a + 1, 0), std::vector<std::uint64_t>(a + 1, 0)};
    for (unsigned l = 1; l <= a; ++l) {
        s.sl[l] = s.sd[l] = detail::width_mask(l);
        for (std::uint64_t j = 1; j + 1 <= 2 * static_cast<std::uint64_t>(l); ++j) {
            detail::clear_value(s.sl[l], l, b, table.value(l, b - j));
        }
        for (unsigned i = 1; i <= l; ++i) {
            detail::clear_value(s.sd[l], l, b, table.value(l - i, b));
        }
    }
    return s;
}

struct RowMachineStep {
    std::int64_t h = 0;  // H(a, b + 1)
    RowMachineState next;
};

/// Advances column b -> b + 1.
///  SL[l]: window slides up by one (drop bit 0, shift in a set top bit), then the
///         bit of G(l, b) is cleared.
///  SD[l]: rebuilt bottom-up; level l's window is level (l-1)'s widened by one
///         value on each side, then the bit of G(l-1, b+1) is cleared. Level 0
///         contributes G(0, b+1) = b.
inline RowMachineStep row_machine_step(const RowMachineState& s) {
    RowMachineState n{s.a, s.b + 1, std::vector<std::uint64_t>(s.a + 1, 0), std::vector<std::uint64_t>(s.a + 1, 0)};
    for (unsigned l = 1; l <= s.a; ++l) {
        const std::int64_t g_old = machine_h(s, l) + static_cast<std::int64_t>(s.b) - l;
        n.sl[l] = (s.sl[l] >> 1) | (std::uint64_t{1} << (2 * l - 1));
        detail::clear_value(n.sl[l], l, n.b, g_old);
    }
    std::int64_t g_below = static_cast<std::int64_t>(n.b) - 1;  // G(0, b+1)
    std::uint64_t sd_below = 0;
    for (unsigned l = 1; l <= s.a; ++l) {
        n.sd[l] = ((sd_below << 1) | 1 | (std::uint64_t{1} << (2 * l - 1))) & detail::width_mask(l);
        detail::clear_value(n.sd[l], l, n.b, g_below);
        g_below = machine_h(n, l) + static_cast<std::int64_t>(n.b) - l;
        sd_below = n.sd[l];
    }
    const std::int64_t h = machine_h(n, s.a);
    return {h, std::move(n)};
}

struct AdditivePeriodCertificate {
    unsigned a = 0;
    std::uint64_t preperiod = 0;  // G(a, b + p) == G(a, b) + p for all b >= preperiod
    std::uint64_t period = 0;     // minimal
    std::vector<std::int64_t> block;  // H(a, preperiod) .. H(a, preperiod + period - 1)
    std::pair<std::uint64_t, std::uint64_t> evidence{0, 0};  // columns with identical machine state
    bool certified = true;
};

/// Seeds the machine at b = 2a - 1 and steps until a state recurs.
inline AdditivePeriodCertificate certify_row_period(unsigned a, TwoStarNimTable& table,
                                                    std::uint64_t step_budget = kDefaultStepBudget) {
    const std::uint64_t b0 = 2 * static_cast<std::uint64_t>(a) - 1;
    RowMachineState state = row_machine_seed(a, b0, table);

    std::vector<std::int64_t> h;  // H(a, b) for b = 0, 1, ...
    for (std::uint64_t b = 0; b <= b0; ++b) h.push_back(h_value(a, b, table));
    if (machine_h(state, a) != h.back()) throw MachineInconsistency("seeded machine disagrees with the table");

    std::unordered_map<std::string, std::uint64_t> seen;
    seen.emplace(state.key(), b0);
    for (std::uint64_t steps = 1;; ++steps) {
        if (steps > step_budget) {
            throw BudgetExceeded("row " + std::to_string(a) + ": no recurrence within " + std::to_string(step_budget) +
                                     " steps",
                                 h);
        }
        auto step = row_machine_step(state);
        state = std::move(step.next);
        h.push_back(step.h);
        const auto [it, inserted] = seen.emplace(state.key(), state.b);
        if (inserted) continue;

        AdditivePeriodCertificate cert;
        cert.a = a;
        cert.evidence = {it->second, state.b};
        // h holds columns 0..b2; the recurrence gives period b2 - b1 from b1 on.
        h.pop_back();
        const auto [n0, p] = detail::minimize_period(h, it->second, state.b - it->second);
        cert.preperiod = n0;
        cert.period = p;
        cert.block.assign(h.begin() + static_cast<std::ptrdiff_t>(n0), h.begin() + static_cast<std::ptrdiff_t>(n0 + p));
        return cert;
    }
}

/// The unique b with G(a, b) = g. It satisfies |b - a| <= g except when one
/// entry is 0: G(0, b) = b - 1, so the pair (0, g + 1) sits one outside.
inline std::uint64_t find_b(std::uint64_t a, std::uint64_t g, TwoStarNimTable& table) {
    const std::uint64_t lo = a == g + 1 ? 0 : (a > g ? a - g : 0);
    const std::uint64_t hi = a == 0 ? g + 1 : a + g;
    std::uint64_t found = 0, hits = 0;
    for (std::uint64_t b = lo; b <= hi; ++b) {
        if (a == 0 && b == 0) continue;
        if (table.value(a, b) == g) {
            found = b;
            ++hits;
        }
    }
    if (hits == 0) throw NotFound("no b with G(" + std::to_string(a) + ", b) = " + std::to_string(g));
    if (hits > 1) throw NotUnique("several b with G(" + std::to_string(a) + ", b) = " + std::to_string(g));
    return found;
}

/// Heuristic period of the diagonal G(a + i, b + i), i < horizon. Not a
/// certificate: there is no finite machine behind it.
struct DiagonalReport {
    std::uint64_t a = 0, b = 0, horizon = 0;
    std::vector<std::int64_t> values;
    bool found = false;
    std::uint64_t preperiod = 0;
    std::uint64_t period = 0;
    std::vector<std::int64_t> block;
    bool certified = false;
};

/// For each p, the least n0 with values[n] == values[n + p] on [n0, horizon - p).
/// A candidate must show at least two full periods; among those the shortest
/// description n0 + p wins (ties to the smaller p). A short period that only
/// matches the last few values loses to a long one that explains most of the run.
inline DiagonalReport find_eventual_period(std::vector<std::int64_t> values) {
    DiagonalReport r;
    const std::uint64_t h = values.size();
    for (std::uint64_t p = 1; 2 * p <= h; ++p) {
        std::uint64_t n0 = h - p;
        while (n0 > 0 && values[n0 - 1] == values[n0 - 1 + p]) --n0;
        if (h - n0 < 2 * p) continue;
        if (!r.found || n0 + p < r.preperiod + r.period) {
            r.found = true;
            r.preperiod = n0;
            r.period = p;
        }
    }
    if (r.found) {
        r.block.assign(values.begin() + static_cast<std::ptrdiff_t>(r.preperiod),
                       values.begin() + static_cast<std::ptrdiff_t>(r.preperiod + r.period));
    }
    r.values = std::move(values);
    return r;
}

inline DiagonalReport explore_diagonal(std::uint64_t a, std::uint64_t b, std::uint64_t horizon, TwoStarNimTable& table) {
    if (a > b) throw PreconditionError("expected a <= b");
    if (horizon < 1) throw PreconditionError("horizon must be positive");
    table.reserve(a + horizon, b + horizon);
    std::vector<std::int64_t> values;
    values.reserve(horizon);
    for (std::uint64_t i = 0; i < horizon; ++i) values.push_back(table.value(a + i, b + i));
    DiagonalReport r = find_eventual_period(std::move(values));
    r.a = a;
    r.b = b;
    r.horizon = horizon;
    return r;
}

}  // namespace stargrundy
