#pragma once

// Closed-form values and structure results for Nim, Silver Dollar,
// Star Silver Dollar (head/tail decomposition), Star Nim P-positions and the
// small rows and small values of 2-Star Nim.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stargrundy/error.hpp"
#include "stargrundy/oracle.hpp"
#include "stargrundy/position.hpp"

namespace stargrundy {

inline std::uint64_t sg_nim(std::span<const std::uint64_t> piles) { return nim_sum(piles); }

/// Silver Dollar on a single strip with square 0 available.
/// Even count: XOR of the gaps inside consecutive pairs (x2-x1-1, x4-x3-1, ...).
/// Odd count: x1 XOR the gaps of the pairs that follow it.
inline std::uint64_t sg_silver_dollar(const Strip& s) {
    const auto& x = s.tokens();
    std::uint64_t value = 0;
    std::size_t i = 0;
    if (x.size() % 2 == 1) {
        value = x[0];
        i = 1;
    }
    for (; i + 1 < x.size(); i += 2) value ^= x[i + 1] - x[i] - 1;
    return value;
}

struct HeadTailSplit {
    std::vector<Strip> heads;
    std::vector<Strip> tails;
};

/// Head: the lowest token (odd count) or the two lowest tokens (even count).
/// Tail: the remaining tokens, always an even number of them.
inline HeadTailSplit head_tail_split(const Position& p) {
    if (p.zero_occupied()) throw PreconditionError("head/tail split needs square 0 unoccupied");
    HeadTailSplit split;
    for (const auto& strip : p.strips()) {
        if (strip.empty()) throw PreconditionError("head/tail split needs every strip nonempty");
        const auto& t = strip.tokens();
        const std::size_t head = t.size() % 2 == 1 ? 1 : 2;
        split.heads.emplace_back(std::vector<Square>(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(head)));
        split.tails.emplace_back(std::vector<Square>(t.begin() + static_cast<std::ptrdiff_t>(head), t.end()));
    }
    return split;
}

enum class EvalRoute {
    silver_dollar,         // one nonempty strip
    zero_occupied,         // square 0 taken: sum of separate Silver Dollars
    decomposition_even,    // every strip even: sum of its strips
    decomposition_odd,     // every strip odd: Star Nim of heads (oracle) plus tails
    decomposition_mixed,   // mixed parity: head position (oracle) plus tails
    oracle,                // full game-graph search
};

inline const char* route_name(EvalRoute r) {
    switch (r) {
        case EvalRoute::silver_dollar: return "closed-form/silver-dollar";
        case EvalRoute::zero_occupied: return "closed-form/zero-occupied";
        case EvalRoute::decomposition_even: return "decomposition/all-even";
        case EvalRoute::decomposition_odd: return "decomposition/all-odd+oracle";
        case EvalRoute::decomposition_mixed: return "decomposition/mixed+oracle";
        case EvalRoute::oracle: return "oracle";
    }
    return "unknown";
}

struct Evaluation {
    std::uint64_t value = 0;
    EvalRoute route = EvalRoute::oracle;
};

/// Value of a strip that cannot use square 0: a Silver Dollar on squares 1, 2, ...
inline std::uint64_t sg_silver_dollar_above_zero(const Strip& s) {
    std::vector<Square> shifted;
    shifted.reserve(s.size());
    for (Square t : s.tokens()) shifted.push_back(t - 1);
    return sg_silver_dollar(Strip(std::move(shifted)));
}

/// Star Silver Dollar through the head/tail decomposition. Only the head
/// position (at most two tokens per strip) is searched, and only when the
/// strips do not all have even token counts.
inline Evaluation evaluate_star_silver_dollar(const Position& p, GrundyTable& table) {
    std::vector<Strip> strips;
    for (const auto& s : p.strips()) {
        if (!s.empty()) strips.push_back(s);
    }
    if (strips.empty()) return {0, EvalRoute::silver_dollar};
    if (strips.size() == 1) return {sg_silver_dollar(strips.front()), EvalRoute::silver_dollar};

    if (p.zero_occupied()) {
        std::uint64_t value = 0;
        for (const auto& s : strips) value ^= s.occupies_zero() ? sg_silver_dollar(s) : sg_silver_dollar_above_zero(s);
        return {value, EvalRoute::zero_occupied};
    }

    const HeadTailSplit split = head_tail_split(Position(strips));
    std::uint64_t tails = 0;
    for (const auto& t : split.tails) tails ^= sg_silver_dollar(t);

    const bool all_even = std::all_of(strips.begin(), strips.end(), [](const Strip& s) { return s.size() % 2 == 0; });
    const bool all_odd = std::all_of(strips.begin(), strips.end(), [](const Strip& s) { return s.size() % 2 == 1; });
    if (all_even) {
        std::uint64_t heads = 0;
        for (const auto& h : split.heads) heads ^= sg_silver_dollar(h);
        return {heads ^ tails, EvalRoute::decomposition_even};
    }
    const std::uint64_t heads = grundy(Position(split.heads), table);
    return {heads ^ tails, all_odd ? EvalRoute::decomposition_odd : EvalRoute::decomposition_mixed};
}

inline std::uint64_t sg_star_silver_dollar(const Position& p, GrundyTable& table) {
    return evaluate_star_silver_dollar(p, table).value;
}

enum class PVerdict { not_p_position, p_position, unknown };

inline PVerdict verdict(bool is_p) { return is_p ? PVerdict::p_position : PVerdict::not_p_position; }

/// Known P-position rules for m-Star Nim ([a_1], ..., [a_m]), entries sorted.
/// m = 2, m = 3, and m = 4 with a_1 <= 1 are decided; everything else is unknown.
inline PVerdict star_nim_p_rule(std::span<const std::uint64_t> entries) {
    if (!std::is_sorted(entries.begin(), entries.end())) throw PreconditionError("entries must be sorted");
    if (entries.size() >= 2 && entries[0] == 0 && entries[1] == 0) {
        throw InvariantError("square 0 is occupied in more than one strip");
    }
    switch (entries.size()) {
        case 2: {
            const auto a1 = entries[0], a2 = entries[1];
            return verdict(a1 + a2 == 1 || (a1 == a2 && a1 >= 2));
        }
        case 3: return verdict((entries[0] ^ entries[1] ^ entries[2]) == 0);
        case 4:
            if (entries[0] == 0) return verdict(((entries[1] - 1) ^ (entries[2] - 1) ^ (entries[3] - 1)) == 0);
            if (entries[0] == 1) return verdict((entries[1] ^ entries[2] ^ entries[3]) == 0);
            return PVerdict::unknown;
        default: return PVerdict::unknown;
    }
}

inline PVerdict star_nim_p_rule(std::initializer_list<std::uint64_t> entries) {
    return star_nim_p_rule(std::span<const std::uint64_t>(entries.begin(), entries.size()));
}

/// Membership of (a, b), a <= b, in the set of 2-Star Nim positions of value g <= 5.
inline bool small_g_set(unsigned g, std::uint64_t a, std::uint64_t b) {
    if (g > 5) throw PreconditionError("closed families are known only for g <= 5");
    if (a > b) throw PreconditionError("expected a <= b");
    using Pair = std::pair<std::uint64_t, std::uint64_t>;
    auto listed = [&](std::initializer_list<Pair> pairs) {
        return std::find(pairs.begin(), pairs.end(), Pair{a, b}) != pairs.end();
    };
    switch (g) {
        case 0: return listed({{0, 1}}) || (a == b && a >= 2);
        case 1: return listed({{0, 2}, {1, 1}}) || (a >= 3 && a % 2 == 1 && b == a + 1);
        case 2: return listed({{0, 3}, {1, 2}}) || (a >= 4 && a % 2 == 0 && b == a + 1);
        case 3:
            // (4k+2+i, 4k+4+i), k >= 1, i in {0, 1}
            return listed({{0, 4}, {1, 3}, {2, 5}}) || (a >= 6 && (a - 2) % 4 <= 1 && b == a + 2);
        case 4:
            // (4k+i, 4k+i+2), k >= 3, i in {0, 1}
            return listed({{0, 5}, {1, 4}, {2, 3}, {6, 9}, {7, 10}, {8, 11}}) ||
                   (a >= 12 && a % 4 <= 1 && b == a + 2);
        default:
            // (6k+i, 6k+i+3), k >= 2, i in {0, 1, 2}. The period in a is 6:
            // (16, 19) has value 10 and (18, 21) has value 5.
            return listed({{0, 6}, {1, 5}, {2, 4}, {3, 7}, {8, 10}, {9, 11}}) ||
                   (a >= 12 && a % 6 <= 2 && b == a + 3);
    }
}

/// G(a, b) of 2-Star Nim for the rows a = 0, 1, 2.
inline std::uint64_t row_formula_small_a(std::uint64_t a, std::uint64_t b) {
    if (a > 2 || b < a || (a == 0 && b == 0)) throw PreconditionError("needs a <= 2, a <= b and (a,b) != (0,0)");
    switch (a) {
        case 0: return b - 1;
        case 1: return b;
        default:
            if (b == 2) return 0;
            return b % 3 == 2 ? b - 2 : b + 1;
    }
}

}  // namespace stargrundy
