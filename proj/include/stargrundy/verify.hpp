#pragma once

// Property sweeps behind `verify`. Each check compares a closed form, an
// algorithm or a certificate against exhaustive oracle evaluation over a fixed
// window and reports the first counterexample it finds.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stargrundy/closed_forms.hpp"
#include "stargrundy/gsequence.hpp"
#include "stargrundy/oracle.hpp"
#include "stargrundy/position.hpp"
#include "stargrundy/row_periodicity.hpp"
#include "stargrundy/two_star_nim.hpp"

namespace stargrundy {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;
    std::string detail;  // counterexample on failure
    double seconds = 0;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"decomposition", "p-rules", "small-g", "bounds", "sequences", "rows"};
    return names;
}

namespace detail {

// Counts cases and keeps the first failure.
class Tally {
public:
    template <typename Describe>
    void expect(bool ok, Describe&& describe) {
        ++cases_;
        if (!ok && detail_.empty()) detail_ = describe();
        failed_ = failed_ || !ok;
    }
    bool failed() const noexcept { return failed_; }
    CheckResult finish(std::string suite, std::string name) {
        return {std::move(suite), std::move(name), !failed_, cases_, std::move(detail_), 0};
    }

private:
    std::uint64_t cases_ = 0;
    bool failed_ = false;
    std::string detail_;
};

// Every strip over squares [lo, hi] with between 1 and max_tokens tokens.
inline std::vector<Strip> all_strips(Square lo, Square hi, std::size_t max_tokens) {
    std::vector<Strip> out;
    std::vector<Square> cur;
    std::function<void(Square)> rec = [&](Square from) {
        if (!cur.empty()) out.emplace_back(cur);
        if (cur.size() == max_tokens) return;
        for (Square s = from; s <= hi; ++s) {
            cur.push_back(s);
            rec(s + 1);
            cur.pop_back();
        }
    };
    rec(lo);
    return out;
}

// Multisets of 1..max_strips strips from `pool`, given as index lists.
template <typename Visitor>
void for_each_strip_multiset(std::size_t pool, std::size_t max_strips, Visitor&& visit) {
    std::vector<std::size_t> idx;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (!idx.empty()) visit(idx);
        if (idx.size() == max_strips) return;
        for (std::size_t i = from; i < pool; ++i) {
            idx.push_back(i);
            rec(i);
            idx.pop_back();
        }
    };
    rec(0);
}

inline Position star_nim(std::initializer_list<std::uint64_t> entries) {
    std::vector<Strip> strips;
    for (auto a : entries) strips.emplace_back(std::vector<Square>{a});
    return Position(std::move(strips));
}

inline Position star_nim(const std::vector<std::uint64_t>& entries) {
    std::vector<Strip> strips;
    for (auto a : entries) strips.emplace_back(std::vector<Square>{a});
    return Position(std::move(strips));
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

inline std::string pair_text(std::uint64_t a, std::uint64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Pairs (a, b), a <= b, of value g with a <= x_max, by scanning the table.
inline std::vector<std::pair<SeqValue, SeqValue>> table_pairs(unsigned g, std::uint64_t x_max, TwoStarNimTable& t) {
    std::vector<std::pair<SeqValue, SeqValue>> out;
    const std::uint64_t b_max = x_max + 4 * (g + 2);
    t.reserve(x_max, b_max);
    for (std::uint64_t a = 0; a <= x_max; ++a) {
        for (std::uint64_t b = a; b <= b_max; ++b) {
            if ((a != 0 || b != 0) && t.value(a, b) == g) out.emplace_back(a, b);
        }
    }
    return out;
}

}  // namespace detail

/// Shared state for one run of the suites.
struct VerifyContext {
    GrundyTable oracle;
    TwoStarNimTable two_star;
    std::uint64_t step_budget = kDefaultStepBudget;

    explicit VerifyContext(std::uint64_t node_budget = kDefaultNodeBudget, std::uint64_t steps = kDefaultStepBudget)
        : oracle(node_budget), two_star(node_budget), step_budget(steps) {}
};

// ---------------------------------------------------------------------------
// decomposition: the oracle itself, Silver Dollar, zero-occupied sums and the
// head/tail theorem.

inline CheckResult check_mex_characterization(VerifyContext& ctx) {
    detail::Tally t;
    const auto strips = detail::all_strips(0, 6, 2);
    detail::for_each_strip_multiset(strips.size(), 2, [&](const std::vector<std::size_t>& idx) {
        std::vector<Strip> chosen;
        std::size_t zeros = 0;
        for (auto i : idx) {
            chosen.push_back(strips[i]);
            zeros += strips[i].occupies_zero() ? 1 : 0;
        }
        if (zeros > 1) return;
        const Position p(std::move(chosen));
        const Grundy g = grundy(p, ctx.oracle);
        std::vector<bool> reach(g, false);
        bool same = false;
        for_each_legal_move(p, [&](const Move& m) {
            const Grundy c = grundy(apply_move_unchecked(p, m), ctx.oracle);
            if (c == g) same = true;
            if (c < g) reach[c] = true;
        });
        const bool all_lower = std::all_of(reach.begin(), reach.end(), [](bool b) { return b; });
        t.expect(!same && all_lower, [&] { return format_position(p) + " violates the mex characterization"; });
    });
    return t.finish("decomposition", "oracle: no move within a value class, every lower class reachable");
}

inline CheckResult check_oracle_determinism(VerifyContext& ctx) {
    detail::Tally t;
    GrundyTable fresh;
    const auto strips = detail::all_strips(1, 6, 2);
    detail::for_each_strip_multiset(strips.size(), 2, [&](const std::vector<std::size_t>& idx) {
        std::vector<Strip> chosen;
        for (auto i : idx) chosen.push_back(strips[i]);
        std::vector<Strip> reversed(chosen.rbegin(), chosen.rend());
        const Position p(chosen), q(reversed);
        const Grundy a = grundy(p, ctx.oracle);
        const Grundy b = grundy(q, fresh);
        t.expect(a == b, [&] { return format_position(p) + ": " + std::to_string(a) + " vs " + std::to_string(b); });
    });
    return t.finish("decomposition", "oracle: fresh table and strip order give identical values");
}

inline CheckResult check_silver_dollar(VerifyContext& ctx) {
    detail::Tally t;
    for (const Strip& s : detail::all_strips(0, 10, 4)) {
        const Position p({s});
        const auto closed = sg_silver_dollar(s);
        const auto oracle = grundy(p, ctx.oracle);
        t.expect(closed == oracle, [&] {
            return format_position(p) + ": closed form " + std::to_string(closed) + ", oracle " + std::to_string(oracle);
        });
    }
    return t.finish("decomposition", "Silver Dollar closed form, squares <= 10, <= 4 tokens");
}

inline CheckResult check_zero_occupied(VerifyContext& ctx) {
    detail::Tally t;
    const auto with_zero = detail::all_strips(0, 8, 3);
    const auto without = detail::all_strips(1, 8, 3);
    for (const Strip& z : with_zero) {
        if (!z.occupies_zero()) continue;
        for (std::size_t i = 0; i < without.size(); ++i) {
            for (std::size_t j = i; j < without.size(); ++j) {
                const Position p({z, without[i], without[j]});
                const auto sum = sg_silver_dollar(z) ^ sg_silver_dollar_above_zero(without[i]) ^
                                 sg_silver_dollar_above_zero(without[j]);
                const auto oracle = grundy(p, ctx.oracle);
                t.expect(sum == oracle, [&] {
                    return format_position(p) + ": sum " + std::to_string(sum) + ", oracle " + std::to_string(oracle);
                });
            }
        }
    }
    return t.finish("decomposition", "square 0 occupied: sum of separate strips, 3 strips, squares <= 8");
}

inline CheckResult check_head_tail(VerifyContext& ctx) {
    detail::Tally t;
    const auto strips = detail::all_strips(1, 8, 3);
    detail::for_each_strip_multiset(strips.size(), 3, [&](const std::vector<std::size_t>& idx) {
        std::vector<Strip> chosen;
        for (auto i : idx) chosen.push_back(strips[i]);
        const Position p(std::move(chosen));
        const auto via = evaluate_star_silver_dollar(p, ctx.oracle);
        const auto oracle = grundy(p, ctx.oracle);
        t.expect(via.value == oracle, [&] {
            return format_position(p) + ": " + route_name(via.route) + " gives " + std::to_string(via.value) +
                   ", oracle " + std::to_string(oracle);
        });
    });
    return t.finish("decomposition", "head/tail decomposition, <= 3 strips, <= 3 tokens, squares 1..8");
}

inline CheckResult check_all_even(VerifyContext& ctx) {
    detail::Tally t;
    std::vector<Strip> pairs;
    for (const Strip& s : detail::all_strips(1, 8, 2)) {
        if (s.size() == 2) pairs.push_back(s);
    }
    detail::for_each_strip_multiset(pairs.size(), 3, [&](const std::vector<std::size_t>& idx) {
        std::vector<Strip> chosen;
        std::uint64_t sum = 0;
        for (auto i : idx) {
            chosen.push_back(pairs[i]);
            sum ^= sg_silver_dollar(pairs[i]);
        }
        const Position p(std::move(chosen));
        const auto oracle = grundy(p, ctx.oracle);
        t.expect(sum == oracle, [&] {
            return format_position(p) + ": strip sum " + std::to_string(sum) + ", oracle " + std::to_string(oracle);
        });
    });
    return t.finish("decomposition", "even strips: sum of the strips, squares 1..8");
}

// ---------------------------------------------------------------------------
// p-rules

inline CheckResult check_p_rule(VerifyContext& ctx, unsigned m, std::uint64_t max_entry, bool zero_first,
                                bool one_first) {
    detail::Tally t;
    std::vector<std::uint64_t> e(m, 0);
    std::function<void(unsigned, std::uint64_t)> rec = [&](unsigned i, std::uint64_t from) {
        if (i == m) {
            if (m >= 2 && e[0] == 0 && e[1] == 0) return;
            if (zero_first && e[0] != 0) return;
            if (one_first && e[0] != 1) return;
            const PVerdict rule = star_nim_p_rule(std::span<const std::uint64_t>(e));
            const bool oracle = is_p_position(detail::star_nim(e), ctx.oracle);
            t.expect(rule != PVerdict::unknown && (rule == PVerdict::p_position) == oracle, [&] {
                return "(" + detail::join(e) + "): rule " +
                       (rule == PVerdict::unknown ? "unknown" : rule == PVerdict::p_position ? "P" : "N") +
                       ", oracle " + (oracle ? "P" : "N");
            });
            return;
        }
        for (std::uint64_t v = from; v <= max_entry; ++v) {
            e[i] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 0);
    std::string name = std::to_string(m) + " strips, entries <= " + std::to_string(max_entry);
    if (zero_first) name += ", a1 = 0";
    if (one_first) name += ", a1 = 1";
    return t.finish("p-rules", "P-position rule: " + name);
}

inline CheckResult check_p_rule_unknown(VerifyContext&) {
    detail::Tally t;
    for (auto e : {std::vector<std::uint64_t>{2, 2, 3, 3}, {2, 3, 4, 5}, {1, 1, 1, 1, 1}}) {
        t.expect(star_nim_p_rule(std::span<const std::uint64_t>(e)) == PVerdict::unknown,
                 [&] { return "(" + detail::join(e) + ") should have no rule"; });
    }
    return t.finish("p-rules", "no rule claimed outside the decided domains");
}

// ---------------------------------------------------------------------------
// small-g

inline CheckResult check_two_star_table(VerifyContext& ctx) {
    detail::Tally t;
    for (std::uint64_t a = 0; a <= 30; ++a) {
        for (std::uint64_t b = a; b <= 30; ++b) {
            if (a == 0 && b == 0) continue;
            const auto dense = ctx.two_star.value(a, b);
            const auto oracle = grundy(detail::star_nim({a, b}), ctx.oracle);
            t.expect(dense == oracle, [&] {
                return "G" + detail::pair_text(a, b) + ": table " + std::to_string(dense) + ", oracle " +
                       std::to_string(oracle);
            });
        }
    }
    return t.finish("small-g", "dense 2-strip table agrees with the oracle, a <= b <= 30");
}

inline CheckResult check_small_g(VerifyContext& ctx) {
    detail::Tally t;
    ctx.two_star.reserve(60, 60);
    for (unsigned g = 0; g <= 5; ++g) {
        for (std::uint64_t a = 0; a <= 60; ++a) {
            for (std::uint64_t b = a; b <= 60; ++b) {
                if (a == 0 && b == 0) continue;
                const bool family = small_g_set(g, a, b);
                const bool oracle = ctx.two_star.value(a, b) == g;
                t.expect(family == oracle, [&] {
                    return "g=" + std::to_string(g) + " " + detail::pair_text(a, b) + ": family says " +
                           (family ? "in" : "out") + ", G = " + std::to_string(ctx.two_star.value(a, b));
                });
            }
        }
    }
    return t.finish("small-g", "families G_0..G_5 equal the value classes, a <= b <= 60");
}

inline CheckResult check_row_formula(VerifyContext& ctx) {
    detail::Tally t;
    ctx.two_star.reserve(2, 200);
    for (std::uint64_t a = 0; a <= 2; ++a) {
        for (std::uint64_t b = std::max<std::uint64_t>(a, a == 0 ? 1 : 0); b <= 200; ++b) {
            const auto formula = row_formula_small_a(a, b);
            const auto table = ctx.two_star.value(a, b);
            t.expect(formula == table, [&] {
                return "G" + detail::pair_text(a, b) + ": formula " + std::to_string(formula) + ", table " +
                       std::to_string(table);
            });
        }
    }
    return t.finish("small-g", "rows a <= 2 formula, b <= 200");
}

// ---------------------------------------------------------------------------
// bounds

inline CheckResult check_bounds(VerifyContext& ctx) {
    detail::Tally t;
    ctx.two_star.reserve(80, 80);
    for (std::uint64_t a = 1; a <= 80; ++a) {
        for (std::uint64_t b = a; b <= 80; ++b) {
            const auto g = ctx.two_star.value(a, b);
            t.expect(b - a <= g && g <= a + b - 1, [&] {
                return "G" + detail::pair_text(a, b) + " = " + std::to_string(g) + " outside [b-a, a+b-1]";
            });
        }
    }
    return t.finish("bounds", "b - a <= G(a,b) <= a + b - 1 for 1 <= a <= b <= 80");
}

inline CheckResult check_unique_b(VerifyContext& ctx) {
    detail::Tally t;
    ctx.two_star.reserve(40, 200);
    for (std::uint64_t a = 0; a <= 40; ++a) {
        for (std::uint64_t g = 0; g <= 40; ++g) {
            // Count over a much wider range than the claimed window.
            std::vector<std::uint64_t> hits;
            for (std::uint64_t b = 0; b <= 200; ++b) {
                if ((a != 0 || b != 0) && ctx.two_star.value(a, b) == g) hits.push_back(b);
            }
            const std::uint64_t reach = (a == 0 || (hits.size() == 1 && hits[0] == 0)) ? g + 1 : g;
            const bool ok = hits.size() == 1 && (hits[0] > a ? hits[0] - a : a - hits[0]) <= reach;
            t.expect(ok, [&] {
                return "a=" + std::to_string(a) + ", g=" + std::to_string(g) + ": b in {" + detail::join(hits) + "}";
            });
        }
    }
    return t.finish("bounds", "exactly one b with G(a,b) = g, |b - a| <= g (g + 1 when an entry is 0), a, g <= 40");
}

inline CheckResult check_find_b(VerifyContext& ctx) {
    detail::Tally t;
    for (std::uint64_t a = 0; a <= 40; ++a) {
        for (std::uint64_t g = 0; g <= 40; ++g) {
            std::uint64_t b = 0;
            try {
                b = find_b(a, g, ctx.two_star);
            } catch (const Error& e) {
                t.expect(false, [&] { return std::string(e.what()); });
                continue;
            }
            t.expect(ctx.two_star.value(a, b) == g,
                     [&] { return "find_b(" + std::to_string(a) + "," + std::to_string(g) + ") = " + std::to_string(b); });
        }
        for (std::uint64_t b = 0; b <= 40; ++b) {
            if (a == 0 && b == 0) continue;
            const auto g = ctx.two_star.value(a, b);
            t.expect(find_b(a, g, ctx.two_star) == b, [&] { return "find_b does not invert G" + detail::pair_text(a, b); });
        }
    }
    return t.finish("bounds", "find_b is a partial inverse of G, a <= 40");
}

// ---------------------------------------------------------------------------
// sequences

inline CheckResult check_alg1_alg2(VerifyContext& ctx) {
    detail::Tally t;
    for (unsigned g = 0; g <= 8; ++g) {
        const auto one = gseq_alg1(g, 500, ctx.step_budget);
        const auto two = gseq_alg2(g, 500);
        for (std::size_t n = 0; n <= 500; ++n) {
            t.expect(one[n] == two[n], [&] {
                return "g=" + std::to_string(g) + " n=" + std::to_string(n) + ": reference " +
                       detail::pair_text(one[n].x, one[n].y) + ", windowed " + detail::pair_text(two[n].x, two[n].y);
            });
        }
    }
    return t.finish("sequences", "reference and windowed constructions agree, g <= 8, n <= 500");
}

inline CheckResult check_gseq_oracle(VerifyContext& ctx) {
    detail::Tally t;
    for (unsigned g = 0; g <= 8; ++g) {
        const auto seq = gseq_alg2(g, 200);
        const auto expected = detail::table_pairs(g, static_cast<std::uint64_t>(seq.back().x), ctx.two_star);
        t.expect(expected.size() == seq.size(), [&] {
            return "g=" + std::to_string(g) + ": " + std::to_string(expected.size()) + " pairs in the table, " +
                   std::to_string(seq.size()) + " in the sequence";
        });
        for (std::size_t n = 0; n < std::min(expected.size(), seq.size()); ++n) {
            t.expect(expected[n] == std::pair{seq[n].x, seq[n].y}, [&] {
                return "g=" + std::to_string(g) + " n=" + std::to_string(n) + ": table " +
                       detail::pair_text(expected[n].first, expected[n].second) + ", sequence " +
                       detail::pair_text(seq[n].x, seq[n].y);
            });
        }
    }
    return t.finish("sequences", "sequence equals the value class from the table, g <= 8, n <= 200");
}

inline CheckResult check_entry_bounds(VerifyContext&) {
    detail::Tally t;
    for (unsigned g = 1; g <= 8; ++g) {
        const auto seq = gseq_alg2(g, 500);
        std::set<SeqValue> covered;
        for (const auto& e : seq) {
            const auto n = static_cast<SeqValue>(e.n);
            const auto gv = static_cast<SeqValue>(g);
            // Row 0 has G(0, b) = b - 1, so the first pair is exactly (0, g + 1).
            const bool head = e.x == 0 ? e.y == gv + 1
                                       : e.diff() <= gv && e.y <= n + (e.x + 1) * gv;
            const bool ok = e.x <= e.y && head && n <= e.x && e.x <= 2 * n &&
                            (e.n == 0 || e.x - seq[e.n - 1].x <= gv + 2) &&
                            (e.n == 0 || e.x > seq[e.n - 1].x);
            t.expect(ok, [&] {
                return "g=" + std::to_string(g) + " n=" + std::to_string(e.n) + " " + detail::pair_text(e.x, e.y);
            });
            covered.insert(e.x);
            covered.insert(e.y);
        }
        // Every value below the last first entry is used.
        for (SeqValue v = 0; v < seq.back().x; ++v) {
            t.expect(covered.contains(v), [&] { return "g=" + std::to_string(g) + ": " + std::to_string(v) + " skipped"; });
        }
    }
    return t.finish("sequences", "per-entry bounds, gap x_n - x_(n-1) <= g + 2, coverage, g <= 8, n <= 500");
}

inline CheckResult check_normalized_stream(VerifyContext&) {
    detail::Tally t;
    for (unsigned g = 0; g <= 8; ++g) {
        const auto seq = gseq_alg2(g, 500);
        t.expect(gseq_alg3(g, 500) == seq, [&] { return "g=" + std::to_string(g) + ": shifted replay differs"; });
        auto first = gseq_alg3_initial(g);
        SeqValue d = first.diff;
        NormalizedState state = std::move(first.next);
        const auto cap = 3 * static_cast<SeqValue>(g) + 4;
        const auto store = (g * g + 5 * g + 4) / 2;
        for (std::size_t n = 0; n <= 500; ++n) {
            if (n > 0) {
                auto step = gseq_alg3_step(state);
                d = step.diff;
                state = std::move(step.next);
            }
            const auto [lo, hi] = state.state().value_range();
            t.expect(d == seq[n].diff() && lo == 0 && hi <= cap && state.state().stored_values() <= store, [&] {
                return "g=" + std::to_string(g) + " n=" + std::to_string(n) + ": diff " + std::to_string(d) + " vs " +
                       std::to_string(seq[n].diff()) + ", range [" + std::to_string(lo) + "," + std::to_string(hi) +
                       "], stored " + std::to_string(state.state().stored_values());
            });
        }
    }
    return t.finish("sequences", "normalized machine: same diffs, values in [0, 3g+4], bounded store, g <= 8");
}

inline CheckResult check_diff_certificates(VerifyContext& ctx) {
    detail::Tally t;
    const SeqValue eventual[] = {0, 1, 1, 2, 2, 3};
    for (unsigned g = 0; g <= 5; ++g) {
        const auto cert = certify_diff_period(g, ctx.step_budget);
        t.expect(cert.period == 1 && cert.block == std::vector<SeqValue>{eventual[g]}, [&] {
            return "g=" + std::to_string(g) + ": period " + std::to_string(cert.period) + ", block " +
                   detail::join(cert.block);
        });
    }
    const auto six = certify_diff_period(6, ctx.step_budget);
    t.expect(six.period == 12 && six.preperiod <= 5 &&
                 six.block == std::vector<SeqValue>{3, 3, 4, 3, 3, 4, 3, 3, 4, 4, 4, 4},
             [&] {
                 return "g=6: n0 " + std::to_string(six.preperiod) + ", period " + std::to_string(six.period) +
                        ", block " + detail::join(six.block);
             });
    // The certified period must hold on a long independent run.
    for (unsigned g = 0; g <= 8; ++g) {
        const auto cert = certify_diff_period(g, ctx.step_budget);
        const auto n_max = cert.preperiod + 4 * cert.period + 50;
        const auto seq = gseq_alg2(g, n_max);
        for (std::size_t n = cert.preperiod; n + cert.period <= n_max; ++n) {
            t.expect(seq[n + cert.period].diff() == seq[n].diff(), [&] {
                return "g=" + std::to_string(g) + ": diff(" + std::to_string(n) + ") breaks period " +
                       std::to_string(cert.period);
            });
        }
    }
    return t.finish("sequences", "difference periods: constant for g <= 5, 12 for g = 6, all hold on replay");
}

// ---------------------------------------------------------------------------
// rows

inline CheckResult check_row_machine(VerifyContext& ctx) {
    detail::Tally t;
    ctx.two_star.reserve(6, 510);
    for (unsigned a = 1; a <= 6; ++a) {
        RowMachineState s = row_machine_seed(a, 2 * a - 1, ctx.two_star);
        while (s.b < 500) {
            auto step = row_machine_step(s);
            s = std::move(step.next);
            const auto g = step.h + static_cast<std::int64_t>(s.b) - a;
            const auto table = static_cast<std::int64_t>(ctx.two_star.value(a, s.b));
            t.expect(g == table, [&] {
                return "G" + detail::pair_text(a, s.b) + ": machine " + std::to_string(g) + ", table " +
                       std::to_string(table);
            });
        }
    }
    return t.finish("rows", "row machine reproduces G(a,b), a <= 6, b <= 500");
}

inline CheckResult check_h_bounds(VerifyContext& ctx) {
    detail::Tally t;
    ctx.two_star.reserve(20, 500);
    for (std::uint64_t a = 1; a <= 20; ++a) {
        for (std::uint64_t b = 0; b <= 500; ++b) {
            const auto h = h_value(a, b, ctx.two_star);
            t.expect(0 <= h && h <= static_cast<std::int64_t>(2 * a - 1),
                     [&] { return "H" + detail::pair_text(a, b) + " = " + std::to_string(h); });
        }
    }
    return t.finish("rows", "0 <= H(a,b) <= 2a - 1 for a <= 20, b <= 500");
}

inline CheckResult check_symmetry(VerifyContext& ctx) {
    detail::Tally t;
    ctx.two_star.reserve(60, 60);
    for (std::uint64_t a = 0; a <= 60; ++a) {
        for (std::uint64_t b = 0; b <= 60; ++b) {
            if (a == 0 && b == 0) continue;
            t.expect(ctx.two_star.stored(a, b) == ctx.two_star.stored(b, a),
                     [&] { return "G" + detail::pair_text(a, b) + " != G" + detail::pair_text(b, a); });
        }
    }
    return t.finish("rows", "G(a,b) = G(b,a), a, b <= 60");
}

inline CheckResult check_row_certificates(VerifyContext& ctx) {
    detail::Tally t;
    const std::uint64_t expected[] = {1, 3, 9, 36, 144, 720};
    for (unsigned a = 1; a <= 6; ++a) {
        const auto cert = certify_row_period(a, ctx.two_star, ctx.step_budget);
        t.expect(cert.period == expected[a - 1], [&] {
            return "a=" + std::to_string(a) + ": minimal period " + std::to_string(cert.period);
        });
        const std::uint64_t end = cert.preperiod + 3 * cert.period;
        ctx.two_star.reserve(a, end + cert.period);
        for (std::uint64_t b = cert.preperiod; b <= end; ++b) {
            const auto lhs = ctx.two_star.value(a, b + cert.period);
            const auto rhs = ctx.two_star.value(a, b) + cert.period;
            t.expect(lhs == rhs, [&] {
                return "a=" + std::to_string(a) + ": G" + detail::pair_text(a, b + cert.period) + " = " +
                       std::to_string(lhs) + " but G" + detail::pair_text(a, b) + " + p = " + std::to_string(rhs);
            });
        }
    }
    return t.finish("rows", "certified additive periods 1, 3, 9, 36, 144, 720 hold over 3 cycles");
}

// ---------------------------------------------------------------------------

inline std::vector<std::pair<std::string, std::function<CheckResult(VerifyContext&)>>> registered_checks() {
    using F = std::function<CheckResult(VerifyContext&)>;
    return {
        {"decomposition", check_mex_characterization},
        {"decomposition", check_oracle_determinism},
        {"decomposition", check_silver_dollar},
        {"decomposition", check_zero_occupied},
        {"decomposition", check_head_tail},
        {"decomposition", check_all_even},
        {"p-rules", F([](VerifyContext& c) { return check_p_rule(c, 2, 30, false, false); })},
        {"p-rules", F([](VerifyContext& c) { return check_p_rule(c, 3, 30, false, false); })},
        {"p-rules", F([](VerifyContext& c) { return check_p_rule(c, 4, 20, true, false); })},
        {"p-rules", F([](VerifyContext& c) { return check_p_rule(c, 4, 20, false, true); })},
        {"p-rules", check_p_rule_unknown},
        {"small-g", check_two_star_table},
        {"small-g", check_small_g},
        {"small-g", check_row_formula},
        {"bounds", check_bounds},
        {"bounds", check_unique_b},
        {"bounds", check_find_b},
        {"sequences", check_alg1_alg2},
        {"sequences", check_gseq_oracle},
        {"sequences", check_entry_bounds},
        {"sequences", check_normalized_stream},
        {"sequences", check_diff_certificates},
        {"rows", check_row_machine},
        {"rows", check_h_bounds},
        {"rows", check_symmetry},
        {"rows", check_row_certificates},
    };
}

/// Runs one suite, or every suite for "all". Unknown names are a precondition error.
/// `on_result` sees each result as soon as it is ready.
inline std::vector<CheckResult> run_suite(std::string_view suite, VerifyContext& ctx,
                                          const std::function<void(const CheckResult&)>& on_result = {}) {
    if (suite != "all" && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
        throw PreconditionError("unknown suite '" + std::string(suite) + "'");
    }
    std::vector<CheckResult> results;
    for (const auto& [name, fn] : registered_checks()) {
        if (suite != "all" && suite != name) continue;
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = fn(ctx);
        } catch (const Error& e) {
            r = {name, "(aborted)", false, 0, e.what(), 0};
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

inline bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace stargrundy
