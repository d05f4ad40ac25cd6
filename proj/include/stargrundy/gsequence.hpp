#pragma once

// g-sequences of 2-Star Nim: the positions (x_n, y_n), x_n <= y_n, of
// Grundy value g listed by increasing x_n.
//
//  * ReferenceGSequences  - the unbounded reference construction (every
//                           earlier pair of every level is kept).
//  * gseq_alg2            - the bounded-window construction: per level only the
//                           current pair and the recent second entries.
//  * NormalizedState      - the windowed state shifted so its least value is 0;
//                           it ranges over a finite set, which is what makes the
//                           difference sequence y_n - x_n ultimately periodic.
//
// The pair (0, 0) is not a position; the first entry of every level starts its
// search at (0, 1).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stargrundy/error.hpp"

namespace stargrundy {

using SeqValue = std::int64_t;

struct GSeqEntry {
    std::uint64_t n = 0;
    SeqValue x = 0;
    SeqValue y = 0;

    SeqValue diff() const noexcept { return y - x; }
    friend bool operator==(const GSeqEntry&, const GSeqEntry&) = default;
};

/// min{ b : b >= a, b not in s }.
inline SeqValue mex_from(SeqValue a, std::span<const SeqValue> s) {
    SeqValue b = a;
    while (std::find(s.begin(), s.end(), b) != s.end()) ++b;
    return b;
}

inline SeqValue mex_from(SeqValue a, std::initializer_list<SeqValue> s) {
    return mex_from(a, std::span<const SeqValue>(s.begin(), s.size()));
}

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

// ---------------------------------------------------------------------------
// Reference construction

/// All levels 0..g, each extended on demand. A lower level is extended as far
/// as the first entry that reaches the candidate x of the level above it.
class ReferenceGSequences {
public:
    explicit ReferenceGSequences(unsigned g, std::uint64_t entry_budget = kDefaultStepBudget)
        : levels_(g + 1), entry_budget_(entry_budget) {}

    unsigned g() const noexcept { return static_cast<unsigned>(levels_.size() - 1); }

    GSeqEntry entry(unsigned level, std::size_t n) {
        while (levels_.at(level).pairs.size() <= n) extend(level);
        const auto& [x, y] = levels_[level].pairs[n];
        return {n, x, y};
    }

    std::vector<GSeqEntry> prefix(unsigned level, std::size_t n_max) {
        std::vector<GSeqEntry> out;
        out.reserve(n_max + 1);
        for (std::size_t n = 0; n <= n_max; ++n) out.push_back(entry(level, n));
        return out;
    }

private:
    struct Level {
        std::vector<std::pair<SeqValue, SeqValue>> pairs;
        std::vector<bool> used;               // every x_i and y_i so far
        std::unordered_set<SeqValue> ys;
        std::vector<SeqValue> y_at_x;         // -1 where x is not a first entry
    };

    static void mark(std::vector<bool>& v, SeqValue i) {
        if (static_cast<std::size_t>(i) >= v.size()) v.resize(static_cast<std::size_t>(i) * 2 + 2, false);
        v[static_cast<std::size_t>(i)] = true;
    }

    void extend(unsigned k) {
        if (++entries_ > entry_budget_) throw ResourceLimit("g-sequence entry budget exhausted");
        Level& level = levels_[k];

        // x_n = mex of every earlier x_i, y_i.
        SeqValue x = 0;
        while (static_cast<std::size_t>(x) < level.used.size() && level.used[static_cast<std::size_t>(x)]) ++x;

        // Lower levels must be known up to first entry x.
        for (unsigned j = 0; j < k; ++j) {
            while (levels_[j].pairs.empty() || levels_[j].pairs.back().first < x) extend(j);
        }

        SeqValue y = x == 0 ? 1 : x;
        while (true) {
            bool clash = level.ys.contains(y);
            for (unsigned j = 0; j < k && !clash; ++j) {
                const auto& lower = levels_[j].y_at_x;
                clash = static_cast<std::size_t>(x) < lower.size() && lower[static_cast<std::size_t>(x)] == y;
            }
            if (!clash) break;
            ++y;
        }

        level.pairs.emplace_back(x, y);
        mark(level.used, x);
        mark(level.used, y);
        level.ys.insert(y);
        if (static_cast<std::size_t>(x) >= level.y_at_x.size()) level.y_at_x.resize(static_cast<std::size_t>(x) * 2 + 2, -1);
        level.y_at_x[static_cast<std::size_t>(x)] = y;
    }

    std::vector<Level> levels_;
    std::uint64_t entry_budget_;
    std::uint64_t entries_ = 0;
};

inline std::vector<GSeqEntry> gseq_alg1(unsigned g, std::size_t n_max, std::uint64_t entry_budget = kDefaultStepBudget) {
    ReferenceGSequences seqs(g, entry_budget);
    return seqs.prefix(g, n_max);
}

// ---------------------------------------------------------------------------
// Bounded-window construction

/// Window of one level: its current pair (x, y) and the set Y of second entries
/// of its last k+1 pairs that are still >= x. Y is kept sorted.
struct LevelWindow {
    bool started = false;
    SeqValue x = 0;
    SeqValue y = 0;
    std::vector<SeqValue> recent_y;

    friend bool operator==(const LevelWindow&, const LevelWindow&) = default;
};

/// Windows for levels 0..g; levels[k] for k < g sits at the last pair whose
/// first entry does not exceed the current first entry of level g.
struct AlgState {
    std::vector<LevelWindow> levels;

    explicit AlgState(unsigned g = 0) : levels(g + 1) {}
    unsigned g() const noexcept { return static_cast<unsigned>(levels.size() - 1); }

    /// Number of distinct stored values summed over levels.
    std::size_t stored_values() const {
        std::size_t total = 0;
        for (const auto& level : levels) {
            if (!level.started) continue;
            std::vector<SeqValue> v = level.recent_y;
            v.push_back(level.x);
            v.push_back(level.y);
            std::sort(v.begin(), v.end());
            total += static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
        }
        return total;
    }

    std::pair<SeqValue, SeqValue> value_range() const {
        SeqValue lo = INT64_MAX, hi = INT64_MIN;
        for (const auto& level : levels) {
            if (!level.started) continue;
            lo = std::min({lo, level.x, level.y});
            hi = std::max({hi, level.x, level.y});
            for (auto v : level.recent_y) {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
        }
        return {lo, hi};
    }

    friend bool operator==(const AlgState&, const AlgState&) = default;
};

namespace detail {

inline SeqValue peek_next_x(const LevelWindow& w) {
    if (!w.started) return 0;
    // mex above x of {x, y} and Y; y is itself in Y.
    SeqValue b = w.x + 1;
    while (b == w.y || std::binary_search(w.recent_y.begin(), w.recent_y.end(), b)) ++b;
    return b;
}

inline void advance_level(AlgState& s, unsigned k);

// Moves level k to f_k(target): its last pair with first entry <= target.
inline void advance_to(AlgState& s, unsigned k, SeqValue target) {
    while (peek_next_x(s.levels[k]) <= target) advance_level(s, k);
}

inline void advance_level(AlgState& s, unsigned k) {
    const SeqValue x = peek_next_x(s.levels[k]);
    for (unsigned j = k; j-- > 0;) advance_to(s, j, x);

    LevelWindow& w = s.levels[k];
    SeqValue y = w.started ? x : (x == 0 ? 1 : x);
    while (true) {
        bool clash = std::binary_search(w.recent_y.begin(), w.recent_y.end(), y);
        for (unsigned j = 0; j < k && !clash; ++j) {
            clash = s.levels[j].x == x && s.levels[j].y == y;
        }
        if (!clash) break;
        ++y;
    }

    std::erase_if(w.recent_y, [x](SeqValue v) { return v < x; });
    w.recent_y.insert(std::upper_bound(w.recent_y.begin(), w.recent_y.end(), y), y);
    w.x = x;
    w.y = y;
    w.started = true;
}

}  // namespace detail

/// One step of the top level g. Returns the new pair (x, y).
inline std::pair<SeqValue, SeqValue> alg2_step(AlgState& s) {
    detail::advance_level(s, s.g());
    return {s.levels.back().x, s.levels.back().y};
}

inline std::vector<GSeqEntry> gseq_alg2(unsigned g, std::size_t n_max) {
    AlgState s(g);
    std::vector<GSeqEntry> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto [x, y] = alg2_step(s);
        out.push_back({n, x, y});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Normalized finite-state form

inline AlgState shifted(const AlgState& s, SeqValue delta) {
    AlgState out = s;
    for (auto& level : out.levels) {
        if (!level.started) continue;
        level.x += delta;
        level.y += delta;
        for (auto& v : level.recent_y) v += delta;
    }
    return out;
}

/// AlgState translated so that min over levels of x is 0. Every level started.
class NormalizedState {
public:
    static NormalizedState from(const AlgState& s) {
        SeqValue base = INT64_MAX;
        for (const auto& level : s.levels) {
            if (!level.started) throw PreconditionError("normalization needs every level started");
            base = std::min(base, level.x);
        }
        return NormalizedState(shifted(s, -base));
    }

    const AlgState& state() const noexcept { return state_; }
    unsigned g() const noexcept { return state_.g(); }

    /// Byte serialization; equal states have equal keys.
    std::string key() const {
        std::string out;
        auto put = [&out](SeqValue v) {
            auto u = static_cast<std::uint64_t>(v);
            while (u >= 0x80) {
                out.push_back(static_cast<char>((u & 0x7f) | 0x80));
                u >>= 7;
            }
            out.push_back(static_cast<char>(u));
        };
        for (const auto& level : state_.levels) {
            put(level.x);
            put(level.y);
            put(static_cast<SeqValue>(level.recent_y.size()));
            for (auto v : level.recent_y) put(v);
        }
        return out;
    }

    friend bool operator==(const NormalizedState&, const NormalizedState&) = default;

private:
    explicit NormalizedState(AlgState s) : state_(std::move(s)) {}
    AlgState state_;
};

struct Alg3Step {
    SeqValue diff = 0;
    NormalizedState next;
    SeqValue x = 0;      // the produced pair, in the frame of the input state
    SeqValue shift = 0;  // subtracted when renormalizing
};

namespace detail {

inline Alg3Step finish_alg3(AlgState work) {
    const auto [x, y] = alg2_step(work);
    NormalizedState next = NormalizedState::from(work);
    SeqValue base = INT64_MAX;
    for (const auto& level : work.levels) base = std::min(base, level.x);
    return {y - x, std::move(next), x, base};
}

}  // namespace detail

/// One windowed step from a normalized state, renormalized afterwards.
/// Returns y - x of the produced pair.
inline Alg3Step gseq_alg3_step(const NormalizedState& s) { return detail::finish_alg3(s.state()); }

/// Runs the first step (n = 0) from scratch, which starts every level, and
/// normalizes. Returns the diff of entry 0 and the state before entry 1.
inline Alg3Step gseq_alg3_initial(unsigned g) { return detail::finish_alg3(AlgState(g)); }

/// Entries 0..n_max from the normalized machine; absolute positions are
/// recovered by summing the shifts.
inline std::vector<GSeqEntry> gseq_alg3(unsigned g, std::size_t n_max) {
    std::vector<GSeqEntry> out;
    out.reserve(n_max + 1);
    Alg3Step step = gseq_alg3_initial(g);
    SeqValue offset = 0;
    for (std::size_t n = 0;; ++n) {
        out.push_back({n, offset + step.x, offset + step.x + step.diff});
        if (n == n_max) return out;
        offset += step.shift;
        step = gseq_alg3_step(step.next);
    }
}

// ---------------------------------------------------------------------------
// Period certificate

struct PeriodCertificate {
    unsigned g = 0;
    std::uint64_t preperiod = 0;              // diff(n + period) == diff(n) for all n >= preperiod
    std::uint64_t period = 0;                 // minimal
    std::vector<SeqValue> block;              // diff(preperiod) .. diff(preperiod + period - 1)
    std::pair<std::uint64_t, std::uint64_t> evidence{0, 0};  // state before entry b1 == before entry b2
    std::vector<SeqValue> diffs;              // diff(0) .. diff(b2 - 1)
};

namespace detail {

// Given s(n + p) == s(n) for n >= n0 (s known on [0, n0 + p)), shrinks p to the
// least divisor that still works and then n0 as far as it goes.
inline std::pair<std::uint64_t, std::uint64_t> minimize_period(const std::vector<SeqValue>& s, std::uint64_t n0,
                                                               std::uint64_t p) {
    const auto ext = [&](std::uint64_t i, std::uint64_t base, std::uint64_t per) {
        return i < s.size() && i < base + per ? s[i] : s[base + (i - base) % per];
    };
    std::uint64_t best = p;
    for (std::uint64_t q = 1; q < p; ++q) {
        if (p % q != 0) continue;
        bool ok = true;
        for (std::uint64_t i = n0; i < n0 + p && ok; ++i) ok = ext(i + q, n0, p) == ext(i, n0, p);
        if (ok) {
            best = q;
            break;
        }
    }
    while (n0 > 0 && s[n0 - 1] == ext(n0 - 1 + best, n0, best)) --n0;
    return {n0, best};
}

}  // namespace detail

/// Iterates the normalized machine until a state recurs. The recurrence makes
/// the period exact for all n >= preperiod, not just the observed prefix.
inline PeriodCertificate certify_diff_period(unsigned g, std::uint64_t step_budget = kDefaultStepBudget) {
    auto first = gseq_alg3_initial(g);
    NormalizedState state = std::move(first.next);
    std::vector<SeqValue> diffs{first.diff};
    std::unordered_map<std::string, std::uint64_t> seen;
    seen.emplace(state.key(), 1);

    for (std::uint64_t n = 1;; ++n) {
        if (n > step_budget) {
            throw BudgetExceeded("no state recurrence within " + std::to_string(step_budget) + " steps", diffs);
        }
        auto step = gseq_alg3_step(state);
        diffs.push_back(step.diff);
        state = std::move(step.next);
        const auto [it, inserted] = seen.emplace(state.key(), n + 1);
        if (inserted) continue;

        PeriodCertificate cert;
        cert.g = g;
        cert.evidence = {it->second, n + 1};
        const auto [n0, p] = detail::minimize_period(diffs, it->second, n + 1 - it->second);
        cert.preperiod = n0;
        cert.period = p;
        for (std::uint64_t i = n0; i < n0 + p; ++i) {
            cert.block.push_back(i < diffs.size() ? diffs[i] : diffs[it->second + (i - it->second) % (n + 1 - it->second)]);
        }
        cert.diffs = std::move(diffs);
        return cert;
    }
}

}  // namespace stargrundy
