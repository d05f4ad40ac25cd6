#pragma once

// Ground-truth Sprague-Grundy evaluation by memoized search over the game
// graph. Every closed form in the library is checked against this.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "stargrundy/error.hpp"
#include "stargrundy/position.hpp"

namespace stargrundy {

using Grundy = std::uint32_t;

inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 27;

/// Least nonnegative integer not in `values` (duplicates allowed, any order).
template <typename T>
T mex(std::span<const T> values) {
    std::vector<bool> present(values.size() + 1, false);
    for (T v : values) {
        if (v < static_cast<T>(present.size())) present[static_cast<std::size_t>(v)] = true;
    }
    T result = 0;
    while (present[static_cast<std::size_t>(result)]) ++result;
    return result;
}

template <typename T>
T mex(const std::vector<T>& values) {
    return mex(std::span<const T>(values));
}

inline std::uint64_t nim_sum(std::span<const std::uint64_t> values) {
    std::uint64_t x = 0;
    for (auto v : values) x ^= v;
    return x;
}

inline std::uint64_t nim_sum(std::initializer_list<std::uint64_t> values) {
    return nim_sum(std::span<const std::uint64_t>(values.begin(), values.size()));
}

namespace detail {

inline void put_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

}  // namespace detail

/// Compact memo key: strips sorted, empty strips dropped, each strip as
/// varint(count) followed by the first square and the gaps between squares.
inline std::string position_key(const Position& p) {
    std::vector<const Strip*> strips;
    strips.reserve(p.strip_count());
    for (const auto& s : p.strips()) {
        if (!s.empty()) strips.push_back(&s);
    }
    std::sort(strips.begin(), strips.end(), [](const Strip* a, const Strip* b) { return *a < *b; });
    std::string key;
    key.reserve(strips.size() * 4);
    for (const Strip* s : strips) {
        detail::put_varint(key, s->size());
        Square prev = 0;
        for (std::size_t i = 0; i < s->size(); ++i) {
            detail::put_varint(key, i == 0 ? (*s)[0] : (*s)[i] - prev - 1);
            prev = (*s)[i];
        }
    }
    return key;
}

class GrundyTable {
public:
    explicit GrundyTable(std::uint64_t node_budget = kDefaultNodeBudget) : node_budget_(node_budget) {}

    std::optional<Grundy> find(const std::string& key) const {
        const auto it = cache_.find(key);
        if (it == cache_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<Grundy> find(const Position& p) const { return find(position_key(p)); }

    void insert(std::string key, Grundy value) {
        if (cache_.size() >= node_budget_) {
            throw ResourceLimit("node budget of " + std::to_string(node_budget_) + " states exhausted");
        }
        cache_.emplace(std::move(key), value);
    }

    std::size_t size() const noexcept { return cache_.size(); }
    std::uint64_t node_budget() const noexcept { return node_budget_; }

private:
    std::unordered_map<std::string, Grundy> cache_;
    std::uint64_t node_budget_;
};

/// Sprague-Grundy value by the recursive mex definition, evaluated with an
/// explicit stack so deep game graphs cannot overflow the call stack.
inline Grundy grundy(const Position& p, GrundyTable& table) {
    std::string root_key = position_key(p);
    if (auto v = table.find(root_key)) return *v;

    struct Frame {
        Position position;
        std::string key;
        std::vector<std::string> children;
        bool expanded = false;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{p, std::move(root_key), {}, false});
    std::vector<Grundy> child_values;

    while (!stack.empty()) {
        if (table.find(stack.back().key)) {
            stack.pop_back();
            continue;
        }
        if (!stack.back().expanded) {
            stack.back().expanded = true;
            std::vector<Frame> pending;
            std::vector<std::string> children;
            const Position current = stack.back().position;
            for_each_legal_move(current, [&](const Move& m) {
                Position next = apply_move_unchecked(current, m);
                std::string key = position_key(next);
                if (!table.find(key)) pending.push_back(Frame{std::move(next), key, {}, false});
                children.push_back(std::move(key));
            });
            stack.back().children = std::move(children);
            if (!pending.empty()) {
                for (auto& frame : pending) stack.push_back(std::move(frame));
                continue;
            }
        }
        Frame& done = stack.back();
        child_values.clear();
        for (const auto& key : done.children) child_values.push_back(*table.find(key));
        table.insert(std::move(done.key), mex(child_values));
        stack.pop_back();
    }
    return *table.find(p);
}

inline bool is_p_position(const Position& p, GrundyTable& table) { return grundy(p, table) == 0; }

}  // namespace stargrundy
