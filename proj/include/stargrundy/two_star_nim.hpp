#pragma once

// Dense table of G(a, b) for 2-Star Nim, the position ([a],[b]).
//
// Filled row by row with the plain mex recursion: the options of (a, b) are
// (a', b) for a' < a and (a, b') for b' < b, except the illegal (0, 0).
// No bound on G is assumed, so the table can be used to test those bounds.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stargrundy/error.hpp"
#include "stargrundy/oracle.hpp"

namespace stargrundy {

class TwoStarNimTable {
public:
    explicit TwoStarNimTable(std::uint64_t node_budget = kDefaultNodeBudget) : node_budget_(node_budget) {}

    /// G(a, b); grows the table on demand. (0, 0) is not a position.
    Grundy value(std::uint64_t a, std::uint64_t b) {
        if (a == 0 && b == 0) throw InvariantError("(0,0) is not a 2-Star Nim position");
        if (a > b) std::swap(a, b);
        if (a > max_row_ || b > max_col_ || values_.empty()) {
            reserve(std::max<std::uint64_t>(a, grow(max_row_, a)), std::max<std::uint64_t>(b, grow(max_col_, b)));
        }
        return at(a, b);
    }

    /// Ensures G(a, b) is available for all a <= rows, a <= b <= cols.
    void reserve(std::uint64_t rows, std::uint64_t cols) {
        cols = std::max(cols, rows);
        if (!values_.empty() && rows <= max_row_ && cols <= max_col_) return;
        const std::uint64_t cells = (rows + 1) * (cols + 1);
        if (cells > node_budget_) {
            throw ResourceLimit("2-Star Nim table of " + std::to_string(cells) + " cells exceeds node budget");
        }
        fill(rows, cols);
    }

    /// The stored cell (a, b) as filled, without the a <= b swap. Both triangles
    /// of the rectangle are computed, so this exposes the raw symmetry.
    Grundy stored(std::uint64_t a, std::uint64_t b) const {
        if (values_.empty() || a > max_row_ || b > max_col_ || (a == 0 && b == 0)) {
            throw PreconditionError("cell outside the filled rectangle");
        }
        return at(a, b);
    }

    std::uint64_t rows() const noexcept { return max_row_; }
    std::uint64_t cols() const noexcept { return max_col_; }

private:
    static std::uint64_t grow(std::uint64_t current, std::uint64_t wanted) {
        return wanted <= current ? current : std::max(wanted, current * 2);
    }

    Grundy at(std::uint64_t a, std::uint64_t b) const { return values_[a * (max_col_ + 1) + b]; }

    void fill(std::uint64_t rows, std::uint64_t cols) {
        max_row_ = rows;
        max_col_ = cols;
        const std::size_t width = cols + 1;
        // Values are bounded by the number of options, a + b.
        const std::size_t value_cap = rows + cols + 2;
        values_.assign((rows + 1) * width, 0);
        std::vector<std::vector<bool>> col_seen(width, std::vector<bool>(value_cap, false));
        std::vector<bool> row_seen;
        for (std::uint64_t a = 0; a <= rows; ++a) {
            row_seen.assign(value_cap, false);
            std::size_t row_mex = 0;
            for (std::uint64_t b = 0; b <= cols; ++b) {
                if (a == 0 && b == 0) continue;
                std::size_t v = row_mex;
                while (row_seen[v] || col_seen[b][v]) ++v;
                values_[a * width + b] = static_cast<Grundy>(v);
                row_seen[v] = true;
                col_seen[b][v] = true;
                while (row_seen[row_mex]) ++row_mex;
            }
        }
    }

    std::uint64_t node_budget_;
    std::uint64_t max_row_ = 0;
    std::uint64_t max_col_ = 0;
    std::vector<Grundy> values_;
};

}  // namespace stargrundy
