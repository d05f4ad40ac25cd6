#pragma once

// Reference values: the 2-Star Nim table for 1 <= a <= 10, a <= b <= 15, and
// the first values of the diagonals G(2+i, 4+i) and G(2+i, 5+i).

#include <array>
#include <cstdint>

namespace fixtures {

struct Cell {
    std::uint64_t a, b, g;
};

inline constexpr std::array<Cell, 105> kTable = {{
    {1, 1, 1}, {1, 2, 2}, {1, 3, 3}, {1, 4, 4}, {1, 5, 5}, {1, 6, 6}, {1, 7, 7}, {1, 8, 8}, {1, 9, 9}, {1, 10, 10}, {1, 11, 11}, {1, 12, 12}, {1, 13, 13}, {1, 14, 14}, {1, 15, 15},
    {2, 2, 0}, {2, 3, 4}, {2, 4, 5}, {2, 5, 3}, {2, 6, 7}, {2, 7, 8}, {2, 8, 6}, {2, 9, 10}, {2, 10, 11}, {2, 11, 9}, {2, 12, 13}, {2, 13, 14}, {2, 14, 12}, {2, 15, 16},
    {3, 3, 0}, {3, 4, 1}, {3, 5, 6}, {3, 6, 8}, {3, 7, 5}, {3, 8, 9}, {3, 9, 7}, {3, 10, 12}, {3, 11, 13}, {3, 12, 10}, {3, 13, 11}, {3, 14, 15}, {3, 15, 17},
    {4, 4, 0}, {4, 5, 2}, {4, 6, 9}, {4, 7, 10}, {4, 8, 11}, {4, 9, 6}, {4, 10, 7}, {4, 11, 8}, {4, 12, 14}, {4, 13, 15}, {4, 14, 16}, {4, 15, 12},
    {5, 5, 0}, {5, 6, 1}, {5, 7, 9}, {5, 8, 10}, {5, 9, 11}, {5, 10, 8}, {5, 11, 7}, {5, 12, 15}, {5, 13, 16}, {5, 14, 17}, {5, 15, 13},
    {6, 6, 0}, {6, 7, 2}, {6, 8, 3}, {6, 9, 4}, {6, 10, 13}, {6, 11, 12}, {6, 12, 16}, {6, 13, 10}, {6, 14, 11}, {6, 15, 18},
    {7, 7, 0}, {7, 8, 1}, {7, 9, 3}, {7, 10, 4}, {7, 11, 14}, {7, 12, 17}, {7, 13, 18}, {7, 14, 19}, {7, 15, 11},
    {8, 8, 0}, {8, 9, 2}, {8, 10, 5}, {8, 11, 4}, {8, 12, 18}, {8, 13, 17}, {8, 14, 20}, {8, 15, 19},
    {9, 9, 0}, {9, 10, 1}, {9, 11, 5}, {9, 12, 19}, {9, 13, 20}, {9, 14, 18}, {9, 15, 21},
    {10, 10, 0}, {10, 11, 2}, {10, 12, 3}, {10, 13, 6}, {10, 14, 21}, {10, 15, 20},
}};

inline constexpr std::array<std::int64_t, 100> kDiagonal24 = {
    5, 6, 9, 9, 3, 3, 5, 5, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4,
    3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4,
    3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4,
    3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4,
    3, 3, 4, 4,
};

inline constexpr std::array<std::int64_t, 400> kDiagonal25 = {
    3, 8, 10, 10, 4, 4, 4, 19, 6, 6, 5, 5, 5, 6, 10, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 8, 8, 11, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 9, 5, 5,
    5, 8, 9, 8, 5, 5, 5, 9, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 9, 8, 8, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 8, 8, 10, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 10, 5, 5,
    5, 8, 10, 8, 5, 5, 5, 10, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 9, 8, 8, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 8, 8, 10, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 9, 5, 5,
    5, 8, 9, 8, 5, 5, 5, 9, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 9, 8, 8, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 8, 8, 10, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 10, 5, 5,
    5, 8, 10, 8, 5, 5, 5, 10, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 9, 8, 8, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 8, 8, 10, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 9, 5, 5,
    5, 8, 9, 8, 5, 5, 5, 9, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 9, 8, 8, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6, 5, 5, 5, 6, 6, 8, 5, 5,
    5, 8, 8, 10, 5, 5, 5, 8, 6, 6, 5, 5, 5, 6, 8, 6,
};

}  // namespace fixtures
