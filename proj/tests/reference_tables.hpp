#pragma once

// Rows n = 1..17 (k = 0..9), 1..17 (k = 0..8) and 1..12 (k = 0..9) of the
// published count triangles. P[13][7] holds 6; the printed entry is 60.

#include <array>
#include <cstdint>

namespace tables {

inline constexpr std::array<std::array<std::int64_t, 10>, 17> primitive = {{
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 4, 2, 0, 0, 0, 0, 0, 0, 0},
    {1, 5, 5, 2, 0, 0, 0, 0, 0, 0},
    {1, 6, 7, 3, 0, 0, 0, 0, 0, 0},
    {1, 7, 12, 10, 3, 0, 0, 0, 0, 0},
    {1, 8, 16, 15, 5, 0, 0, 0, 0, 0},
    {1, 9, 22, 26, 13, 2, 0, 0, 0, 0},
    {1, 10, 28, 38, 22, 4, 0, 0, 0, 0},
    {1, 11, 37, 66, 60, 26, 4, 0, 0, 0},
    {1, 12, 43, 80, 76, 35, 6, 0, 0, 0},
    {1, 13, 54, 123, 156, 111, 41, 6, 0, 0},
    {1, 14, 64, 161, 227, 180, 74, 12, 0, 0},
    {1, 15, 75, 206, 323, 299, 161, 47, 6, 0},
    {1, 16, 86, 253, 425, 421, 242, 75, 10, 0},
    {1, 17, 101, 339, 678, 846, 663, 317, 85, 10},
}};

inline constexpr std::array<std::array<std::int64_t, 9>, 17> coprime = {{
    {1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 1, 0, 0, 0, 0, 0, 0},
    {1, 3, 3, 1, 0, 0, 0, 0, 0},
    {1, 4, 5, 2, 0, 0, 0, 0, 0},
    {1, 5, 9, 7, 2, 0, 0, 0, 0},
    {1, 6, 11, 8, 2, 0, 0, 0, 0},
    {1, 7, 17, 19, 10, 2, 0, 0, 0},
    {1, 8, 21, 25, 14, 3, 0, 0, 0},
    {1, 9, 27, 37, 24, 6, 0, 0, 0},
    {1, 10, 31, 42, 26, 6, 0, 0, 0},
    {1, 11, 41, 73, 68, 32, 6, 0, 0},
    {1, 12, 45, 79, 72, 33, 6, 0, 0},
    {1, 13, 57, 124, 151, 105, 39, 6, 0},
    {1, 14, 63, 138, 167, 114, 41, 6, 0},
    {1, 15, 71, 159, 192, 128, 44, 6, 0},
    {1, 16, 79, 183, 228, 157, 56, 8, 0},
    {1, 17, 95, 262, 411, 385, 213, 64, 8},
}};

inline constexpr std::array<std::array<std::int64_t, 10>, 12> product_free = {{
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 2, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 3, 2, 0, 0, 0, 0, 0, 0, 0},
    {1, 4, 5, 2, 0, 0, 0, 0, 0, 0},
    {1, 5, 9, 6, 1, 0, 0, 0, 0, 0},
    {1, 6, 14, 15, 7, 1, 0, 0, 0, 0},
    {1, 7, 20, 29, 22, 8, 1, 0, 0, 0},
    {1, 8, 26, 43, 38, 17, 3, 0, 0, 0},
    {1, 9, 34, 68, 76, 47, 15, 2, 0, 0},
    {1, 10, 43, 102, 144, 123, 62, 17, 2, 0},
    {1, 11, 53, 143, 234, 238, 149, 55, 11, 1},
}};

} // namespace tables
