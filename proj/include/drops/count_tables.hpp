#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace drops::tables {

struct DropletCountRow {
    int n;
    std::int64_t minimum, multipole, lisa, maximum;
};

inline constexpr std::array<DropletCountRow, 8> droplet_counts{{
    {1, 1, 1, 2, 2},
    {2, 3, 4, 4, 6},
    {3, 9, 9, 11, 20},
    {4, 28, 36, 36, 70},
    {5, 90, 100, 122, 252},
    {6, 297, 400, 423, 924},
    {7, 1001, 1225, 1486, 3432},
    {8, 3640, 4900, 5246, 12870},
}};

struct RankMultiplicityRow {
    int n, j;
    std::int64_t n_j, n_bar_j;
};

inline constexpr std::array<RankMultiplicityRow, 44> rank_multiplicities{{
    {1, 0, 0, 1}, {1, 1, 1, 1},
    {2, 0, 1, 2}, {2, 1, 1, 3}, {2, 2, 1, 1},
    {3, 0, 1, 5}, {3, 1, 3, 9}, {3, 2, 2, 5}, {3, 3, 1, 1},
    {4, 0, 3, 14}, {4, 1, 6, 28}, {4, 2, 6, 20}, {4, 3, 3, 7}, {4, 4, 1, 1},
    {5, 0, 6, 42}, {5, 1, 15, 90}, {5, 2, 15, 75}, {5, 3, 10, 35}, {5, 4, 4, 9}, {5, 5, 1, 1},
    {6, 0, 15, 132}, {6, 1, 36, 297}, {6, 2, 40, 275}, {6, 3, 29, 154}, {6, 4, 15, 54}, {6, 5, 5, 11}, {6, 6, 1, 1},
    {7, 0, 36, 429}, {7, 1, 91, 1001}, {7, 2, 105, 1001}, {7, 3, 84, 637}, {7, 4, 49, 273}, {7, 5, 21, 77}, {7, 6, 6, 13}, {7, 7, 1, 1},
    {8, 0, 91, 1430}, {8, 1, 232, 3432}, {8, 2, 280, 3640}, {8, 3, 238, 2548}, {8, 4, 154, 1260}, {8, 5, 76, 440}, {8, 6, 28, 104}, {8, 7, 7, 15}, {8, 8, 1, 1},
}};

struct SymmetryRankEntry {
    int g;
    std::vector<int> lambda;
    int tableau_count;
    std::vector<int> ranks;
};

// Shapes with their ranks (with multiplicity) for g-linear operators, g <= 6.
inline const std::vector<SymmetryRankEntry>& symmetry_ranks() {
    static const std::vector<SymmetryRankEntry> rows = {
        {1, {1}, 1, {1}},
        {2, {2}, 1, {0, 2}},
        {2, {1, 1}, 1, {1}},
        {3, {3}, 1, {1, 3}},
        {3, {2, 1}, 2, {1, 2}},
        {3, {1, 1, 1}, 1, {0}},
        {4, {4}, 1, {0, 2, 4}},
        {4, {3, 1}, 3, {1, 2, 3}},
        {4, {2, 2}, 2, {0, 2}},
        {4, {2, 1, 1}, 3, {1}},
        {5, {5}, 1, {1, 3, 5}},
        {5, {4, 1}, 4, {1, 2, 3, 4}},
        {5, {3, 2}, 5, {1, 2, 3}},
        {5, {3, 1, 1}, 6, {0, 2}},
        {5, {2, 2, 1}, 5, {1}},
        {6, {6}, 1, {0, 2, 4, 6}},
        {6, {5, 1}, 5, {1, 2, 3, 4, 5}},
        {6, {4, 2}, 9, {0, 2, 2, 3, 4}},
        {6, {4, 1, 1}, 10, {1, 3}},
        {6, {3, 3}, 5, {1, 3}},
        {6, {3, 2, 1}, 16, {1, 2}},
        {6, {2, 2, 2}, 5, {0}},
    };
    return rows;
}

}  // namespace drops::tables
