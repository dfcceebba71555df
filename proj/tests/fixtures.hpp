// Frozen expected values used by the unit and acceptance suites.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fixtures {

// c_g(b) for g in {2,3,5,7,10} and 2 <= b <= 100; 0 marks gcd(g,b) != 1.
struct CgbRow {
    int b;
    std::array<int, 5> c;  // columns g = 2, 3, 5, 7, 10
};

inline const std::vector<CgbRow> kCgbTable = {
    {2, {0, 3, 2, 4, 0}},   {3, {1, 0, 1, 1, 2}},   {4, {0, 2, 1, 2, 0}},
    {5, {1, 1, 0, 2, 0}},   {6, {0, 0, 3, 4, 0}},   {7, {1, 1, 1, 0, 1}},
    {8, {0, 1, 1, 2, 0}},   {9, {1, 0, 1, 1, 1}},   {10, {0, 4, 0, 5, 0}},
    {11, {1, 2, 1, 1, 1}},  {12, {0, 0, 2, 2, 0}},  {13, {1, 1, 1, 1, 1}},
    {14, {0, 3, 3, 0, 0}},  {15, {1, 0, 0, 2, 0}},  {16, {0, 1, 1, 1, 0}},
    {17, {1, 1, 1, 1, 1}},  {18, {0, 0, 3, 4, 0}},  {19, {1, 1, 1, 1, 1}},
    {20, {0, 2, 0, 3, 0}},  {21, {2, 0, 2, 0, 3}},  {22, {0, 3, 2, 4, 0}},
    {23, {1, 1, 1, 1, 1}},  {24, {0, 0, 1, 2, 0}},  {25, {1, 1, 0, 1, 0}},
    {26, {0, 3, 4, 5, 0}},  {27, {1, 0, 1, 1, 1}},  {28, {0, 2, 2, 0, 0}},
    {29, {1, 1, 1, 1, 1}},  {30, {0, 0, 0, 5, 0}},  {31, {1, 1, 1, 1, 1}},
    {32, {0, 1, 1, 1, 0}},  {33, {1, 0, 1, 1, 2}},  {34, {0, 6, 6, 7, 0}},
    {35, {1, 1, 0, 0, 0}},  {36, {0, 0, 2, 2, 0}},  {37, {1, 1, 1, 1, 1}},
    {38, {0, 3, 2, 4, 0}},  {39, {2, 0, 1, 2, 3}},  {40, {0, 2, 0, 2, 0}},
    {41, {1, 1, 1, 1, 1}},  {42, {0, 0, 3, 0, 0}},  {43, {1, 1, 1, 1, 1}},
    {44, {0, 2, 1, 2, 0}},  {45, {1, 0, 0, 2, 0}},  {46, {0, 3, 3, 4, 0}},
    {47, {1, 1, 1, 1, 1}},  {48, {0, 0, 1, 1, 0}},  {49, {1, 1, 1, 0, 1}},
    {50, {0, 4, 0, 5, 0}},  {51, {1, 0, 1, 1, 2}},  {52, {0, 2, 2, 3, 0}},
    {53, {1, 1, 1, 1, 1}},  {54, {0, 0, 3, 4, 0}},  {55, {2, 2, 0, 3, 0}},
    {56, {0, 1, 1, 0, 0}},  {57, {3, 0, 3, 2, 4}},  {58, {0, 4, 3, 4, 0}},
    {59, {1, 1, 1, 1, 1}},  {60, {0, 0, 0, 3, 0}},  {61, {1, 1, 1, 1, 1}},
    {62, {0, 3, 2, 4, 0}},  {63, {1, 0, 1, 0, 2}},  {64, {0, 1, 1, 1, 0}},
    {65, {1, 1, 0, 2, 0}},  {66, {0, 0, 3, 4, 0}},  {67, {1, 1, 1, 1, 1}},
    {68, {0, 3, 3, 4, 0}},  {69, {1, 0, 1, 1, 2}},  {70, {0, 4, 0, 0, 0}},
    {71, {1, 1, 1, 1, 1}},  {72, {0, 0, 1, 2, 0}},  {73, {1, 1, 1, 1, 1}},
    {74, {0, 3, 4, 4, 0}},  {75, {1, 0, 0, 1, 0}},  {76, {0, 2, 1, 2, 0}},
    {77, {1, 2, 1, 0, 1}},  {78, {0, 0, 4, 5, 0}},  {79, {1, 1, 1, 1, 1}},
    {80, {0, 1, 0, 2, 0}},  {81, {1, 0, 1, 1, 1}},  {82, {0, 5, 4, 6, 0}},
    {83, {1, 1, 1, 1, 1}},  {84, {0, 0, 2, 0, 0}},  {85, {1, 1, 0, 2, 0}},
    {86, {0, 3, 3, 4, 0}},  {87, {1, 0, 1, 1, 2}},  {88, {0, 2, 1, 2, 0}},
    {89, {1, 1, 1, 1, 1}},  {90, {0, 0, 0, 5, 0}},  {91, {1, 1, 1, 0, 1}},
    {92, {0, 2, 2, 2, 0}},  {93, {1, 0, 2, 2, 3}},  {94, {0, 3, 3, 4, 0}},
    {95, {1, 1, 0, 2, 0}},  {96, {0, 0, 1, 1, 0}},  {97, {1, 1, 1, 1, 1}},
    {98, {0, 3, 3, 0, 0}},  {99, {1, 0, 1, 1, 1}},  {100, {0, 2, 0, 3, 0}},
};

inline const std::array<int, 5> kCgbBases = {2, 3, 5, 7, 10};

// W_1 for g=3, b=13, j=2, t=1.
inline const std::array<std::array<int, 9>, 9> kW1 = {{
    {2, 1, 2, 1, 2, 1, 2, 1, 1},
    {2, 1, 2, 1, 2, 1, 1, 2, 1},
    {2, 1, 2, 1, 1, 2, 1, 2, 1},
    {2, 1, 1, 2, 1, 2, 1, 2, 1},
    {1, 2, 1, 2, 1, 2, 1, 2, 1},
    {1, 2, 1, 2, 1, 2, 1, 1, 2},
    {1, 2, 1, 2, 1, 1, 2, 1, 2},
    {1, 2, 1, 1, 2, 1, 2, 1, 2},
    {1, 1, 2, 1, 2, 1, 2, 1, 2},
}};

// E matrix e_{s,n} for g=3, b=13, j=2, t=1 (9 x 13).
inline const std::array<std::array<int, 13>, 9> kEMatrix = {{
    {0, 2, 4, 6, 8, 1, 3, 5, 7, 0, 2, 4, 6},
    {7, 0, 2, 4, 6, 8, 1, 3, 5, 7, 0, 2, 4},
    {5, 7, 0, 2, 4, 6, 8, 1, 3, 5, 7, 0, 2},
    {3, 5, 7, 0, 2, 4, 6, 8, 1, 3, 5, 7, 0},
    {1, 3, 5, 7, 0, 2, 4, 6, 8, 1, 3, 5, 7},
    {8, 1, 3, 5, 7, 0, 2, 4, 6, 8, 1, 3, 5},
    {6, 8, 1, 3, 5, 7, 0, 2, 4, 6, 8, 1, 3},
    {4, 6, 8, 1, 3, 5, 7, 0, 2, 4, 6, 8, 1},
    {2, 4, 6, 8, 1, 3, 5, 7, 0, 2, 4, 6, 8},
}};

// Frequency vectors of 7/13^k in base 3, j=2, k = 1..5.
inline const std::array<std::array<long, 9>, 5> kFrequencyTable = {{
    {0, 0, 0, 0, 1, 1, 0, 1, 0},
    {3, 6, 3, 5, 4, 5, 4, 4, 5},
    {56, 56, 56, 57, 57, 56, 55, 57, 57},
    {732, 732, 732, 732, 733, 733, 732, 733, 732},
    {9519, 9522, 9519, 9521, 9520, 9521, 9520, 9520, 9521},
}};

// S_3(7/13^2, 2): the 39 list numbers of 2-words.
inline const std::array<int, 39> kS169 = {
    0, 1, 3, 1, 3, 0, 1, 5, 6, 2, 7, 4, 3, 0, 1, 3, 2, 7, 4, 4,
    4, 5, 6, 1, 5, 8, 8, 6, 1, 5, 7, 3, 2, 7, 5, 8, 8, 8, 6};

inline const char* kF169 = "0010100120211001021111201222012102122220";

}  // namespace fixtures
