#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace wasc::reference {

// Reference values of w_p(n) for n = 1..10.
struct TableRow {
  std::string_view pattern;
  std::array<std::uint64_t, 10> counts;
};

inline constexpr std::array<TableRow, 5> kSolvedRows{{
    {"001", {1, 2, 4, 8, 16, 32, 64, 128, 256, 512}},
    {"011", {1, 2, 5, 14, 43, 143, 510, 1936, 7775, 32869}},
    {"012", {1, 2, 5, 13, 34, 89, 233, 610, 1597, 4181}},
    {"021", {1, 2, 6, 21, 80, 322, 1347, 5798, 25512, 114236}},
    {"102", {1, 2, 6, 22, 89, 381, 1694, 7744, 36168, 171831}},
}};

inline constexpr std::array<TableRow, 8> kOpenRows{{
    {"000", {1, 2, 5, 15, 51, 194, 809, 3667, 17892, 93408}},
    {"010", {1, 2, 5, 15, 52, 202, 861, 3969, 19582, 102600}},
    {"100", {1, 2, 6, 22, 94, 452, 2398, 13832, 85838, 568412}},
    {"101", {1, 2, 6, 22, 93, 438, 2251, 12447, 73308, 456401}},
    {"110", {1, 2, 6, 22, 92, 424, 2112, 11229, 63174, 373692}},
    {"120", {1, 2, 6, 22, 91, 409, 1958, 9860, 51775, 281654}},
    {"201", {1, 2, 6, 23, 104, 528, 2919, 17225, 107022, 693327}},
    {"210", {1, 2, 6, 23, 104, 530, 2958, 17734, 112657, 750726}},
}};

// The thirteen patterns of length three, in numeric order.
inline constexpr std::array<std::string_view, 13> kLengthThreePatterns{
    "000", "001", "010", "011", "012", "021", "100", "101", "102", "110", "120", "201", "210"};

}  // namespace wasc::reference
