#pragma once

// Published survey values: for each vertex count, the maximal Wiener
// (r,s)-complexity over all (IPR) fullerene isomers and the number of
// isomers attaining it. Columns follow default_rs_pairs(): (1,1), (2,2),
// (1,2), (3,3), (2,3), (1,3). These are regression fixtures only; nothing
// in the library derives results from them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace fullerene::reference {

struct ReferenceCell {
  std::size_t c_max;
  std::uint64_t count;
};

struct ReferenceRow {
  std::size_t n;
  ReferenceCell cells[6];
};

inline constexpr ReferenceRow kGeneralTable[] = {
    {20, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}},
    {24, {{2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}, {2, 1}}},
    {26, {{2, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}, {3, 1}}},
    {28, {{5, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 1}}},
    {30, {{7, 1}, {8, 1}, {8, 1}, {8, 1}, {8, 1}, {8, 1}}},
    {32, {{9, 1}, {11, 1}, {11, 1}, {11, 1}, {11, 1}, {11, 1}}},
    {34, {{10, 2}, {12, 1}, {12, 1}, {12, 1}, {12, 1}, {12, 1}}},
    {36, {{14, 1}, {20, 1}, {20, 1}, {20, 1}, {20, 1}, {20, 1}}},
    {38, {{18, 1}, {22, 1}, {22, 1}, {22, 1}, {22, 1}, {22, 1}}},
    {40, {{19, 1}, {25, 1}, {25, 1}, {25, 1}, {25, 1}, {25, 1}}},
    {42, {{22, 1}, {30, 1}, {30, 1}, {30, 1}, {30, 1}, {30, 1}}},
    {44, {{25, 1}, {32, 1}, {32, 1}, {32, 2}, {32, 2}, {32, 2}}},
    {46, {{25, 4}, {37, 1}, {37, 1}, {37, 1}, {37, 1}, {37, 1}}},
    {48, {{30, 1}, {41, 1}, {39, 1}, {41, 1}, {41, 1}, {41, 1}}},
    {50, {{35, 1}, {42, 2}, {42, 2}, {42, 4}, {42, 2}, {42, 4}}},
    {52, {{36, 1}, {46, 2}, {46, 1}, {47, 1}, {46, 2}, {47, 1}}},
    {54, {{37, 1}, {50, 2}, {48, 2}, {51, 1}, {51, 1}, {51, 1}}},
    {56, {{40, 1}, {52, 1}, {51, 2}, {52, 3}, {52, 3}, {52, 3}}},
    {58, {{43, 2}, {57, 1}, {55, 1}, {57, 1}, {56, 2}, {57, 1}}},
    {60, {{44, 3}, {58, 1}, {57, 2}, {58, 3}, {58, 2}, {58, 3}}},
    {62, {{46, 3}, {60, 2}, {59, 4}, {62, 1}, {62, 1}, {62, 1}}},
    {64, {{49, 5}, {64, 1}, {63, 1}, {64, 2}, {64, 2}, {64, 2}}},
    {66, {{50, 2}, {65, 5}, {65, 1}, {66, 2}, {66, 2}, {66, 2}}},
    {68, {{56, 1}, {67, 5}, {66, 7}, {68, 1}, {68, 1}, {68, 1}}},
    {70, {{56, 1}, {69, 7}, {69, 1}, {70, 9}, {70, 9}, {70, 9}}},
    {72, {{56, 6}, {72, 2}, {71, 4}, {72, 18}, {72, 16}, {72, 18}}},
    {74, {{61, 1}, {74, 4}, {73, 3}, {74, 24}, {74, 19}, {74, 26}}},
    {76, {{63, 1}, {76, 2}, {76, 1}, {76, 53}, {76, 50}, {76, 55}}},
    {78, {{64, 2}, {78, 14}, {78, 1}, {78, 86}, {78, 72}, {78, 92}}},
    {80, {{66, 2}, {80, 14}, {80, 2}, {80, 169}, {80, 140}, {80, 174}}},
    {82, {{71, 1}, {82, 22}, {82, 3}, {82, 286}, {82, 251}, {82, 299}}},
    {84, {{70, 2}, {84, 52}, {84, 11}, {84, 483}, {84, 416}, {84, 505}}},
    {86, {{73, 3}, {86, 69}, {86, 14}, {86, 818}, {86, 672}, {86, 856}}},
    {88, {{73, 7}, {88, 132}, {88, 16}, {88, 1305}, {88, 1058}, {88, 1345}}},
    {90, {{79, 1}, {90, 154}, {90, 36}, {90, 2024}, {90, 1641}, {90, 2104}}},
    {92, {{80, 1}, {92, 247}, {92, 38}, {92, 3108}, {92, 2472}, {92, 3292}}},
    {94, {{82, 1}, {94, 385}, {94, 73}, {94, 4836}, {94, 3782}, {94, 5052}}},
    {96, {{84, 2}, {96, 511}, {96, 86}, {96, 6932}, {96, 5396}, {96, 7366}}},
    {98, {{86, 1}, {98, 697}, {98, 111}, {98, 9800}, {98, 7623}, {98, 10493}}},
    {100, {{89, 1}, {100, 923}, {100, 147}, {100, 13870}, {100, 10627}, {100, 14886}}},
};
inline constexpr ReferenceRow kIprTable[] = {
    {60, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}},
    {70, {{5, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 1}, {5, 1}}},
    {72, {{4, 1}, {4, 1}, {4, 1}, {4, 1}, {4, 1}, {4, 1}}},
    {74, {{6, 1}, {9, 1}, {9, 1}, {9, 1}, {9, 1}, {9, 1}}},
    {76, {{13, 1}, {17, 1}, {17, 1}, {17, 1}, {17, 1}, {17, 1}}},
    {78, {{14, 1}, {17, 2}, {17, 2}, {18, 1}, {18, 1}, {18, 1}}},
    {80, {{17, 1}, {20, 1}, {19, 1}, {21, 1}, {21, 1}, {21, 1}}},
    {82, {{19, 1}, {32, 1}, {30, 1}, {33, 1}, {33, 1}, {33, 1}}},
    {84, {{25, 1}, {37, 1}, {35, 1}, {37, 1}, {37, 1}, {37, 1}}},
    {86, {{39, 1}, {62, 1}, {58, 3}, {65, 2}, {64, 2}, {65, 2}}},
    {88, {{36, 1}, {69, 1}, {65, 1}, {70, 1}, {70, 1}, {70, 1}}},
    {90, {{39, 2}, {71, 1}, {69, 1}, {73, 2}, {73, 1}, {73, 2}}},
    {92, {{41, 1}, {80, 1}, {76, 1}, {84, 1}, {84, 1}, {84, 1}}},
    {94, {{48, 1}, {82, 1}, {80, 2}, {84, 2}, {84, 2}, {84, 2}}},
    {96, {{49, 1}, {85, 1}, {81, 2}, {87, 5}, {87, 3}, {87, 6}}},
    {98, {{55, 1}, {87, 1}, {85, 2}, {91, 3}, {91, 2}, {91, 3}}},
    {100, {{55, 3}, {90, 2}, {90, 1}, {95, 1}, {95, 1}, {95, 1}}},
    {102, {{59, 1}, {94, 4}, {92, 1}, {98, 2}, {98, 1}, {98, 2}}},
    {104, {{65, 1}, {97, 2}, {99, 1}, {101, 1}, {100, 9}, {101, 2}}},
    {106, {{69, 1}, {101, 2}, {101, 1}, {104, 4}, {103, 9}, {104, 3}}},
    {108, {{70, 1}, {103, 2}, {102, 3}, {107, 3}, {107, 2}, {107, 2}}},
    {110, {{72, 1}, {108, 1}, {106, 2}, {110, 1}, {110, 1}, {110, 1}}},
    {112, {{74, 1}, {108, 3}, {109, 2}, {112, 1}, {111, 8}, {112, 1}}},
    {114, {{76, 2}, {112, 4}, {110, 1}, {114, 4}, {114, 2}, {114, 4}}},
    {116, {{80, 2}, {114, 2}, {113, 1}, {116, 11}, {116, 6}, {116, 15}}},
    {118, {{81, 1}, {116, 2}, {117, 1}, {118, 32}, {118, 26}, {118, 32}}},
    {120, {{87, 1}, {119, 1}, {118, 2}, {120, 39}, {120, 34}, {120, 47}}},
    {122, {{89, 2}, {121, 4}, {120, 4}, {122, 73}, {122, 49}, {122, 82}}},
    {124, {{91, 2}, {124, 1}, {122, 8}, {124, 146}, {124, 100}, {124, 164}}},
    {126, {{93, 1}, {126, 1}, {125, 1}, {126, 262}, {126, 164}, {126, 268}}},
    {128, {{96, 1}, {128, 6}, {127, 4}, {128, 409}, {128, 270}, {128, 416}}},
    {130, {{97, 3}, {130, 4}, {130, 1}, {130, 739}, {130, 466}, {130, 728}}},
    {132, {{100, 2}, {132, 5}, {132, 1}, {132, 1246}, {132, 749}, {132, 1235}}},
    {134, {{102, 2}, {134, 14}, {134, 3}, {134, 2000}, {134, 1314}, {134, 1929}}},
    {136, {{105, 1}, {136, 18}, {136, 1}, {136, 3020}, {136, 1831}, {136, 2966}}},
};

inline std::span<const ReferenceRow> table(bool ipr) {
  if (ipr) return kIprTable;
  return kGeneralTable;
}

inline std::optional<ReferenceRow> find(std::size_t n, bool ipr) {
  for (const auto& row : table(ipr))
    if (row.n == n) return row;
  return std::nullopt;
}

}  // namespace fullerene::reference
