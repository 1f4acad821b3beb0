#pragma once

#include <array>
#include <string_view>

// Pinned reference data used by the verify suites and the tests. Operator
// strings keep the engine-independent ground truth in one place; everything
// here is cross-checked computationally before being trusted by callers.

namespace heptad::tables {

struct BijectionRow {
  std::array<std::string_view, 7> heptad;  // three-qubit classes
  std::string_view image;                  // four-qubit class
  bool through_yxz;                        // one of the 15 heptads through YXZ
};

// Representative heptads with their four-qubit labels: the 15 heptads
// through YXZ, then four single-orbit Steiner heptads, then the two
// shift-invariant Steiner heptads.
inline constexpr std::array<BijectionRow, 21> kBijection = {{
    {{"YXZ", "IYX", "YII", "IZY", "YZY", "IXZ", "YYX"}, "YYXZ", true},
    {{"YXZ", "IYX", "XXY", "ZYI", "YZY", "ZIX", "XZZ"}, "YIYX", true},
    {{"YXZ", "ZYZ", "IZY", "XIY", "XZI", "YYX", "ZXX"}, "YIZY", true},
    {{"YXZ", "YZX", "YII", "YYY", "IYY", "IXZ", "IZX"}, "YYII", true},
    {{"YXZ", "IYX", "XYI", "ZXY", "YZY", "ZZZ", "XIX"}, "IYZY", true},
    {{"YXZ", "YIZ", "YII", "YXI", "IXI", "IXZ", "IIZ"}, "IIXZ", true},
    {{"YXZ", "XYZ", "ZIY", "IZY", "ZZI", "XXX", "YYX"}, "IYYX", true},
    {{"YXZ", "YZX", "ZIY", "ZYI", "IYY", "XXX", "XZZ"}, "XXYY", true},
    {{"YXZ", "ZYZ", "ZXY", "YYY", "XZI", "XIX", "IZX"}, "XXZX", true},
    {{"YXZ", "YIZ", "XXY", "XIY", "IXI", "ZIX", "ZXX"}, "XZXI", true},
    {{"YXZ", "XYZ", "XXY", "YYY", "ZZI", "ZIX", "IZX"}, "ZZZX", true},
    {{"YXZ", "YZX", "XYI", "XIY", "IYY", "ZZZ", "ZXX"}, "ZZYY", true},
    {{"YXZ", "ZYZ", "ZYI", "YXI", "XZI", "XZZ", "IIZ"}, "ZXIZ", true},
    {{"YXZ", "XYZ", "XYI", "YXI", "ZZI", "ZZZ", "IIZ"}, "ZXXI", true},
    {{"YXZ", "YIZ", "ZIY", "ZXY", "IXI", "XXX", "XIX"}, "XZIZ", true},
    {{"XYY", "IYY", "XII", "XZX", "IXZ", "XXZ", "IZX"}, "XXII", false},
    {{"XZI", "ZYY", "YXY", "XIZ", "IZZ", "YYX", "ZXX"}, "ZIZZ", false},
    {{"ZII", "IZI", "ZZI", "IIX", "ZIX", "IZX", "ZZX"}, "IIIX", false},
    {{"XXI", "IXI", "XII", "XIZ", "IXZ", "XXZ", "IIZ"}, "IIIZ", false},
    {{"XXI", "IIX", "IXX", "XIX", "XII", "XXX", "IXI"}, "XIII", false},
    {{"ZII", "ZZZ", "IZI", "IZZ", "ZIZ", "IIZ", "ZZI"}, "ZIII", false},
}};

// Image of the first row's heptad after one label shift.
inline constexpr std::array<std::string_view, 7> kShiftedFirstHeptad = {
    "IIY", "XZY", "YYY", "ZXY", "XZI", "YYI", "ZXI"};
inline constexpr std::string_view kShiftedFirstImage = "YIIY";

// Shift orbits of the 63 classes, in cycle order.
inline constexpr std::array<std::array<std::string_view, 7>, 9> kShiftOrbits = {{
    {"IIY", "ZYX", "YIX", "YZZ", "XYX", "IYZ", "YXZ"},
    {"ZYZ", "XYI", "IZY", "ZXY", "XIY", "YZI", "YXX"},
    {"YIZ", "XXY", "ZYI", "YXI", "ZZY", "IYX", "XZY"},
    {"YZX", "YII", "YYY", "IYI", "XYZ", "ZIY", "IXY"},
    {"XYY", "ZXZ", "XXZ", "ZZX", "ZXX", "YZY", "XZI"},
    {"YIY", "XIZ", "YYX", "ZXI", "YYZ", "IZX", "IYY"},
    {"ZYY", "XZX", "XZZ", "YXY", "IXZ", "YYI", "ZIX"},
    {"XXI", "IIX", "IXX", "XIX", "XII", "XXX", "IXI"},
    {"ZII", "ZZZ", "IZI", "IZZ", "ZIZ", "IIZ", "ZZI"},
}};

// Index-set labels of the same orbits, digit strings in cycle order.
inline constexpr std::array<std::array<std::string_view, 7>, 9> kShiftOrbitLabels = {{
    {"1", "2", "3", "4", "5", "6", "7"},
    {"12", "23", "34", "45", "56", "67", "17"},
    {"13", "24", "35", "46", "57", "16", "27"},
    {"14", "25", "36", "47", "15", "26", "37"},
    {"123", "234", "345", "456", "567", "167", "127"},
    {"125", "236", "347", "145", "256", "367", "147"},
    {"135", "246", "357", "146", "257", "136", "247"},
    {"124", "235", "346", "457", "156", "267", "137"},
    {"126", "237", "134", "245", "356", "467", "157"},
}};

// Class swaps induced by the ZZX transvection, as index-set label pairs;
// every class not listed (31 of them) is fixed.
inline constexpr std::array<std::array<std::string_view, 2>, 16> kTransvectionSwaps = {{
    {"123", "7"}, {"237", "1"}, {"137", "2"}, {"127", "3"},
    {"14", "156"}, {"15", "146"}, {"16", "145"},
    {"24", "256"}, {"25", "246"}, {"26", "245"},
    {"34", "356"}, {"35", "346"}, {"36", "345"},
    {"47", "567"}, {"57", "467"}, {"67", "457"},
}};

// Orbit of IIY under the 6x6 shift generator, as coordinate bit strings.
inline constexpr std::array<std::string_view, 7> kShiftVectorCycle = {
    "001001", "110011", "100101", "111100", "010111", "011010", "101110"};

// One system of 15 generator planes of the three-qubit quadric, by
// four-qubit label; the other system is the X<->Z letter swap.
inline constexpr std::array<std::string_view, 15> kQuadricSystem = {
    "XXII", "XXXX", "XIXI", "XXXI", "XIIX", "XIXX", "XXIX",
    "IIIX", "IIXX", "IXIX", "IXII", "IXXX", "IIXI", "IXXI", "XIII"};

// Spot contents for two of them.
inline constexpr std::array<std::string_view, 7> kQuadricPlaneXXXX = {
    "XXX", "ZXZ", "YIY", "XZZ", "YYI", "ZZX", "IYY"};
inline constexpr std::array<std::string_view, 7> kQuadricPlaneIIXI = {
    "IXI", "IIZ", "ZII", "ZIZ", "IXZ", "ZXI", "ZXZ"};

// Nine pairwise anticommuting four-qubit classes whose heptads partition
// the 63 points.
inline constexpr std::array<std::string_view, 9> kOvoid = {
    "YXZY", "YYII", "IZXX", "IZXZ", "YZIY", "IXXI", "IXYY", "ZIZI", "XIZI"};

struct PentagramRow {
  std::array<std::string_view, 5> pentad;                 // four-qubit classes
  std::array<std::array<std::string_view, 4>, 5> edges;   // three-qubit classes
};

// Worked pentagrams: the canonical one, a second member of its family, and
// the image of the canonical one under the ZZX transvection companion.
inline constexpr std::array<PentagramRow, 3> kPentagrams = {{
    {{"XXXX", "XIII", "IXII", "IIXI", "IIIX"},
     {{{"XXX", "ZZX", "ZXZ", "XZZ"},
       {"XXX", "IIX", "XII", "IXI"},
       {"XZZ", "IIZ", "XII", "IZI"},
       {"ZII", "ZZX", "IIX", "IZI"},
       {"ZXZ", "IIZ", "ZII", "IXI"}}}},
    {{"XIII", "XXXX", "IXXI", "IIXI", "IIXX"},
     {{{"XXX", "YYI", "IYY", "ZXZ"},
       {"XXX", "XXI", "IXI", "IXX"},
       {"ZXZ", "ZII", "IXI", "IIZ"},
       {"ZZZ", "YYI", "XXI", "IIZ"},
       {"ZZZ", "IYY", "ZII", "IXX"}}}},
    {{"IIIX", "ZZXI", "ZXZI", "XXXX", "XZZI"},
     {{{"ZII", "IZI", "IIX", "ZZX"},
       {"ZYX", "ZZY", "ZXZ", "ZII"},
       {"YZX", "ZZY", "IZI", "XZZ"},
       {"XXX", "ZXZ", "XZZ", "ZZX"},
       {"ZYX", "YZX", "IIX", "XXX"}}}},
}};

// Hexagon worked lines: the seed pencil with its shared heptad line, and a
// plane-star with its shared point.
inline constexpr std::array<std::string_view, 3> kHexSeed = {"IXIX", "IIZI", "IXZX"};
inline constexpr std::array<std::string_view, 3> kHexSeedCore = {"XIX", "XZX", "IZI"};
inline constexpr std::array<std::string_view, 3> kHexStar = {"XXII", "XXXX", "IIXX"};
inline constexpr std::string_view kHexStarCore = "IYY";

}  // namespace heptad::tables
