#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heptad/plucker.hpp"

namespace heptad::hexagon {

// Four-qubit vector of the distinguished antisymmetric class YIII.
uint8_t axis();

// The 63 symmetric four-qubit classes commuting with the axis: 28 with a Y
// on the first qubit, 35 with an I. Ascending.
std::vector<uint8_t> points();

struct HLine {
  std::array<uint8_t, 3> pts;  // ascending; XOR of any two gives the third

  bool operator==(const HLine&) const = default;
  bool operator<(const HLine& o) const { return pts < o.pts; }
};

// The 63 lines: orbit of the seed line {IXIX, IIZI, IXZX} under the two
// 8x8 generators fixing the axis. Falls back to orbit-decomposing all
// candidate lines and picking the unique 63-orbit passing the axioms if the
// seed orbit ever comes out wrong.
std::vector<HLine> lines();

struct Axioms {
  size_t n_points = 0;
  size_t n_lines = 0;
  bool three_points_per_line = false;
  bool three_lines_per_point = false;
  bool connected = false;
  int girth = 0;     // of the bipartite incidence graph
  int diameter = 0;  // of the bipartite incidence graph

  bool ok() const {
    return n_points == 63 && n_lines == 63 && three_points_per_line &&
           three_lines_per_point && connected && girth == 12 && diameter == 6;
  }
};

Axioms verify(const std::vector<uint8_t>& pts, const std::vector<HLine>& lns);

enum class LineClass { Pencil, PlaneStar };

struct LineInfo {
  LineClass cls;
  // Pencil: the three points of the common line of the three heptads.
  // PlaneStar: the single common point.
  std::vector<uint8_t> core;
};

LineInfo classify(const HLine& l, const pluck::Bijection& bij);

// Zero set of Q_w for antisymmetric w, split into (symmetric part,
// antisymmetric part); sizes are (63, 56) and the symmetric part consists of
// the symmetric classes commuting with w.
std::array<std::vector<uint8_t>, 2> elliptic_split(uint8_t w);

}  // namespace heptad::hexagon
