#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heptad/gf2.hpp"
#include "heptad/pauli.hpp"

namespace heptad::polar {

// Dimension of the three-qubit symplectic space.
inline constexpr int kWidth = 3;
inline constexpr int kPoints = 63;

struct Line {
  std::array<uint8_t, 3> pts;  // ascending
  uint64_t pmask;              // bit v set for each point v

  bool operator==(const Line&) const = default;
};

struct Plane {
  std::array<uint8_t, 3> basis;  // canonical rref rows
  std::array<uint8_t, 7> pts;    // ascending
  uint64_t pmask;

  bool operator==(const Plane& o) const { return pmask == o.pmask; }
};

// All 63 nonzero vectors, ascending.
std::vector<uint8_t> points();

Line line_through(uint8_t u, uint8_t v);
Plane plane_from_basis(uint8_t u, uint8_t v, uint8_t w);

bool is_isotropic_line(const Line& l);
bool is_isotropic_plane(const Plane& p);

// 315 lines whose points pairwise commute, resp. all 651 lines.
std::vector<Line> isotropic_lines();
std::vector<Line> all_lines();

// 135 planes whose points pairwise commute (the heptads), resp. all 1395
// 3-subspaces. Sorted by canonical basis bit pattern.
std::vector<Plane> heptad_planes();
std::vector<Plane> all_3subspaces();

// The 7 lines inside a plane.
std::vector<Line> lines_of(const Plane& p);

// Vectors commuting with every point of set_mask (zero vector excluded).
uint64_t perp_mask(uint64_t set_mask);

// Nonzero v of width n with Q_w(v) = 0, ascending. w = 0 gives the Q0 quadric.
std::vector<uint32_t> quadric_points(uint32_t w, int n);

// Number of shared points between two planes: 0, 1, 3 or 7.
int plane_incidence(const Plane& a, const Plane& b);

// Heptad planes all of whose points are symmetric; these are the generator
// planes of the Q0 quadric.
std::vector<uint16_t> quadric_plane_indices(const std::vector<Plane>& planes);

// Partition of the quadric planes into the two 15-member systems: planes in
// the same system share exactly one point, planes across systems share zero
// or three. Returns the two index lists, the one containing the smallest
// index first.
std::array<std::vector<uint16_t>, 2> quadric_plane_systems(const std::vector<Plane>& planes);

// Partitions of the 63 points into 9 pairwise disjoint heptad planes.
// Each spread is the ascending list of plane indices; the result is sorted.
std::vector<std::array<uint16_t, 9>> spreads(const std::vector<Plane>& planes);

bool is_spread(const std::vector<Plane>& planes, const std::array<uint16_t, 9>& idx);

}  // namespace heptad::polar
