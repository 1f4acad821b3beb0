#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "heptad/plucker.hpp"
#include "heptad/polar.hpp"

namespace heptad::mermin {

// Four commuting classes summing to zero: a heptad plane with one of its
// seven lines removed. The sign is the exponent of the product of the four
// Hermitian representatives (Y = iZX), which is +-III.
struct Edge {
  std::array<uint8_t, 4> pts;  // ascending
  uint64_t pmask;
  uint16_t plane;  // owning heptad index
  uint8_t sign;
};

// All 945 edges, sorted by point mask.
std::vector<Edge> affine_edges(const std::vector<polar::Plane>& planes);

int edge_sign(const std::array<uint8_t, 4>& pts);

// Five edges pairwise sharing a single point, the ten intersection points
// distinct; every point then lies on exactly two edges. Magic when the
// number of negative edges is odd.
struct Pentagram {
  std::array<uint16_t, 5> edges;  // ascending indices into the edge list
  std::array<uint8_t, 10> pts;    // ascending
  uint8_t negative_edges;
  bool symmetric;  // all ten points symmetric

  bool operator==(const Pentagram& o) const { return edges == o.edges; }
  bool operator<(const Pentagram& o) const { return edges < o.edges; }
};

struct Enumeration {
  std::vector<Pentagram> magic;  // sorted by edge index tuple
  uint64_t valid_total = 0;      // incidence-valid five-edge sets
  uint64_t even_parity = 0;      // valid but with an even negative count
};

Enumeration enumerate_pentagrams(const std::vector<Edge>& edges, int threads = 1);

// Parent planes of the five edges, as four-qubit labels in edge order.
std::array<uint8_t, 5> pentad_of(const Pentagram& p, const std::vector<Edge>& edges,
                                 const pluck::Bijection& bij);

// Whether the five pentad classes multiply to the identity class.
bool pentad_is_identity(const std::array<uint8_t, 5>& pentad);

// Build the pentagram whose edges are the pairwise intersections of the five
// heptads labelled by a pentad of four-qubit classes. Preconditions (pairwise
// commuting, no three classes collinear, product the identity class) and
// construction failures are reported through `err`; returns false on any.
bool pentagram_from_pentad(const std::array<uint8_t, 5>& pentad, const pluck::Bijection& bij,
                           const std::vector<Edge>& edges, Pentagram* out, std::string* err);

// The 336 all-symmetric pentads in closed form: for each of the two letter
// systems (X and Z), 112 pentads from the 28 point/line anti-flags of the
// single-letter Fano plane and 56 from its 7 quadrangles.
std::vector<std::array<uint8_t, 5>> symmetric_pentads();

}  // namespace heptad::mermin
