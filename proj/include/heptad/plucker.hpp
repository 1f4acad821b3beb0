#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heptad/gf2.hpp"
#include "heptad/polar.hpp"

namespace heptad::pluck {

// The 20 coordinates of a 3-subspace are the 3x3 column minors of any basis,
// indexed by ascending column triples in lexicographic order. GF(2) kills
// the basis-change determinant, so the embedding is well defined without
// projectivizing.
inline constexpr std::array<std::array<int, 3>, 20> kTriples = {{
    {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 5}, {1, 3, 6},
    {1, 4, 5}, {1, 4, 6}, {1, 5, 6}, {2, 3, 4}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5},
    {2, 4, 6}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6},
}};

int triple_index(int mu, int nu, int rho);

uint32_t embed(const polar::Plane& p);

// Scalar pair and matrix pair view of a coordinate vector. For a plane with
// basis (A|B): m = Det A, M = adj(B) A, N = adj(A) B, n = Det B.
struct FourTuple {
  int m = 0, n = 0;
  gf2::Mat M{3, 3, {}}, N{3, 3, {}};
};

FourTuple view(uint32_t p);
FourTuple abmn(const polar::Plane& p);
uint32_t from_view(const FourTuple& t);

// Grassmann relations: mM = adj(N), nN = adj(M), MN = mn I. Nonzero
// solutions are exactly the images of the 1395 3-subspaces.
bool separable(uint32_t p);

// M and N symmetric; combined with separability this carves out the images
// of the 135 heptad planes.
bool primitive(uint32_t p);

// Bilinear and quadratic form of the ambient 20-dim space. The whole
// Grassmannian image lies on the ambient quadric; on primitive vectors the
// forms collapse onto the 8 four-qubit coordinates, so isotropy of planes is
// read off the four-qubit Q0, not the ambient one.
int ambient_b(uint32_t p, uint32_t q);
int ambient_q0(uint32_t p);

// (a1..a4, b1..b4) = (m, M11, M22, M33, n, N11, N22, N33).
uint8_t four_qubit_of(uint32_t p);

uint8_t plane_to_four_qubit(const polar::Plane& p);

// Two-way table between the 135 heptad planes and their four-qubit labels.
struct Bijection {
  explicit Bijection(const std::vector<polar::Plane>& planes);

  const std::vector<polar::Plane>& planes;
  std::vector<uint8_t> image;        // plane index -> four-qubit vector
  std::array<int16_t, 256> preimage;  // four-qubit vector -> plane index or -1

  const polar::Plane& plane_of(uint8_t fourqubit) const;
};

// four_qubit_of(embed(p g)) == four_qubit_of(embed(p)) h for every plane.
bool equivariant(const std::vector<polar::Plane>& planes, const gf2::Mat& g,
                 const gf2::Mat& h);

}  // namespace heptad::pluck
