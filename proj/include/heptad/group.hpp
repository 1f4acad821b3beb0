#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "heptad/gf2.hpp"
#include "heptad/polar.hpp"

namespace heptad::grp {

using gf2::Mat;

// 6x6 generators acting on three-qubit class vectors (row vectors, right
// action). d_alpha cycles the seven anticommuting generator labels,
// d_beta is the transvection along ZZX, d_gamma extends <d_alpha> to the
// hexagon stabilizer.
Mat d_alpha();
Mat d_beta();
Mat d_gamma();

// 8x8 companions acting on four-qubit class vectors.
Mat r_alpha();
Mat r_beta();
Mat r_gamma();

// Block antidiagonal form matrix: <u,v> = u J v^T.
Mat symplectic_form(int n);

// S J S^T = J.
bool is_symplectic(const Mat& s);

// T_w: v -> v + <v,w> w, as a 6x6 matrix.
Mat transvection(uint8_t w);

int element_order(const Mat& m);

// Words over generators 'a' and 'b' with optional repeat digits and
// optional inverse quote: "ba2ba'b" = b a a b a^-1 b. Factors apply left
// to right (leftmost acts first on row vectors), which coincides with the
// matrix product in written order.
Mat evaluate_word(std::string_view word, const Mat& a, const Mat& b);

// Word over the first two generators landing in the hexagon stabilizer: in
// both representations its value lies in <alpha, gamma> and regenerates that
// subgroup together with alpha. It is a different element of the stabilizer
// than the printed gamma matrix (their Cayley distances differ), so the two
// agree at subgroup level, not elementwise.
inline constexpr std::string_view kGammaWord = "ba2baba3ba4b";

// Open-addressing set of packed matrices (key 0 is free: the zero matrix
// is never a group element).
class KeySet {
 public:
  explicit KeySet(size_t expected);
  bool insert(uint64_t k);
  bool contains(uint64_t k) const;
  size_t size() const { return count_; }
  // Ascending key list (deterministic regardless of insertion order).
  std::vector<uint64_t> sorted_keys() const;

 private:
  std::vector<uint64_t> slots_;
  uint64_t mask_;
  size_t count_ = 0;
};

// Breadth-first closure of the generated group, FIFO over right
// multiplication by the generators in the given order.
KeySet closure(std::span<const Mat> gens);

// Orbit of a vector under right multiplication, ascending.
std::vector<uint32_t> vector_orbit(std::span<const Mat> gens, uint32_t seed);

// Orbit of a plane; planes are tracked by canonical basis. Returns the
// ascending list of point masks.
std::vector<uint64_t> plane_orbit(std::span<const Mat> gens, const polar::Plane& seed);

// Defining relators of the rank-2 presentation used by both
// representations: a^7, b^2, (ba)^9, (ba^2)^12, [b,a]^3, [b,a^2]^2.
bool satisfies_presentation(const Mat& a, const Mat& b);

// Elements of the closure fixing the given row vector.
size_t count_fixing(const KeySet& group, int dim, uint32_t v);

}  // namespace heptad::grp
