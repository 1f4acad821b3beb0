#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heptad/polar.hpp"

namespace heptad::cliff {

// The seven pairwise anticommuting generators. Products of distinct
// generators, taken up to sign, label every nonzero class exactly once
// using index sets of size 1, 2 or 3.
inline constexpr std::array<std::string_view, 7> kGammaLabels = {
    "IIY", "ZYX", "YIX", "YZZ", "XYX", "IYZ", "YXZ"};

// Vector of generator i, 1-based.
uint8_t gamma_vector(int i);

// Index-set labels are 7-bit masks: bit i-1 set means generator i occurs.
uint8_t label_of(uint8_t v);
uint8_t vector_of(uint8_t label);

// Symmetric difference, reduced to size <= 3 via the complement (the full
// product of all seven generators is the identity class).
uint8_t product_label(uint8_t l1, uint8_t l2);

// "167" style strings, ascending digits.
std::string label_string(uint8_t label);
uint8_t parse_label(std::string_view s);

// Size 1 and 2 labels are antisymmetric classes, size 3 symmetric.
inline int label_size(uint8_t label) { return std::popcount(uint32_t(label)); }

// The orbits of the 63 labels under the cyclic shift i -> i+1 (mod 7).
// Nine cycles of length 7; each starts at its smallest label mask and the
// orbit list is sorted by that representative.
std::vector<std::array<uint8_t, 7>> alpha_label_orbits();

enum class PlaneClass { Mixed, Steiner };

// Mixed: 4 antisymmetric + 3 symmetric points. Steiner: 7 symmetric.
PlaneClass classify(const polar::Plane& p);

std::vector<uint16_t> planes_through(uint8_t v, const std::vector<polar::Plane>& planes);

}  // namespace heptad::cliff
