#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "heptad/gf2.hpp"

namespace heptad::pauli {

// A width-n real Pauli class is a 2n-bit row vector (a_1..a_n, b_1..b_n):
// bit i-1 is a_i, bit n+i-1 is b_i. Qubit i carries the letter Z^{a_i}X^{b_i},
// so (a,b) = 00,01,11,10 reads I,X,Y,Z. A signed operator is a class plus an
// explicit sign exponent; the class representative has sign 0.
struct Op {
  uint32_t v = 0;
  uint8_t sign = 0;

  bool operator==(const Op&) const = default;
};

inline uint32_t amask(uint32_t v, int n) { return v & ((1u << n) - 1); }
inline uint32_t bmask(uint32_t v, int n) { return (v >> n) & ((1u << n) - 1); }

// 0=I, 1=X, 2=Z, 3=Y for qubit i (0-based).
inline int letter(uint32_t v, int n, int i) {
  return int(v >> i & 1) << 1 | int(v >> (n + i) & 1);
}

// Symplectic product: 0 when the classes commute, 1 when they anticommute.
inline int symplectic(uint32_t u, uint32_t v, int n) {
  return gf2::parity((amask(u, n) & bmask(v, n)) ^ (bmask(u, n) & amask(v, n)));
}

// Quadratic form whose zero set is the symmetric classes; its polarization
// is the symplectic product. Value 1 means an odd number of Y letters.
inline int q0(uint32_t v, int n) { return gf2::parity(amask(v, n) & bmask(v, n)); }

inline int qform(uint32_t w, uint32_t v, int n) { return q0(v, n) ^ symplectic(w, v, n); }

// Signed product. The sign accumulates x.sign + y.sign + sum_i a_i(y) b_i(x).
Op product(Op x, Op y, int n);

// Accepts an optional '+'/'-' prefix followed by letters IXYZ. Width is the
// letter count; throws std::invalid_argument on anything else.
Op parse(std::string_view label, int* width);

// Parse with a required width.
Op parse(std::string_view label, int n);

std::string format(Op x, int n);
std::string format(uint32_t v, int n);

// "(a_1..a_n b_1..b_n)" with no separator between halves.
std::string bitstring(uint32_t v, int n);

}  // namespace heptad::pauli
