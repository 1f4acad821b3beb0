#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string_view>

namespace heptad::gf2 {

inline int parity(uint32_t x) { return std::popcount(x) & 1; }

// Row-major bit matrix over GF(2), at most 8x8. Entry (i,j) is bit j of
// row[i]. Vectors are row vectors acted on from the right: v*M is the XOR
// of the rows of M selected by the bits of v.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::array<uint8_t, 8> row{};

  bool operator==(const Mat&) const = default;
};

Mat identity(int n);

// Rows written as '0'/'1' strings, first character = column 0.
Mat from_rows(std::initializer_list<std::string_view> rows);

Mat mul(const Mat& a, const Mat& b);
Mat add(const Mat& a, const Mat& b);
Mat transpose(const Mat& m);
Mat mpow(Mat m, int e);

inline uint32_t apply(uint32_t v, const Mat& m) {
  uint32_t r = 0;
  for (int i = 0; i < m.rows; ++i)
    if (v >> i & 1) r ^= m.row[i];
  return r;
}

// One byte per row; valid as a hash/set key for fixed dimensions.
uint64_t pack(const Mat& m);
Mat unpack(uint64_t key, int rows, int cols);

// Reduced row echelon form, zero rows last. Two matrices of equal shape
// have equal rref iff they have equal row spaces, so rref output is used
// as the canonical subspace representative throughout.
Mat rref(Mat m);
int rank(const Mat& m);

// Square nonsingular input required; asserts otherwise.
Mat inverse(const Mat& m);

// 3x3 only. adj3 is the adjugate (transposed cofactor matrix), so
// m * adj3(m) = det3(m) * I.
int det3(const Mat& m);
Mat adj3(const Mat& m);
int trace(const Mat& m);

}  // namespace heptad::gf2
