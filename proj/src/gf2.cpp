#include "heptad/gf2.hpp"

#include <cassert>

namespace heptad::gf2 {

Mat identity(int n) {
  Mat m{n, n, {}};
  for (int i = 0; i < n; ++i) m.row[i] = uint8_t(1u << i);
  return m;
}

Mat from_rows(std::initializer_list<std::string_view> rows) {
  Mat m;
  m.rows = int(rows.size());
  m.cols = int(rows.begin()->size());
  int i = 0;
  for (auto r : rows) {
    assert(int(r.size()) == m.cols);
    uint8_t bits = 0;
    for (int j = 0; j < m.cols; ++j) {
      assert(r[j] == '0' || r[j] == '1');
      if (r[j] == '1') bits |= uint8_t(1u << j);
    }
    m.row[i++] = bits;
  }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  assert(a.cols == b.rows);
  Mat c{a.rows, b.cols, {}};
  for (int i = 0; i < a.rows; ++i) {
    uint8_t acc = 0;
    for (int j = 0; j < a.cols; ++j)
      if (a.row[i] >> j & 1) acc ^= b.row[j];
    c.row[i] = acc;
  }
  return c;
}

Mat add(const Mat& a, const Mat& b) {
  assert(a.rows == b.rows && a.cols == b.cols);
  Mat c = a;
  for (int i = 0; i < a.rows; ++i) c.row[i] ^= b.row[i];
  return c;
}

Mat transpose(const Mat& m) {
  Mat t{m.cols, m.rows, {}};
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.row[i] >> j & 1) t.row[j] |= uint8_t(1u << i);
  return t;
}

Mat mpow(Mat m, int e) {
  assert(m.rows == m.cols && e >= 0);
  Mat r = identity(m.rows);
  while (e) {
    if (e & 1) r = mul(r, m);
    m = mul(m, m);
    e >>= 1;
  }
  return r;
}

uint64_t pack(const Mat& m) {
  uint64_t k = 0;
  for (int i = 0; i < m.rows; ++i) k |= uint64_t(m.row[i]) << (8 * i);
  return k;
}

Mat unpack(uint64_t key, int rows, int cols) {
  Mat m{rows, cols, {}};
  for (int i = 0; i < rows; ++i) m.row[i] = uint8_t(key >> (8 * i));
  return m;
}

Mat rref(Mat m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.row[i] >> c & 1) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m.row[r], m.row[pivot]);
    for (int i = 0; i < m.rows; ++i)
      if (i != r && (m.row[i] >> c & 1)) m.row[i] ^= m.row[r];
    ++r;
  }
  return m;
}

int rank(const Mat& m) {
  Mat e = rref(m);
  int r = 0;
  for (int i = 0; i < m.rows; ++i)
    if (e.row[i]) ++r;
  return r;
}

Mat inverse(const Mat& m) {
  assert(m.rows == m.cols);
  int n = m.rows;
  // Gauss-Jordan on rows augmented with the identity in the high bits.
  std::array<uint16_t, 8> aug{};
  for (int i = 0; i < n; ++i)
    aug[i] = uint16_t(m.row[i] | (1u << (n + i)));
  int r = 0;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = r; i < n; ++i)
      if (aug[i] >> c & 1) {
        pivot = i;
        break;
      }
    assert(pivot >= 0 && "singular matrix");
    std::swap(aug[r], aug[pivot]);
    for (int i = 0; i < n; ++i)
      if (i != r && (aug[i] >> c & 1)) aug[i] ^= aug[r];
    ++r;
  }
  Mat inv{n, n, {}};
  for (int i = 0; i < n; ++i) inv.row[i] = uint8_t(aug[i] >> n);
  return inv;
}

static int minor2(const Mat& m, int r0, int r1, int c0, int c1) {
  int a = m.row[r0] >> c0 & 1, b = m.row[r0] >> c1 & 1;
  int c = m.row[r1] >> c0 & 1, d = m.row[r1] >> c1 & 1;
  return (a & d) ^ (b & c);
}

int det3(const Mat& m) {
  assert(m.rows == 3 && m.cols == 3);
  int d = 0;
  for (int j = 0; j < 3; ++j) {
    int c0 = j == 0 ? 1 : 0, c1 = j == 2 ? 1 : 2;
    d ^= (m.row[0] >> j & 1) & minor2(m, 1, 2, c0, c1);
  }
  return d;
}

Mat adj3(const Mat& m) {
  assert(m.rows == 3 && m.cols == 3);
  Mat a{3, 3, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = j == 0 ? 1 : 0, r1 = j == 2 ? 1 : 2;
      int c0 = i == 0 ? 1 : 0, c1 = i == 2 ? 1 : 2;
      if (minor2(m, r0, r1, c0, c1)) a.row[i] |= uint8_t(1u << j);
    }
  return a;
}

int trace(const Mat& m) {
  assert(m.rows == m.cols);
  int t = 0;
  for (int i = 0; i < m.rows; ++i) t ^= m.row[i] >> i & 1;
  return t;
}

}  // namespace heptad::gf2
