#pragma once

// Dense integer matrix model of the Pauli operators, independent of the
// bit-level arithmetic in the library. Entries are Gaussian integers so the
// same machinery covers the real representatives (Y = ZX, entries in {-1,0,1})
// and the Hermitian ones (Y = iZX).

#include <cassert>
#include <cstdint>
#include <vector>

namespace oracle {

struct Cx {
  long long re = 0, im = 0;

  bool operator==(const Cx&) const = default;
};

inline Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator*(Cx a, Cx b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

struct Mat {
  int n = 0;
  std::vector<Cx> a;  // row-major

  Cx& at(int i, int j) { return a[size_t(i) * size_t(n) + size_t(j)]; }
  const Cx& at(int i, int j) const { return a[size_t(i) * size_t(n) + size_t(j)]; }
  bool operator==(const Mat&) const = default;
};

inline Mat zero(int n) { return {n, std::vector<Cx>(size_t(n) * size_t(n))}; }

inline Mat identity(int n) {
  Mat m = zero(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = {1, 0};
  return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
  assert(x.n == y.n);
  Mat r = zero(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      Cx v = x.at(i, k);
      if (v == Cx{}) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) = r.at(i, j) + v * y.at(k, j);
    }
  return r;
}

inline Mat kron(const Mat& x, const Mat& y) {
  Mat r = zero(x.n * y.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j)
      for (int k = 0; k < y.n; ++k)
        for (int l = 0; l < y.n; ++l)
          r.at(i * y.n + k, j * y.n + l) = x.at(i, j) * y.at(k, l);
  return r;
}

// Letter codes follow the library: 0=I, 1=X, 2=Z, 3=Y.
inline Mat letter(int code, bool hermitian) {
  Mat m = zero(2);
  switch (code) {
    case 0:
      m.at(0, 0) = m.at(1, 1) = {1, 0};
      break;
    case 1:
      m.at(0, 1) = m.at(1, 0) = {1, 0};
      break;
    case 2:
      m.at(0, 0) = {1, 0};
      m.at(1, 1) = {-1, 0};
      break;
    default:
      // Real: ZX = [[0,1],[-1,0]]. Hermitian: i ZX = [[0,i],[-i,0]]... with
      // the standard sign convention Y = [[0,-i],[i,0]] = -i ZX; both square
      // to +1 and differ by a global sign, which a representation-level
      // comparison must fix once. We take Y = -i ZX (the textbook matrix).
      if (hermitian) {
        m.at(0, 1) = {0, -1};
        m.at(1, 0) = {0, 1};
      } else {
        m.at(0, 1) = {1, 0};
        m.at(1, 0) = {-1, 0};
      }
      break;
  }
  return m;
}

// Tensor product of single-qubit letters for the width-n class vector v,
// using the library bit layout: bit i-1 is a_i, bit n+i-1 is b_i, and qubit
// i carries Z^{a_i} X^{b_i}.
inline Mat rep(uint32_t v, int n, bool hermitian) {
  Mat m = identity(1);
  for (int i = 0; i < n; ++i) {
    int code = int(v >> i & 1) << 1 | int(v >> (n + i) & 1);
    m = kron(m, letter(code, hermitian));
  }
  return m;
}

// +1 or -1 when m is plus or minus the identity, 0 otherwise.
inline int identity_sign(const Mat& m) {
  Cx d = m.at(0, 0);
  if (d.im != 0 || (d.re != 1 && d.re != -1)) return 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      if (m.at(i, j) != (i == j ? d : Cx{})) return 0;
  return int(d.re);
}

inline bool commute(const Mat& x, const Mat& y) { return mul(x, y) == mul(y, x); }

inline bool anticommute(const Mat& x, const Mat& y) {
  Mat xy = mul(x, y), yx = mul(y, x);
  for (size_t i = 0; i < xy.a.size(); ++i)
    if (xy.a[i].re != -yx.a[i].re || xy.a[i].im != -yx.a[i].im) return false;
  return true;
}

inline bool symmetric(const Mat& m) {
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

}  // namespace oracle
