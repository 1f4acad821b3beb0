#include "heptad/plucker.hpp"

#include <cassert>
#include <stdexcept>

namespace heptad::pluck {

namespace {

// Positions of the named coordinates in kTriples.
constexpr int P123 = 0, P124 = 1, P125 = 2, P126 = 3, P134 = 4, P135 = 5, P136 = 6,
              P145 = 7, P146 = 8, P156 = 9, P234 = 10, P235 = 11, P236 = 12, P245 = 13,
              P246 = 14, P256 = 15, P345 = 16, P346 = 17, P356 = 18, P456 = 19;

constexpr std::array<std::array<int, 3>, 3> kMview = {{{P156, P256, P356},
                                                       {P146, P246, P346},
                                                       {P145, P245, P345}}};
constexpr std::array<std::array<int, 3>, 3> kNview = {{{P234, P235, P236},
                                                       {P134, P135, P136},
                                                       {P124, P125, P126}}};
constexpr std::array<int, 8> kFourQubit = {P123, P156, P246, P345, P456, P234, P135, P126};

gf2::Mat scale(int s, const gf2::Mat& m) { return s ? m : gf2::Mat{3, 3, {}}; }

gf2::Mat scaled_identity(int s) { return s ? gf2::identity(3) : gf2::Mat{3, 3, {}}; }

}  // namespace

int triple_index(int mu, int nu, int rho) {
  for (int t = 0; t < 20; ++t)
    if (kTriples[t][0] == mu && kTriples[t][1] == nu && kTriples[t][2] == rho) return t;
  throw std::invalid_argument("column triple must be ascending in 1..6");
}

uint32_t embed(const polar::Plane& p) {
  uint32_t out = 0;
  for (int t = 0; t < 20; ++t) {
    gf2::Mat sub{3, 3, {}};
    for (int r = 0; r < 3; ++r)
      for (int k = 0; k < 3; ++k)
        if (p.basis[r] >> (kTriples[t][k] - 1) & 1) sub.row[r] |= uint8_t(1u << k);
    if (gf2::det3(sub)) out |= 1u << t;
  }
  return out;
}

FourTuple view(uint32_t p) {
  FourTuple t;
  t.m = p >> P123 & 1;
  t.n = p >> P456 & 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (p >> kMview[i][j] & 1) t.M.row[i] |= uint8_t(1u << j);
      if (p >> kNview[i][j] & 1) t.N.row[i] |= uint8_t(1u << j);
    }
  return t;
}

uint32_t from_view(const FourTuple& t) {
  uint32_t p = 0;
  if (t.m) p |= 1u << P123;
  if (t.n) p |= 1u << P456;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (t.M.row[i] >> j & 1) p |= 1u << kMview[i][j];
      if (t.N.row[i] >> j & 1) p |= 1u << kNview[i][j];
    }
  return p;
}

FourTuple abmn(const polar::Plane& p) {
  gf2::Mat a{3, 3, {}}, b{3, 3, {}};
  for (int r = 0; r < 3; ++r) {
    a.row[r] = uint8_t(p.basis[r] & 7);
    b.row[r] = uint8_t(p.basis[r] >> 3 & 7);
  }
  FourTuple t;
  t.m = gf2::det3(a);
  t.n = gf2::det3(b);
  t.M = gf2::mul(gf2::adj3(b), a);
  t.N = gf2::mul(gf2::adj3(a), b);
  return t;
}

bool separable(uint32_t p) {
  if (p == 0 || p >= (1u << 20)) return false;
  FourTuple t = view(p);
  if (scale(t.m, t.M) != gf2::adj3(t.N)) return false;
  if (scale(t.n, t.N) != gf2::adj3(t.M)) return false;
  // Both product orders are needed: with m = n = 0 and M, N of rank one,
  // MN = 0 does not force NM = 0, and such vectors are not decomposable.
  gf2::Mat mn = scaled_identity(t.m & t.n);
  return gf2::mul(t.M, t.N) == mn && gf2::mul(t.N, t.M) == mn;
}

bool primitive(uint32_t p) {
  FourTuple t = view(p);
  return t.M == gf2::transpose(t.M) && t.N == gf2::transpose(t.N);
}

int ambient_b(uint32_t p, uint32_t q) {
  FourTuple s = view(p), t = view(q);
  int acc = (s.m & t.n) ^ (s.n & t.m);
  acc ^= gf2::trace(gf2::mul(s.M, t.N)) ^ gf2::trace(gf2::mul(s.N, t.M));
  return acc;
}

int ambient_q0(uint32_t p) {
  FourTuple t = view(p);
  return (t.m & t.n) ^ gf2::trace(gf2::mul(t.M, t.N));
}

uint8_t four_qubit_of(uint32_t p) {
  uint8_t v = 0;
  for (int i = 0; i < 8; ++i)
    if (p >> kFourQubit[i] & 1) v |= uint8_t(1u << i);
  return v;
}

uint8_t plane_to_four_qubit(const polar::Plane& p) { return four_qubit_of(embed(p)); }

Bijection::Bijection(const std::vector<polar::Plane>& planes_) : planes(planes_) {
  preimage.fill(-1);
  image.reserve(planes.size());
  for (size_t i = 0; i < planes.size(); ++i) {
    uint8_t v = plane_to_four_qubit(planes[i]);
    assert(preimage[v] < 0 && "heptad images must be distinct");
    image.push_back(v);
    preimage[v] = int16_t(i);
  }
}

const polar::Plane& Bijection::plane_of(uint8_t fourqubit) const {
  int16_t i = preimage[fourqubit];
  if (i < 0) throw std::invalid_argument("vector is not the image of a heptad plane");
  return planes[i];
}

bool equivariant(const std::vector<polar::Plane>& planes, const gf2::Mat& g,
                 const gf2::Mat& h) {
  for (const polar::Plane& p : planes) {
    polar::Plane q = polar::plane_from_basis(uint8_t(gf2::apply(p.basis[0], g)),
                                             uint8_t(gf2::apply(p.basis[1], g)),
                                             uint8_t(gf2::apply(p.basis[2], g)));
    if (plane_to_four_qubit(q) != gf2::apply(plane_to_four_qubit(p), h)) return false;
  }
  return true;
}

}  // namespace heptad::pluck
