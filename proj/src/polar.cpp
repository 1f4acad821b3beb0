#include "heptad/polar.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace heptad::polar {

namespace {

int sp(uint8_t u, uint8_t v) { return pauli::symplectic(u, v, kWidth); }

uint64_t line_mask(uint8_t u, uint8_t v) {
  return (1ull << u) | (1ull << v) | (1ull << (u ^ v));
}

}  // namespace

std::vector<uint8_t> points() {
  std::vector<uint8_t> p(kPoints);
  for (int v = 1; v <= kPoints; ++v) p[v - 1] = uint8_t(v);
  return p;
}

Line line_through(uint8_t u, uint8_t v) {
  assert(u && v && u != v);
  std::array<uint8_t, 3> pts{u, v, uint8_t(u ^ v)};
  std::sort(pts.begin(), pts.end());
  return Line{pts, line_mask(u, v)};
}

Plane plane_from_basis(uint8_t u, uint8_t v, uint8_t w) {
  gf2::Mat b{3, 6, {u, v, w}};
  b = gf2::rref(b);
  assert(b.row[2] != 0 && "basis vectors must be independent");
  Plane p{};
  p.basis = {b.row[0], b.row[1], b.row[2]};
  int k = 0;
  for (int s = 1; s < 8; ++s) {
    uint8_t x = 0;
    for (int i = 0; i < 3; ++i)
      if (s >> i & 1) x ^= p.basis[i];
    p.pts[k++] = x;
  }
  std::sort(p.pts.begin(), p.pts.end());
  p.pmask = 0;
  for (uint8_t x : p.pts) p.pmask |= 1ull << x;
  return p;
}

bool is_isotropic_line(const Line& l) { return sp(l.pts[0], l.pts[1]) == 0; }

bool is_isotropic_plane(const Plane& p) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (sp(p.basis[i], p.basis[j])) return false;
  return true;
}

std::vector<Line> all_lines() {
  std::vector<Line> out;
  for (int u = 1; u <= kPoints; ++u)
    for (int v = u + 1; v <= kPoints; ++v) {
      if ((u ^ v) < v) continue;  // keep each line once: u < v < u^v
      out.push_back(line_through(uint8_t(u), uint8_t(v)));
    }
  return out;
}

std::vector<Line> isotropic_lines() {
  std::vector<Line> out;
  for (const Line& l : all_lines())
    if (is_isotropic_line(l)) out.push_back(l);
  return out;
}

namespace {

std::vector<Plane> enumerate_planes(bool isotropic_only) {
  std::vector<Plane> out;
  std::unordered_set<uint64_t> seen;
  for (int u = 1; u <= kPoints; ++u)
    for (int v = u + 1; v <= kPoints; ++v) {
      if (isotropic_only && sp(uint8_t(u), uint8_t(v))) continue;
      for (int w = v + 1; w <= kPoints; ++w) {
        if (w == (u ^ v)) continue;
        if (isotropic_only && (sp(uint8_t(u), uint8_t(w)) || sp(uint8_t(v), uint8_t(w))))
          continue;
        Plane p = plane_from_basis(uint8_t(u), uint8_t(v), uint8_t(w));
        if (seen.insert(p.pmask).second) out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end(), [](const Plane& a, const Plane& b) {
    uint32_t ka = a.basis[0] | a.basis[1] << 6 | a.basis[2] << 12;
    uint32_t kb = b.basis[0] | b.basis[1] << 6 | b.basis[2] << 12;
    return ka < kb;
  });
  return out;
}

}  // namespace

std::vector<Plane> heptad_planes() { return enumerate_planes(true); }

std::vector<Plane> all_3subspaces() { return enumerate_planes(false); }

std::vector<Line> lines_of(const Plane& p) {
  std::vector<Line> out;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      uint8_t u = p.pts[i], v = p.pts[j];
      if ((u ^ v) < v) continue;
      out.push_back(line_through(u, v));
    }
  assert(out.size() == 7);
  return out;
}

uint64_t perp_mask(uint64_t set_mask) {
  uint64_t out = 0;
  for (int v = 1; v <= kPoints; ++v) {
    bool ok = true;
    for (int u = 1; u <= kPoints && ok; ++u)
      if (set_mask >> u & 1) ok = sp(uint8_t(v), uint8_t(u)) == 0;
    if (ok) out |= 1ull << v;
  }
  return out;
}

std::vector<uint32_t> quadric_points(uint32_t w, int n) {
  std::vector<uint32_t> out;
  uint32_t top = (1u << (2 * n)) - 1;
  for (uint32_t v = 1; v <= top; ++v)
    if (pauli::qform(w, v, n) == 0) out.push_back(v);
  return out;
}

int plane_incidence(const Plane& a, const Plane& b) {
  return std::popcount(a.pmask & b.pmask);
}

std::vector<uint16_t> quadric_plane_indices(const std::vector<Plane>& planes) {
  std::vector<uint16_t> out;
  for (size_t i = 0; i < planes.size(); ++i) {
    bool all_sym = true;
    for (uint8_t v : planes[i].pts)
      if (pauli::q0(v, kWidth)) {
        all_sym = false;
        break;
      }
    if (all_sym) out.push_back(uint16_t(i));
  }
  return out;
}

std::array<std::vector<uint16_t>, 2> quadric_plane_systems(const std::vector<Plane>& planes) {
  std::vector<uint16_t> q = quadric_plane_indices(planes);
  assert(!q.empty());
  // Planes of one system pairwise share a single point, so the "share exactly
  // one point" graph splits into the two systems as connected components.
  std::array<std::vector<uint16_t>, 2> sys;
  std::vector<int> side(q.size(), -1);
  for (int start = 0; start < int(q.size()); ++start) {
    if (side[start] >= 0) continue;
    int s = sys[0].empty() ? 0 : 1;
    assert(s == 0 || sys[1].empty());
    std::vector<int> stack{start};
    side[start] = s;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      sys[s].push_back(q[i]);
      for (int j = 0; j < int(q.size()); ++j)
        if (side[j] < 0 && plane_incidence(planes[q[i]], planes[q[j]]) == 1) {
          side[j] = s;
          stack.push_back(j);
        }
    }
  }
  for (auto& v : sys) std::sort(v.begin(), v.end());
  return sys;
}

namespace {

void cover(const std::vector<Plane>& planes,
           const std::array<std::vector<uint16_t>, kPoints + 1>& by_point, uint64_t covered,
           std::vector<uint16_t>& chosen, std::vector<std::array<uint16_t, 9>>& out) {
  if (chosen.size() == 9) {
    std::array<uint16_t, 9> s;
    std::copy(chosen.begin(), chosen.end(), s.begin());
    std::sort(s.begin(), s.end());
    out.push_back(s);
    return;
  }
  int p = std::countr_zero(~covered & ~1ull);  // lowest uncovered point
  for (uint16_t idx : by_point[p]) {
    if (planes[idx].pmask & covered) continue;
    chosen.push_back(idx);
    cover(planes, by_point, covered | planes[idx].pmask, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<std::array<uint16_t, 9>> spreads(const std::vector<Plane>& planes) {
  std::array<std::vector<uint16_t>, kPoints + 1> by_point;
  for (size_t i = 0; i < planes.size(); ++i)
    for (uint8_t v : planes[i].pts) by_point[v].push_back(uint16_t(i));
  std::vector<std::array<uint16_t, 9>> out;
  std::vector<uint16_t> chosen;
  cover(planes, by_point, 0, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_spread(const std::vector<Plane>& planes, const std::array<uint16_t, 9>& idx) {
  uint64_t covered = 0;
  for (uint16_t i : idx) {
    if (i >= planes.size() || (planes[i].pmask & covered)) return false;
    covered |= planes[i].pmask;
  }
  return covered == ~1ull;  // bits 1..63
}

}  // namespace heptad::polar
