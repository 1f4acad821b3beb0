#include "heptad/mermin.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <thread>

#include "heptad/pauli.hpp"

namespace heptad::mermin {

std::vector<Edge> affine_edges(const std::vector<polar::Plane>& planes) {
  std::vector<Edge> out;
  for (size_t i = 0; i < planes.size(); ++i)
    for (const polar::Line& l : polar::lines_of(planes[i])) {
      Edge e{};
      e.pmask = planes[i].pmask & ~l.pmask;
      e.plane = uint16_t(i);
      int k = 0;
      for (uint8_t v : planes[i].pts)
        if (e.pmask >> v & 1) e.pts[k++] = v;
      assert(k == 4);
      e.sign = uint8_t(edge_sign(e.pts));
      out.push_back(e);
    }
  std::sort(out.begin(), out.end(),
            [](const Edge& a, const Edge& b) { return a.pmask < b.pmask; });
  assert(std::adjacent_find(out.begin(), out.end(), [](const Edge& a, const Edge& b) {
           return a.pmask == b.pmask;
         }) == out.end());
  return out;
}

int edge_sign(const std::array<uint8_t, 4>& pts) {
  pauli::Op acc{0, 0};
  int y = 0;
  for (uint8_t v : pts) {
    acc = pauli::product(acc, pauli::Op{v, 0}, 3);
    y += std::popcount(pauli::amask(v, 3) & pauli::bmask(v, 3));
  }
  assert(acc.v == 0 && "edge points must multiply to the identity class");
  // Convert from the real representatives (Y = ZX, squaring to -I) to the
  // Hermitian ones (Y = iZX): each Y contributes a factor i, and the total
  // Y count over a vanishing sum is even, so the product picks up (-1)^(y/2).
  assert(y % 2 == 0);
  return acc.sign ^ (y >> 1 & 1);
}

namespace {

constexpr int kWords = 15;  // ceil(945 / 64)

struct Bits {
  std::array<uint64_t, kWords> w{};

  void set(int i) { w[i >> 6] |= 1ull << (i & 63); }
  bool get(int i) const { return w[i >> 6] >> (i & 63) & 1; }
};

struct Search {
  const std::vector<Edge>& edges;
  std::vector<Bits> adj;  // share exactly one point

  explicit Search(const std::vector<Edge>& e) : edges(e), adj(e.size()) {
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j)
        if (std::popcount(e[i].pmask & e[j].pmask) == 1) {
          adj[i].set(int(j));
          adj[j].set(int(i));
        }
  }

  // Extend sel (k edges chosen, union mask U, used intersection points D)
  // with candidates from cand restricted to indices > last.
  void run(int first, Enumeration& res) const {
    const Bits& c1 = adj[first];
    uint64_t u1 = edges[first].pmask;
    std::array<uint16_t, 5> sel{};
    sel[0] = uint16_t(first);
    for (int w = first >> 6; w < kWords; ++w) {
      uint64_t bits = c1.w[w];
      if (w == first >> 6) bits &= ~((2ull << (first & 63)) - 1);
      while (bits) {
        int j = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        sel[1] = uint16_t(j);
        uint64_t u2 = u1 | edges[j].pmask;
        uint64_t d2 = u1 & edges[j].pmask;
        extend(sel, 2, c1, j, u2, d2, res);
      }
    }
  }

  void extend(std::array<uint16_t, 5>& sel, int k, const Bits& cand, int last, uint64_t u,
              uint64_t d, Enumeration& res) const {
    Bits next;
    for (int w = 0; w < kWords; ++w) next.w[w] = cand.w[w] & adj[last].w[w];
    for (int w = last >> 6; w < kWords; ++w) {
      uint64_t bits = next.w[w];
      if (w == last >> 6) bits &= ~((2ull << (last & 63)) - 1);
      while (bits) {
        int e = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (edges[e].pmask & d) continue;  // would reuse an intersection point
        sel[k] = uint16_t(e);
        uint64_t u2 = u | edges[e].pmask;
        uint64_t d2 = d | (edges[e].pmask & u);
        if (k == 4) {
          res.valid_total++;
          int neg = 0;
          for (uint16_t s : sel) neg += edges[s].sign;
          if (neg & 1) {
            Pentagram p{};
            p.edges = sel;
            p.negative_edges = uint8_t(neg);
            int idx = 0;
            p.symmetric = true;
            for (int v = 1; v <= 63; ++v)
              if (u2 >> v & 1) {
                p.pts[idx++] = uint8_t(v);
                if (pauli::q0(uint32_t(v), 3)) p.symmetric = false;
              }
            assert(idx == 10);
            res.magic.push_back(p);
          } else {
            res.even_parity++;
          }
        } else {
          extend(sel, k + 1, next, e, u2, d2, res);
        }
      }
    }
  }
};

}  // namespace

Enumeration enumerate_pentagrams(const std::vector<Edge>& edges, int threads) {
  Search s(edges);
  int n = int(edges.size());
  if (threads < 2) {
    Enumeration res;
    for (int i = 0; i < n; ++i) s.run(i, res);
    std::sort(res.magic.begin(), res.magic.end());
    return res;
  }
  std::vector<Enumeration> parts(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int i = t; i < n; i += threads) s.run(i, parts[t]);
    });
  for (auto& th : pool) th.join();
  Enumeration res;
  for (Enumeration& p : parts) {
    res.valid_total += p.valid_total;
    res.even_parity += p.even_parity;
    res.magic.insert(res.magic.end(), p.magic.begin(), p.magic.end());
  }
  std::sort(res.magic.begin(), res.magic.end());
  return res;
}

std::array<uint8_t, 5> pentad_of(const Pentagram& p, const std::vector<Edge>& edges,
                                 const pluck::Bijection& bij) {
  std::array<uint8_t, 5> out{};
  for (int i = 0; i < 5; ++i) out[i] = bij.image[edges[p.edges[i]].plane];
  return out;
}

bool pentad_is_identity(const std::array<uint8_t, 5>& pentad) {
  uint8_t acc = 0;
  for (uint8_t v : pentad) acc ^= v;
  return acc == 0;
}

bool pentagram_from_pentad(const std::array<uint8_t, 5>& pentad, const pluck::Bijection& bij,
                           const std::vector<Edge>& edges, Pentagram* out, std::string* err) {
  auto fail = [&](const std::string& msg) {
    if (err) *err = msg;
    return false;
  };
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      if (pentad[i] == pentad[j]) return fail("pentad classes must be distinct");
      if (pauli::symplectic(pentad[i], pentad[j], 4))
        return fail("non-commuting pair " + pauli::format(pentad[i], 4) + ", " +
                    pauli::format(pentad[j], 4));
      for (int k = j + 1; k < 5; ++k)
        if ((pentad[i] ^ pentad[j] ^ pentad[k]) == 0)
          return fail("collinear triple " + pauli::format(pentad[i], 4) + ", " +
                      pauli::format(pentad[j], 4) + ", " + pauli::format(pentad[k], 4));
    }
  if (!pentad_is_identity(pentad)) return fail("pentad product is not the identity class");

  std::array<const polar::Plane*, 5> planes{};
  for (int i = 0; i < 5; ++i) {
    if (bij.preimage[pentad[i]] < 0)
      return fail("class " + pauli::format(pentad[i], 4) + " is not a heptad image");
    planes[i] = &bij.plane_of(pentad[i]);
  }
  std::array<std::array<uint8_t, 4>, 5> edge_pts{};
  std::array<int, 5> fill{};
  uint64_t used = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      uint64_t common = planes[i]->pmask & planes[j]->pmask;
      if (std::popcount(common) != 1)
        return fail("heptads of " + pauli::format(pentad[i], 4) + " and " +
                    pauli::format(pentad[j], 4) + " do not meet in a single point");
      if (common & used) return fail("intersection points are not distinct");
      used |= common;
      uint8_t v = uint8_t(std::countr_zero(common));
      edge_pts[i][size_t(fill[i]++)] = v;
      edge_pts[j][size_t(fill[j]++)] = v;
    }

  std::map<uint64_t, uint16_t> by_mask;
  for (size_t e = 0; e < edges.size(); ++e) by_mask[edges[e].pmask] = uint16_t(e);
  Pentagram p{};
  for (int i = 0; i < 5; ++i) {
    uint64_t mask = 0;
    for (uint8_t v : edge_pts[i]) mask |= 1ull << v;
    auto it = by_mask.find(mask);
    if (it == by_mask.end())
      return fail("intersection points of " + pauli::format(pentad[i], 4) +
                  " do not form an affine edge");
    p.edges[size_t(i)] = it->second;
  }
  std::sort(p.edges.begin(), p.edges.end());
  int neg = 0, idx = 0;
  p.symmetric = true;
  for (int v = 1; v <= 63; ++v)
    if (used >> v & 1) {
      p.pts[size_t(idx++)] = uint8_t(v);
      if (pauli::q0(uint32_t(v), 3)) p.symmetric = false;
    }
  for (uint16_t e : p.edges) neg += edges[e].sign;
  p.negative_edges = uint8_t(neg);
  if (out) *out = p;
  return true;
}

namespace {

// Nonzero single-letter patterns form a Fano plane: lines are the triples
// XORing to zero.
std::vector<std::array<uint8_t, 3>> fano_lines() {
  std::vector<std::array<uint8_t, 3>> out;
  for (uint8_t u = 1; u <= 7; ++u)
    for (uint8_t v = uint8_t(u + 1); v <= 7; ++v) {
      uint8_t w = u ^ v;
      if (w > v) out.push_back({u, v, w});
    }
  assert(out.size() == 7);
  return out;
}

}  // namespace

std::vector<std::array<uint8_t, 5>> symmetric_pentads() {
  std::vector<std::array<uint8_t, 5>> out;
  for (char letter : {'X', 'Z'}) {
    // pattern -> three-qubit vector with the given letter on the set bits
    auto op3 = [&](uint8_t pattern) {
      std::string s;
      for (int i = 0; i < 3; ++i) s += (pattern >> (2 - i) & 1) ? letter : 'I';
      return uint8_t(pauli::parse(s, 3).v);
    };
    // prefixed four-qubit vector: first letter `pre`, then the width-3 class
    auto op4 = [&](char pre, uint8_t v3) {
      uint32_t a = pauli::amask(v3, 3), b = pauli::bmask(v3, 3);
      uint32_t v = a << 1 | b << 5;
      if (pre == letter) v |= uint32_t(pauli::parse(std::string(1, letter) + "III", 4).v);
      return uint8_t(v);
    };
    std::vector<std::array<uint8_t, 3>> lines = fano_lines();
    for (uint8_t pt = 1; pt <= 7; ++pt)
      for (const auto& ln : lines) {
        if (pt == ln[0] || pt == ln[1] || pt == ln[2]) continue;
        // anti-flag patterns: the point twice (both prefixes), the line with
        // the heavy prefix on all three or on exactly one member
        out.push_back({op4('I', op3(pt)), op4(letter, op3(pt)), op4(letter, op3(ln[0])),
                       op4(letter, op3(ln[1])), op4(letter, op3(ln[2]))});
        for (int x = 0; x < 3; ++x)
          out.push_back({op4('I', op3(pt)), op4(letter, op3(pt)),
                         op4(x == 0 ? letter : 'I', op3(ln[0])),
                         op4(x == 1 ? letter : 'I', op3(ln[1])),
                         op4(x == 2 ? letter : 'I', op3(ln[2]))});
      }
    uint8_t special = uint8_t(pauli::parse(std::string(1, letter) + "III", 4).v);
    for (const auto& ln : lines) {
      std::array<uint8_t, 4> quad{};
      int k = 0;
      for (uint8_t q = 1; q <= 7; ++q)
        if (q != ln[0] && q != ln[1] && q != ln[2]) quad[size_t(k++)] = q;
      // quadrangle patterns: the special class, one member singled out with
      // the light prefix (resp. heavy) and the rest heavy (resp. light)
      for (int t = 0; t < 4; ++t) {
        std::array<uint8_t, 5> heavy{}, light{};
        heavy[0] = light[0] = special;
        for (int q = 0; q < 4; ++q) {
          heavy[size_t(q + 1)] = op4(q == t ? 'I' : letter, op3(quad[size_t(q)]));
          light[size_t(q + 1)] = op4(q == t ? letter : 'I', op3(quad[size_t(q)]));
        }
        out.push_back(heavy);
        out.push_back(light);
      }
    }
  }
  assert(out.size() == 336);
  return out;
}

}  // namespace heptad::mermin
