#include "heptad/hexagon.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "heptad/group.hpp"
#include "heptad/pauli.hpp"
#include "heptad/polar.hpp"

namespace heptad::hexagon {

uint8_t axis() { return uint8_t(pauli::parse("YIII", 4).v); }

std::vector<uint8_t> points() {
  std::vector<uint8_t> out;
  uint8_t w = axis();
  for (int v = 1; v < 256; ++v)
    if (pauli::q0(uint32_t(v), 4) == 0 && pauli::symplectic(uint32_t(v), w, 4) == 0)
      out.push_back(uint8_t(v));
  assert(out.size() == 63);
  return out;
}

namespace {

HLine make_line(uint8_t u, uint8_t v, uint8_t w) {
  std::array<uint8_t, 3> pts{u, v, w};
  std::sort(pts.begin(), pts.end());
  assert((pts[0] ^ pts[1]) == pts[2]);
  return HLine{pts};
}

std::vector<HLine> orbit_of_line(const HLine& seed, const gf2::Mat& g1, const gf2::Mat& g2) {
  std::set<HLine> seen{seed};
  std::vector<HLine> queue{seed};
  for (size_t head = 0; head < queue.size(); ++head) {
    HLine l = queue[head];
    for (const gf2::Mat* g : {&g1, &g2}) {
      HLine img = make_line(uint8_t(gf2::apply(l.pts[0], *g)), uint8_t(gf2::apply(l.pts[1], *g)),
                            uint8_t(gf2::apply(l.pts[2], *g)));
      if (seen.insert(img).second) queue.push_back(img);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<HLine> lines() {
  pauli::Op a = pauli::parse("IXIX", 4), b = pauli::parse("IIZI", 4), c = pauli::parse("IXZX", 4);
  HLine seed = make_line(uint8_t(a.v), uint8_t(b.v), uint8_t(c.v));
  std::vector<HLine> orbit = orbit_of_line(seed, grp::r_alpha(), grp::r_gamma());
  if (orbit.size() == 63) return orbit;

  // Fallback: decompose all fully-interior totally singular lines into
  // orbits and keep the unique 63-orbit satisfying the axioms.
  std::vector<uint8_t> pts = points();
  std::set<uint8_t> inside(pts.begin(), pts.end());
  std::set<HLine> candidates;
  for (uint8_t u : pts)
    for (uint8_t v : pts) {
      if (v <= u) continue;
      uint8_t w = u ^ v;
      if (w < v || !inside.count(w)) continue;
      if (pauli::symplectic(u, v, 4)) continue;
      candidates.insert(make_line(u, v, w));
    }
  std::set<HLine> done;
  for (const HLine& l : candidates) {
    if (done.count(l)) continue;
    std::vector<HLine> orb = orbit_of_line(l, grp::r_alpha(), grp::r_gamma());
    for (const HLine& m : orb) done.insert(m);
    if (orb.size() == 63 && verify(pts, orb).ok()) return orb;
  }
  assert(false && "no 63-line orbit satisfies the hexagon axioms");
  return {};
}

Axioms verify(const std::vector<uint8_t>& pts, const std::vector<HLine>& lns) {
  Axioms ax;
  ax.n_points = pts.size();
  ax.n_lines = lns.size();

  std::set<uint8_t> pset(pts.begin(), pts.end());
  ax.three_points_per_line = true;
  std::map<uint8_t, int> deg;
  for (const HLine& l : lns) {
    if (l.pts[0] == l.pts[1] || l.pts[1] == l.pts[2] || (l.pts[0] ^ l.pts[1]) != l.pts[2])
      ax.three_points_per_line = false;
    for (uint8_t v : l.pts) {
      if (!pset.count(v)) ax.three_points_per_line = false;
      deg[v]++;
    }
  }
  ax.three_lines_per_point =
      deg.size() == pts.size() &&
      std::all_of(deg.begin(), deg.end(), [](auto& kv) { return kv.second == 3; });

  // Bipartite incidence graph: vertices 0..n_points-1 are points,
  // n_points..n_points+n_lines-1 are lines.
  int np = int(pts.size()), nl = int(lns.size()), n = np + nl;
  std::map<uint8_t, int> pidx;
  for (int i = 0; i < np; ++i) pidx[pts[i]] = i;
  std::vector<std::vector<int>> adj(n);
  for (int j = 0; j < nl; ++j)
    for (uint8_t v : lns[j].pts) {
      auto it = pidx.find(v);
      if (it == pidx.end()) continue;
      adj[it->second].push_back(np + j);
      adj[np + j].push_back(it->second);
    }

  int girth = 1 << 30, diameter = 0;
  bool connected = true;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), parent(n, -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    int reached = 1, ecc = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          ecc = std::max(ecc, dist[v]);
          ++reached;
          queue.push_back(v);
        } else if (v != parent[u]) {
          girth = std::min(girth, dist[u] + dist[v] + 1);
        }
      }
    }
    if (reached != n) connected = false;
    diameter = std::max(diameter, ecc);
  }
  ax.connected = connected;
  ax.girth = connected ? girth : 0;
  ax.diameter = connected ? diameter : 0;
  return ax;
}

LineInfo classify(const HLine& l, const pluck::Bijection& bij) {
  uint64_t common = bij.plane_of(l.pts[0]).pmask & bij.plane_of(l.pts[1]).pmask &
                    bij.plane_of(l.pts[2]).pmask;
  LineInfo info;
  int n = std::popcount(common);
  assert(n == 1 || n == 3);
  info.cls = n == 3 ? LineClass::Pencil : LineClass::PlaneStar;
  for (int v = 1; v <= 63; ++v)
    if (common >> v & 1) info.core.push_back(uint8_t(v));
  return info;
}

std::array<std::vector<uint8_t>, 2> elliptic_split(uint8_t w) {
  assert(pauli::q0(uint32_t(w), 4) == 1 && "axis must be antisymmetric");
  std::array<std::vector<uint8_t>, 2> out;
  for (uint32_t v : polar::quadric_points(w, 4))
    out[pauli::q0(v, 4)].push_back(uint8_t(v));
  return out;
}

}  // namespace heptad::hexagon
