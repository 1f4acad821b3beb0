#include <algorithm>
#include <set>

#include "doctest.h"
#include "heptad/hexagon.hpp"
#include "heptad/pauli.hpp"
#include "heptad/polar.hpp"
#include "heptad/tables.hpp"

using namespace heptad;

namespace {

hexagon::HLine line_of(const std::array<std::string_view, 3>& labels) {
  std::array<uint8_t, 3> pts{};
  for (int i = 0; i < 3; ++i) pts[size_t(i)] = uint8_t(pauli::parse(labels[size_t(i)], 4).v);
  std::sort(pts.begin(), pts.end());
  return {pts};
}

}  // namespace

TEST_SUITE("hexagon") {
  TEST_CASE("points are the symmetric commutant of the axis") {
    uint8_t axis = hexagon::axis();
    CHECK(pauli::format(axis, 4) == "YIII");
    std::vector<uint8_t> pts = hexagon::points();
    REQUIRE(pts.size() == 63);
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    int y_first = 0, i_first = 0;
    for (uint8_t v : pts) {
      CHECK(pauli::q0(v, 4) == 0);
      CHECK(pauli::symplectic(v, axis, 4) == 0);
      (pauli::letter(v, 4, 0) == 3 ? y_first : i_first)++;
      // The trailing three-qubit factor is symmetric after an I prefix and
      // antisymmetric after a Y prefix.
      uint32_t tail = (uint32_t(v) >> 1 & 7) | (uint32_t(v) >> 5 & 7) << 3;
      CHECK(pauli::q0(tail, 3) == (pauli::letter(v, 4, 0) == 3 ? 1 : 0));
    }
    CHECK(y_first == 28);
    CHECK(i_first == 35);
    // Exactly the symmetric width-4 classes commuting with the axis.
    int expected = 0;
    for (uint32_t v = 1; v < 256; ++v)
      expected += pauli::q0(v, 4) == 0 && pauli::symplectic(v, axis, 4) == 0 &&
                  v != uint32_t(axis);
    CHECK(expected == 63);
  }

  TEST_CASE("axioms of the generalized hexagon") {
    std::vector<uint8_t> pts = hexagon::points();
    std::vector<hexagon::HLine> lns = hexagon::lines();
    REQUIRE(lns.size() == 63);
    hexagon::Axioms ax = hexagon::verify(pts, lns);
    CHECK(ax.n_points == 63);
    CHECK(ax.n_lines == 63);
    CHECK(ax.three_points_per_line);
    CHECK(ax.three_lines_per_point);
    CHECK(ax.connected);
    CHECK(ax.girth == 12);
    CHECK(ax.diameter == 6);
    CHECK(ax.ok());
    // Lines are collinear triples of commuting points.
    std::set<uint8_t> point_set(pts.begin(), pts.end());
    for (const hexagon::HLine& l : lns) {
      CHECK((l.pts[0] ^ l.pts[1] ^ l.pts[2]) == 0);
      for (uint8_t v : l.pts) CHECK(point_set.count(v) == 1);
      CHECK(pauli::symplectic(l.pts[0], l.pts[1], 4) == 0);
    }
  }

  TEST_CASE("perturbed models fail the axioms") {
    std::vector<uint8_t> pts = hexagon::points();
    std::vector<hexagon::HLine> lns = hexagon::lines();
    std::vector<hexagon::HLine> broken = lns;
    broken.pop_back();
    CHECK(!hexagon::verify(pts, broken).ok());
    broken = lns;
    broken[0] = broken[1];
    CHECK(!hexagon::verify(pts, broken).ok());
  }

  TEST_CASE("every hexagon line is a pencil") {
    std::vector<polar::Plane> planes = polar::heptad_planes();
    pluck::Bijection bij(planes);
    std::set<std::vector<uint8_t>> cores;
    for (const hexagon::HLine& l : hexagon::lines()) {
      hexagon::LineInfo info = hexagon::classify(l, bij);
      CHECK(info.cls == hexagon::LineClass::Pencil);
      REQUIRE(info.core.size() == 3);
      // The core is a common line of the three heptads.
      for (uint8_t img : l.pts) {
        const polar::Plane& p = bij.plane_of(img);
        for (uint8_t v : info.core) CHECK((p.pmask >> v & 1) == 1);
      }
      cores.insert(info.core);
    }
    CHECK(cores.size() == 63);
  }

  TEST_CASE("worked lines classify as stated") {
    std::vector<polar::Plane> planes = polar::heptad_planes();
    pluck::Bijection bij(planes);
    hexagon::HLine seed = line_of(tables::kHexSeed);
    std::vector<hexagon::HLine> lns = hexagon::lines();
    CHECK(std::find(lns.begin(), lns.end(), seed) != lns.end());
    hexagon::LineInfo seed_info = hexagon::classify(seed, bij);
    CHECK(seed_info.cls == hexagon::LineClass::Pencil);
    std::set<uint8_t> want_core;
    for (std::string_view s : tables::kHexSeedCore)
      want_core.insert(uint8_t(pauli::parse(s, 3).v));
    CHECK(std::set<uint8_t>(seed_info.core.begin(), seed_info.core.end()) == want_core);

    hexagon::HLine star = line_of(tables::kHexStar);
    CHECK(std::find(lns.begin(), lns.end(), star) == lns.end());
    hexagon::LineInfo star_info = hexagon::classify(star, bij);
    CHECK(star_info.cls == hexagon::LineClass::PlaneStar);
    REQUIRE(star_info.core.size() == 1);
    CHECK(pauli::format(star_info.core[0], 3) == tables::kHexStarCore);
  }

  TEST_CASE("elliptic splits") {
    auto [sym, anti] = hexagon::elliptic_split(hexagon::axis());
    CHECK(sym.size() == 63);
    CHECK(anti.size() == 56);
    CHECK(sym == hexagon::points());
    for (uint8_t v : anti) CHECK(pauli::q0(v, 4) == 1);
    // Every antisymmetric class splits its quadric the same way.
    int antisymmetric = 0;
    for (uint32_t w = 1; w < 256; ++w) {
      if (pauli::q0(w, 4) == 0) continue;
      ++antisymmetric;
      auto [s, a] = hexagon::elliptic_split(uint8_t(w));
      CHECK(s.size() == 63);
      CHECK(a.size() == 56);
      for (uint8_t v : s) {
        CHECK(pauli::q0(v, 4) == 0);
        CHECK(pauli::symplectic(v, w, 4) == 0);
      }
    }
    CHECK(antisymmetric == 120);
  }
}
