#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "heptad/clifford.hpp"
#include "heptad/pauli.hpp"
#include "heptad/tables.hpp"
#include "oracle.hpp"

using namespace heptad;

TEST_SUITE("clifford") {
  TEST_CASE("generators pairwise anticommute") {
    for (int i = 1; i <= 7; ++i) {
      uint8_t vi = cliff::gamma_vector(i);
      CHECK(pauli::parse(cliff::kGammaLabels[size_t(i - 1)], 3).v == vi);
      CHECK(pauli::q0(vi, 3) == 1);  // each generator is antisymmetric
      oracle::Mat mi = oracle::rep(vi, 3, false);
      for (int j = i + 1; j <= 7; ++j)
        CHECK(oracle::anticommute(mi, oracle::rep(cliff::gamma_vector(j), 3, false)));
    }
    // The product of all seven is the identity class.
    uint8_t prod = 0;
    for (int i = 1; i <= 7; ++i) prod ^= cliff::gamma_vector(i);
    CHECK(prod == 0);
  }

  TEST_CASE("index sets label every class once") {
    std::set<uint8_t> seen;
    int sizes[4] = {0, 0, 0, 0};
    for (uint8_t v = 1; v < 64; ++v) {
      uint8_t l = cliff::label_of(v);
      CHECK(cliff::vector_of(l) == v);
      CHECK(seen.insert(l).second);
      int s = cliff::label_size(l);
      REQUIRE((s >= 1 && s <= 3));
      sizes[s]++;
      // Size parity decides symmetry: odd-size products of antisymmetric
      // anticommuting generators are antisymmetric at sizes 1, 2 and
      // symmetric at size 3.
      CHECK(pauli::q0(v, 3) == (s == 3 ? 0 : 1));
      CHECK(cliff::parse_label(cliff::label_string(l)) == l);
    }
    CHECK(sizes[1] == 7);
    CHECK(sizes[2] == 21);
    CHECK(sizes[3] == 35);
  }

  TEST_CASE("label product tracks the vector product") {
    for (uint8_t u = 1; u < 64; ++u)
      for (uint8_t v = 1; v < 64; ++v) {
        if (u == v) continue;
        uint8_t l = cliff::product_label(cliff::label_of(u), cliff::label_of(v));
        CHECK(cliff::vector_of(l) == (u ^ v));
      }
  }

  TEST_CASE("shift orbits match the pinned tables") {
    std::vector<std::array<uint8_t, 7>> orbits = cliff::alpha_label_orbits();
    REQUIRE(orbits.size() == 9);
    std::set<uint8_t> covered;
    for (const auto& o : orbits) {
      // Consecutive labels differ by the index shift i -> i+1 (mod 7).
      for (int k = 0; k < 7; ++k) {
        uint8_t cur = o[size_t(k)], nxt = o[size_t((k + 1) % 7)];
        uint8_t shifted = uint8_t(((cur << 1) | (cur >> 6)) & 0x7F);
        CHECK(shifted == nxt);
        covered.insert(cur);
      }
    }
    CHECK(covered.size() == 63);
    // The pinned label strings name the same cycles, up to starting point.
    for (const auto& row : tables::kShiftOrbitLabels) {
      uint8_t first = cliff::parse_label(row[0]);
      auto it = std::find_if(orbits.begin(), orbits.end(), [&](const auto& o) {
        return std::find(o.begin(), o.end(), first) != o.end();
      });
      REQUIRE(it != orbits.end());
      int off = int(std::find(it->begin(), it->end(), first) - it->begin());
      for (int k = 0; k < 7; ++k)
        CHECK((*it)[size_t((off + k) % 7)] == cliff::parse_label(row[size_t(k)]));
    }
    // Operator strings and label strings in the tables are the same classes.
    for (int r = 0; r < 9; ++r)
      for (int k = 0; k < 7; ++k)
        CHECK(cliff::label_of(uint8_t(pauli::parse(tables::kShiftOrbits[size_t(r)][size_t(k)], 3).v)) ==
              cliff::parse_label(tables::kShiftOrbitLabels[size_t(r)][size_t(k)]));
  }

  TEST_CASE("plane classification census") {
    std::vector<polar::Plane> planes = polar::heptad_planes();
    int mixed = 0, steiner = 0;
    for (const polar::Plane& p : planes) {
      int sym = 0;
      for (uint8_t v : p.pts) sym += pauli::q0(v, 3) == 0;
      if (cliff::classify(p) == cliff::PlaneClass::Steiner) {
        ++steiner;
        CHECK(sym == 7);
      } else {
        ++mixed;
        CHECK(sym == 3);
      }
    }
    CHECK(mixed == 105);
    CHECK(steiner == 30);
  }

  TEST_CASE("planes through the last generator") {
    std::vector<polar::Plane> planes = polar::heptad_planes();
    uint8_t yxz = uint8_t(pauli::parse("YXZ", 3).v);
    CHECK(cliff::gamma_vector(7) == yxz);
    std::vector<uint16_t> through = cliff::planes_through(yxz, planes);
    CHECK(through.size() == 15);
    for (uint16_t i : through) CHECK((planes[i].pmask >> yxz & 1) == 1);
    // Matches the pinned rows flagged as passing through it.
    int flagged = 0;
    for (const auto& row : tables::kBijection) flagged += row.through_yxz;
    CHECK(flagged == 15);
  }
}
