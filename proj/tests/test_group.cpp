#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "heptad/clifford.hpp"
#include "heptad/group.hpp"
#include "heptad/pauli.hpp"
#include "heptad/tables.hpp"

using namespace heptad;

namespace {

uint8_t vec3(std::string_view s) { return uint8_t(pauli::parse(s, 3).v); }

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("generator shapes and orders") {
    CHECK(grp::element_order(grp::d_alpha()) == 7);
    CHECK(grp::element_order(grp::d_beta()) == 2);
    CHECK(grp::element_order(grp::d_gamma()) == 6);
    CHECK(grp::element_order(grp::r_alpha()) == 7);
    CHECK(grp::element_order(grp::r_beta()) == 2);
    CHECK(grp::element_order(grp::r_gamma()) == 6);
    for (const gf2::Mat& m : {grp::d_alpha(), grp::d_beta(), grp::d_gamma()})
      CHECK(grp::is_symplectic(m));
    for (const gf2::Mat& m : {grp::r_alpha(), grp::r_beta(), grp::r_gamma()})
      CHECK(grp::is_symplectic(m));
  }

  TEST_CASE("alpha cycles the generator labels") {
    gf2::Mat a = grp::d_alpha();
    for (int i = 1; i <= 7; ++i)
      CHECK(gf2::apply(cliff::gamma_vector(i), a) == cliff::gamma_vector(i % 7 + 1));
    // Pinned coordinate cycle of the first generator vector.
    uint32_t v = vec3("IIY");
    for (size_t k = 0; k < tables::kShiftVectorCycle.size(); ++k) {
      std::string bits;
      for (int b = 0; b < 6; ++b) bits += char('0' + (v >> b & 1));
      CHECK(bits == tables::kShiftVectorCycle[k]);
      v = gf2::apply(v, a);
    }
    CHECK(v == vec3("IIY"));
  }

  TEST_CASE("beta is the transvection along ZZX") {
    uint8_t w = vec3("ZZX");
    gf2::Mat t = grp::transvection(w);
    CHECK(t == grp::d_beta());
    CHECK(grp::element_order(t) == 2);
    int fixed = 0;
    for (uint8_t v = 1; v < 64; ++v) {
      bool fix = gf2::apply(v, t) == v;
      CHECK(fix == (pauli::symplectic(v, w, 3) == 0));
      fixed += fix;
    }
    CHECK(fixed == 31);
    for (const auto& [from, to] : tables::kTransvectionSwaps) {
      uint8_t u = cliff::vector_of(cliff::parse_label(from));
      uint8_t x = cliff::vector_of(cliff::parse_label(to));
      CHECK(gf2::apply(u, t) == x);
      CHECK(gf2::apply(x, t) == u);
    }
    // Every transvection is a symplectic involution.
    for (uint8_t v = 1; v < 64; ++v) {
      gf2::Mat tv = grp::transvection(v);
      CHECK(grp::is_symplectic(tv));
      CHECK(gf2::mul(tv, tv) == gf2::identity(6));
    }
  }

  TEST_CASE("presentation relators hold in both representations") {
    CHECK(grp::satisfies_presentation(grp::d_alpha(), grp::d_beta()));
    CHECK(grp::satisfies_presentation(grp::r_alpha(), grp::r_beta()));
    CHECK(!grp::satisfies_presentation(grp::d_alpha(), grp::d_gamma()));
  }

  TEST_CASE("closure sizes") {
    std::vector<gf2::Mat> d6 = {grp::d_alpha(), grp::d_beta()};
    grp::KeySet full6 = grp::closure(d6);
    CHECK(full6.size() == 1451520);
    std::vector<gf2::Mat> stab6 = {grp::d_alpha(), grp::d_gamma()};
    CHECK(grp::closure(stab6).size() == 12096);
    std::vector<gf2::Mat> stab8 = {grp::r_alpha(), grp::r_gamma()};
    grp::KeySet hex = grp::closure(stab8);
    CHECK(hex.size() == 12096);
    // Each 8x8 stabilizer element fixes the axis vector.
    uint32_t yiii = pauli::parse("YIII", 4).v;
    CHECK(grp::count_fixing(hex, 8, yiii) == 12096);
    // All transvections belong to the symplectic group.
    for (uint8_t v = 1; v < 64; ++v)
      CHECK(full6.contains(gf2::pack(grp::transvection(v))));
  }

  TEST_CASE("spin closure and its orbits") {
    std::vector<gf2::Mat> r = {grp::r_alpha(), grp::r_beta()};
    grp::KeySet spin = grp::closure(r);
    CHECK(spin.size() == 1451520);
    uint32_t yiii = pauli::parse("YIII", 4).v;
    CHECK(grp::count_fixing(spin, 8, yiii) == 12096);
    CHECK(grp::vector_orbit(r, yiii).size() == 120);
    CHECK(grp::vector_orbit(r, pauli::parse("XIII", 4).v).size() == 135);
    std::vector<gf2::Mat> d = {grp::d_alpha(), grp::d_beta()};
    CHECK(grp::vector_orbit(d, vec3("IIY")).size() == 63);
  }

  TEST_CASE("plane orbit is the whole context space") {
    std::vector<polar::Plane> planes = polar::heptad_planes();
    std::vector<gf2::Mat> d = {grp::d_alpha(), grp::d_beta()};
    std::vector<uint64_t> orbit = grp::plane_orbit(d, planes[0]);
    CHECK(orbit.size() == 135);
    std::set<uint64_t> masks;
    for (const polar::Plane& p : planes) masks.insert(p.pmask);
    for (uint64_t m : orbit) CHECK(masks.count(m) == 1);
  }

  TEST_CASE("word evaluation") {
    gf2::Mat a = grp::d_alpha(), b = grp::d_beta();
    CHECK(grp::evaluate_word("a7", a, b) == gf2::identity(6));
    CHECK(grp::evaluate_word("b2", a, b) == gf2::identity(6));
    CHECK(grp::evaluate_word("ab", a, b) == gf2::mul(a, b));
    CHECK(grp::evaluate_word("a'", a, b) == gf2::mpow(a, 6));
    CHECK(grp::evaluate_word("a3b2a4", a, b) == gf2::identity(6));
  }

  TEST_CASE("the stabilizer word agrees with gamma at subgroup level") {
    gf2::Mat w6 = grp::evaluate_word(grp::kGammaWord, grp::d_alpha(), grp::d_beta());
    gf2::Mat w8 = grp::evaluate_word(grp::kGammaWord, grp::r_alpha(), grp::r_beta());
    std::vector<gf2::Mat> stab6 = {grp::d_alpha(), grp::d_gamma()};
    std::vector<gf2::Mat> stab8 = {grp::r_alpha(), grp::r_gamma()};
    CHECK(grp::closure(stab6).contains(gf2::pack(w6)));
    CHECK(grp::closure(stab8).contains(gf2::pack(w8)));
    std::vector<gf2::Mat> gen6 = {grp::d_alpha(), w6};
    std::vector<gf2::Mat> gen8 = {grp::r_alpha(), w8};
    CHECK(grp::closure(gen6).size() == 12096);
    CHECK(grp::closure(gen8).size() == 12096);
    uint32_t yiii = pauli::parse("YIII", 4).v;
    CHECK(gf2::apply(yiii, w8) == yiii);
  }

  TEST_CASE("key set basics") {
    grp::KeySet s(16);
    CHECK(s.insert(42));
    CHECK(!s.insert(42));
    CHECK(s.contains(42));
    CHECK(!s.contains(7));
    for (uint64_t k = 1; k <= 100; ++k) s.insert(k * 12345);
    CHECK(s.size() == 101);
    std::vector<uint64_t> keys = s.sorted_keys();
    CHECK(keys.size() == 101);
    CHECK(std::is_sorted(keys.begin(), keys.end()));
  }
}
