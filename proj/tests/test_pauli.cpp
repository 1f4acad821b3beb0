#include <stdexcept>
#include <string>

#include "doctest.h"
#include "heptad/pauli.hpp"
#include "oracle.hpp"

using namespace heptad;

TEST_SUITE("pauli") {
  TEST_CASE("parse and format round trip") {
    for (uint32_t v = 0; v < 64; ++v) {
      std::string s = pauli::format(v, 3);
      CHECK(s.size() == 3);
      pauli::Op op = pauli::parse(s, 3);
      CHECK(op.v == v);
      CHECK(op.sign == 0);
      CHECK(pauli::parse("+" + s, 3) == op);
      CHECK(pauli::parse("-" + s, 3) == pauli::Op{v, 1});
      CHECK(pauli::format(pauli::Op{v, 1}, 3) == "-" + s);
    }
    int width = 0;
    CHECK(pauli::parse("YIII", &width).v == pauli::parse("YIII", 4).v);
    CHECK(width == 4);
    CHECK_THROWS_AS(pauli::parse("AXZ", 3), std::invalid_argument);
    CHECK_THROWS_AS(pauli::parse("XX", 3), std::invalid_argument);
    CHECK_THROWS_AS(pauli::parse("", &width), std::invalid_argument);
  }

  TEST_CASE("letters and masks") {
    pauli::Op op = pauli::parse("ZXY", 3);
    CHECK(pauli::letter(op.v, 3, 0) == 2);
    CHECK(pauli::letter(op.v, 3, 1) == 1);
    CHECK(pauli::letter(op.v, 3, 2) == 3);
    CHECK(pauli::amask(op.v, 3) == 0b101);  // Z and Y carry a
    CHECK(pauli::bmask(op.v, 3) == 0b110);  // X and Y carry b
    CHECK(pauli::bitstring(op.v, 3) == "(101011)");
  }

  TEST_CASE("product sign matches the matrix model") {
    // Classes multiply as vectors; the sign exponent must reproduce the
    // product of the real representative matrices.
    for (uint32_t u = 0; u < 64; ++u) {
      oracle::Mat mu = oracle::rep(u, 3, false);
      for (uint32_t v = 0; v < 64; ++v) {
        oracle::Mat mv = oracle::rep(v, 3, false);
        pauli::Op p = pauli::product({u, 0}, {v, 0}, 3);
        CHECK(p.v == (u ^ v));
        oracle::Mat prod = oracle::mul(mu, mv);
        oracle::Mat target = oracle::rep(u ^ v, 3, false);
        if (p.sign)
          for (auto& c : target.a) c = oracle::Cx{-1, 0} * c;
        CHECK(prod == target);
      }
    }
  }

  TEST_CASE("explicit signs accumulate") {
    pauli::Op x = pauli::parse("-XYI", 3), y = pauli::parse("-ZZY", 3);
    pauli::Op base = pauli::product({x.v, 0}, {y.v, 0}, 3);
    CHECK(pauli::product(x, y, 3) == pauli::Op{base.v, base.sign});
    CHECK(pauli::product(x, {y.v, 0}, 3).sign == (base.sign ^ 1));
    // Squares: a class with k Y letters squares to (-1)^k I in the real
    // convention.
    for (uint32_t v = 0; v < 64; ++v) {
      pauli::Op sq = pauli::product({v, 0}, {v, 0}, 3);
      CHECK(sq.v == 0);
      CHECK(sq.sign == pauli::q0(v, 3));
    }
  }

  TEST_CASE("symplectic form is commutation") {
    for (uint32_t u = 0; u < 64; ++u) {
      oracle::Mat mu = oracle::rep(u, 3, false);
      for (uint32_t v = u; v < 64; ++v) {
        oracle::Mat mv = oracle::rep(v, 3, false);
        bool comm = oracle::commute(mu, mv);
        CHECK(pauli::symplectic(u, v, 3) == (comm ? 0 : 1));
        CHECK(pauli::symplectic(u, v, 3) == pauli::symplectic(v, u, 3));
        if (!comm) CHECK(oracle::anticommute(mu, mv));
      }
    }
  }

  TEST_CASE("quadratic form is matrix symmetry") {
    int symmetric = 0;
    for (uint32_t v = 1; v < 64; ++v) {
      bool sym = oracle::symmetric(oracle::rep(v, 3, false));
      CHECK(pauli::q0(v, 3) == (sym ? 0 : 1));
      symmetric += sym;
    }
    CHECK(symmetric == 35);
    // Polarization: q0(u+v) = q0(u) + q0(v) + <u,v>.
    for (uint32_t u = 0; u < 64; ++u)
      for (uint32_t v = 0; v < 64; ++v)
        CHECK(pauli::q0(u ^ v, 3) ==
              (pauli::q0(u, 3) ^ pauli::q0(v, 3) ^ pauli::symplectic(u, v, 3)));
    // Shifted forms count the elliptic/hyperbolic split at width 3.
    for (uint32_t w = 1; w < 64; ++w) {
      int zeros = 0;
      for (uint32_t v = 1; v < 64; ++v) zeros += pauli::qform(w, v, 3) == 0;
      CHECK(zeros == (pauli::q0(w, 3) ? 27 : 35));
    }
  }

  TEST_CASE("width four spot checks") {
    pauli::Op y = pauli::parse("YIII", 4);
    CHECK(y.v == 0b00010001);
    CHECK(pauli::q0(y.v, 4) == 1);
    CHECK(pauli::format(y.v, 4) == "YIII");
    int symmetric = 0;
    for (uint32_t v = 1; v < 256; ++v) symmetric += pauli::q0(v, 4) == 0;
    CHECK(symmetric == 135);
  }
}
