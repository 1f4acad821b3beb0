#include "heptad/clifford.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace heptad::cliff {

namespace {

struct Tables {
  std::array<uint8_t, 7> gamma;      // vector of generator i+1
  std::array<uint8_t, 64> to_label;  // vector -> label mask
  std::array<uint8_t, 128> to_vec;   // label mask -> vector

  Tables() {
    for (int i = 0; i < 7; ++i) gamma[i] = uint8_t(pauli::parse(kGammaLabels[i], 3).v);
    to_label.fill(0);
    to_vec.fill(0);
    for (int m = 1; m < 128; ++m) {
      if (std::popcount(unsigned(m)) > 3) continue;
      uint8_t v = 0;
      for (int i = 0; i < 7; ++i)
        if (m >> i & 1) v ^= gamma[i];
      assert(v != 0 && to_label[v] == 0 && "generator products must label 63 distinct classes");
      to_label[v] = uint8_t(m);
      to_vec[m] = v;
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

uint8_t gamma_vector(int i) {
  assert(i >= 1 && i <= 7);
  return tables().gamma[i - 1];
}

uint8_t label_of(uint8_t v) {
  assert(v >= 1 && v <= 63);
  return tables().to_label[v];
}

uint8_t vector_of(uint8_t label) {
  assert(label > 0 && label < 128 && label_size(label) <= 3);
  return tables().to_vec[label];
}

uint8_t product_label(uint8_t l1, uint8_t l2) {
  uint8_t m = (l1 ^ l2) & 0x7f;
  if (std::popcount(uint32_t(m)) > 3) m ^= 0x7f;
  return m;
}

std::string label_string(uint8_t label) {
  std::string s;
  for (int i = 0; i < 7; ++i)
    if (label >> i & 1) s += char('1' + i);
  return s;
}

uint8_t parse_label(std::string_view s) {
  uint8_t m = 0;
  for (char c : s) {
    if (c < '1' || c > '7') throw std::invalid_argument("label digits must be 1..7");
    m |= uint8_t(1u << (c - '1'));
  }
  if (m == 0 || label_size(m) > 3) throw std::invalid_argument("label must have 1..3 digits");
  return m;
}

std::vector<std::array<uint8_t, 7>> alpha_label_orbits() {
  auto shift = [](uint8_t m) { return uint8_t(((m << 1) | (m >> 6)) & 0x7f); };
  std::vector<std::array<uint8_t, 7>> orbits;
  std::array<bool, 128> seen{};
  for (int rep = 1; rep < 128; ++rep) {
    if (seen[rep] || std::popcount(unsigned(rep)) > 3) continue;
    std::array<uint8_t, 7> cyc{};
    uint8_t m = uint8_t(rep);
    for (int k = 0; k < 7; ++k) {
      cyc[k] = m;
      seen[m] = true;
      m = shift(m);
    }
    assert(m == rep && "shift orbits on labels have length 7");
    orbits.push_back(cyc);
  }
  assert(orbits.size() == 9);
  return orbits;
}

PlaneClass classify(const polar::Plane& p) {
  int sym = 0;
  for (uint8_t v : p.pts) sym += 1 - pauli::q0(v, 3);
  assert(sym == 3 || sym == 7);
  return sym == 7 ? PlaneClass::Steiner : PlaneClass::Mixed;
}

std::vector<uint16_t> planes_through(uint8_t v, const std::vector<polar::Plane>& planes) {
  std::vector<uint16_t> out;
  for (size_t i = 0; i < planes.size(); ++i)
    if (planes[i].pmask >> v & 1) out.push_back(uint16_t(i));
  return out;
}

}  // namespace heptad::cliff
