#include "heptad/group.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

namespace heptad::grp {

Mat d_alpha() {
  static const Mat m = gf2::from_rows(
      {"111000", "011000", "110000", "000111", "000110", "000011"});
  return m;
}

Mat d_beta() {
  static const Mat m = gf2::from_rows(
      {"100000", "010000", "111001", "110101", "110011", "000001"});
  return m;
}

Mat d_gamma() {
  static const Mat m = gf2::from_rows(
      {"000010", "001110", "100101", "110100", "101010", "001000"});
  return m;
}

Mat r_alpha() {
  static const Mat m = gf2::from_rows({"10000000", "01110000", "00110000", "01100000",
                                       "00001000", "00000111", "00000110", "00000011"});
  return m;
}

Mat r_beta() {
  static const Mat m = gf2::from_rows({"10000001", "01000001", "00100001", "00011110",
                                       "01101000", "10100100", "11000010", "00000001"});
  return m;
}

Mat r_gamma() {
  static const Mat m = gf2::from_rows({"00011010", "00000010", "00010110", "11001101",
                                       "10010010", "11101100", "01010010", "00010000"});
  return m;
}

Mat symplectic_form(int n) {
  Mat j{2 * n, 2 * n, {}};
  for (int i = 0; i < 2 * n; ++i) j.row[i] = uint8_t(1u << ((i + n) % (2 * n)));
  return j;
}

bool is_symplectic(const Mat& s) {
  assert(s.rows == s.cols && s.rows % 2 == 0);
  Mat j = symplectic_form(s.rows / 2);
  return mul(mul(s, j), transpose(s)) == j;
}

Mat transvection(uint8_t w) {
  assert(w >= 1 && w <= 63);
  Mat t = gf2::identity(6);
  for (int i = 0; i < 6; ++i)
    if (pauli::symplectic(1u << i, w, 3)) t.row[i] ^= w;
  return t;
}

int element_order(const Mat& m) {
  Mat id = gf2::identity(m.rows);
  Mat x = m;
  for (int k = 1; k <= 1 << 20; ++k) {
    if (x == id) return k;
    x = mul(x, m);
  }
  throw std::logic_error("element order exceeds bound");
}

Mat evaluate_word(std::string_view word, const Mat& a, const Mat& b) {
  Mat acc = gf2::identity(a.rows);
  size_t i = 0;
  while (i < word.size()) {
    char c = word[i++];
    if (c != 'a' && c != 'b') throw std::invalid_argument("word letters must be a or b");
    Mat g = c == 'a' ? a : b;
    if (i < word.size() && word[i] == '\'') {
      g = gf2::inverse(g);
      ++i;
    }
    int e = 0;
    while (i < word.size() && word[i] >= '0' && word[i] <= '9')
      e = e * 10 + (word[i++] - '0');
    if (e == 0) e = 1;
    acc = mul(acc, mpow(g, e));
  }
  return acc;
}

namespace {

uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

KeySet::KeySet(size_t expected) {
  size_t cap = std::bit_ceil(std::max<size_t>(expected * 2, 64));
  slots_.assign(cap, 0);
  mask_ = cap - 1;
}

bool KeySet::insert(uint64_t k) {
  assert(k != 0);
  if (count_ * 5 > slots_.size() * 3) {  // grow at 60% load
    KeySet bigger(slots_.size());
    for (uint64_t s : slots_)
      if (s) bigger.insert(s);
    *this = std::move(bigger);
  }
  size_t i = mix(k) & mask_;
  while (slots_[i]) {
    if (slots_[i] == k) return false;
    i = (i + 1) & mask_;
  }
  slots_[i] = k;
  ++count_;
  return true;
}

bool KeySet::contains(uint64_t k) const {
  size_t i = mix(k) & mask_;
  while (slots_[i]) {
    if (slots_[i] == k) return true;
    i = (i + 1) & mask_;
  }
  return false;
}

std::vector<uint64_t> KeySet::sorted_keys() const {
  std::vector<uint64_t> out;
  out.reserve(count_);
  for (uint64_t s : slots_)
    if (s) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

KeySet closure(std::span<const Mat> gens) {
  assert(!gens.empty());
  int dim = gens[0].rows;
  KeySet seen(1u << 21);
  std::vector<uint64_t> queue;
  uint64_t id = gf2::pack(gf2::identity(dim));
  seen.insert(id);
  queue.push_back(id);
  for (size_t head = 0; head < queue.size(); ++head) {
    Mat m = gf2::unpack(queue[head], dim, dim);
    for (const Mat& g : gens) {
      uint64_t k = gf2::pack(mul(m, g));
      if (seen.insert(k)) queue.push_back(k);
    }
  }
  return seen;
}

std::vector<uint32_t> vector_orbit(std::span<const Mat> gens, uint32_t seed) {
  assert(!gens.empty());
  std::vector<bool> seen(1u << gens[0].rows, false);
  std::vector<uint32_t> queue{seed};
  seen[seed] = true;
  for (size_t head = 0; head < queue.size(); ++head)
    for (const Mat& g : gens) {
      uint32_t r = gf2::apply(queue[head], g);
      if (!seen[r]) {
        seen[r] = true;
        queue.push_back(r);
      }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<uint64_t> plane_orbit(std::span<const Mat> gens, const polar::Plane& seed) {
  std::unordered_set<uint64_t> seen{seed.pmask};
  std::vector<polar::Plane> queue{seed};
  for (size_t head = 0; head < queue.size(); ++head) {
    polar::Plane p = queue[head];
    for (const Mat& g : gens) {
      polar::Plane q = polar::plane_from_basis(uint8_t(gf2::apply(p.basis[0], g)),
                                               uint8_t(gf2::apply(p.basis[1], g)),
                                               uint8_t(gf2::apply(p.basis[2], g)));
      if (seen.insert(q.pmask).second) queue.push_back(q);
    }
  }
  std::vector<uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies_presentation(const Mat& a, const Mat& b) {
  Mat id = gf2::identity(a.rows);
  auto comm = [](const Mat& x, const Mat& y) {
    return mul(mul(gf2::inverse(x), gf2::inverse(y)), mul(x, y));
  };
  if (mpow(a, 7) != id || mpow(b, 2) != id) return false;
  if (mpow(mul(b, a), 9) != id) return false;
  if (mpow(mul(b, mpow(a, 2)), 12) != id) return false;
  if (mpow(comm(b, a), 3) != id) return false;
  return mpow(comm(b, mpow(a, 2)), 2) == id;
}

size_t count_fixing(const KeySet& group, int dim, uint32_t v) {
  size_t n = 0;
  for (uint64_t k : group.sorted_keys())
    if (gf2::apply(v, gf2::unpack(k, dim, dim)) == v) ++n;
  return n;
}

}  // namespace heptad::grp
