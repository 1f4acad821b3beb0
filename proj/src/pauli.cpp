#include "heptad/pauli.hpp"

#include <stdexcept>

namespace heptad::pauli {

Op product(Op x, Op y, int n) {
  Op r;
  r.v = x.v ^ y.v;
  r.sign = uint8_t(x.sign ^ y.sign ^ gf2::parity(amask(y.v, n) & bmask(x.v, n)));
  return r;
}

Op parse(std::string_view label, int* width) {
  uint8_t sign = 0;
  if (!label.empty() && (label[0] == '+' || label[0] == '-')) {
    sign = label[0] == '-';
    label.remove_prefix(1);
  }
  if (label.empty() || label.size() > 16)
    throw std::invalid_argument("operator label must have 1..16 letters");
  int n = int(label.size());
  uint32_t v = 0;
  for (int i = 0; i < n; ++i) {
    switch (label[i]) {
      case 'I': break;
      case 'X': v |= 1u << (n + i); break;
      case 'Z': v |= 1u << i; break;
      case 'Y': v |= (1u << i) | (1u << (n + i)); break;
      default:
        throw std::invalid_argument(std::string("unknown letter '") + label[i] +
                                    "' in operator label");
    }
  }
  if (width) *width = n;
  return Op{v, sign};
}

Op parse(std::string_view label, int n) {
  int got = 0;
  Op x = parse(label, &got);
  if (got != n)
    throw std::invalid_argument("operator label '" + std::string(label) + "' has width " +
                                std::to_string(got) + ", expected " + std::to_string(n));
  return x;
}

std::string format(Op x, int n) {
  static const char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  std::string s;
  if (x.sign) s += '-';
  for (int i = 0; i < n; ++i) s += kLetters[letter(x.v, n, i)];
  return s;
}

std::string format(uint32_t v, int n) { return format(Op{v, 0}, n); }

std::string bitstring(uint32_t v, int n) {
  std::string s = "(";
  for (int i = 0; i < 2 * n; ++i) s += char('0' + (v >> i & 1));
  return s + ")";
}

}  // namespace heptad::pauli
