#include "benford/digest.hpp"

namespace benford {

std::string Fnv1a64::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) {
    out.push_back(digits[(hash_ >> shift) & 0xF]);
  }
  return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
  Fnv1a64 h;
  h.update(bytes);
  return h.hex();
}

}  // namespace benford
